#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multindex/lincomb.hpp"

namespace multindex {

/// A noncommutative multi-index X_{i1} ... X_{in}, n >= 1.
class Word {
 public:
  explicit Word(std::vector<std::uint32_t> letters);
  Word(std::initializer_list<std::uint32_t> letters) : Word(std::vector<std::uint32_t>(letters)) {}

  const std::vector<std::uint32_t>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  std::uint64_t weight() const;
  /// weight - length + 1; may be negative.
  std::int64_t degree() const;
  std::uint32_t operator[](std::size_t i) const { return letters_[i]; }

  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<std::uint32_t> letters_;
};

struct Grading {
  std::size_t length;
  std::uint64_t weight;
  std::int64_t degree;
  friend bool operator==(const Grading&, const Grading&) = default;
};

Grading grading(const Word& w);

/// Element of K<X_i | i in N>_+.
using NCPoly = LinComb<Word>;

/// Concatenation product.
NCPoly operator*(const NCPoly& a, const NCPoly& b);

/// Thrown when an operadic composition receives the wrong number of inputs.
class ArityError : public std::invalid_argument {
 public:
  ArityError(std::size_t expected, std::size_t actual);
  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// Derivation X_i -> X_{i+1}.
NCPoly derive(const NCPoly& p);
/// D^k.
NCPoly derive(const NCPoly& p, std::uint32_t k);
/// Dual derivation X_0 -> 0, X_i -> X_{i-1}.
NCPoly derive_dual(const NCPoly& p);
NCPoly derive_dual(const NCPoly& p, std::uint32_t k);

/// w o (P_1, ..., P_n) = D^{i_1}(P_1) ... D^{i_n}(P_n).
NCPoly compose(const Word& w, std::span<const NCPoly> args);
/// Linear in the first argument; every word of p must have length args.size().
NCPoly compose(const NCPoly& p, std::span<const NCPoly> args);

/// Closed multinomial form of composition on monomial inputs. Independent of
/// compose(); the two are cross-checked in the tests.
NCPoly compose_multinomial(const Word& w, std::span<const Word> args);

/// p o_i q: q in slot i (1-based), the unit X_0 elsewhere.
NCPoly partial_compose(const NCPoly& p, std::size_t slot, const NCPoly& q);

/// {w; P_1, ..., P_k}: sum over increasing slot choices. Zero when k > length(w);
/// returns w itself when k == 0.
NCPoly brace(const Word& w, std::span<const NCPoly> args);
NCPoly brace(const NCPoly& p, std::span<const NCPoly> args);

/// Pre-Lie product induced by the operad: P <| Q = {P; Q}.
NCPoly prelie_words(const NCPoly& p, const NCPoly& q);

/// Right action of a permutation on letters: (X_{i1}...X_{in})^s = X_{i_s(1)}...X_{i_s(n)}.
/// `sigma` holds s(1)..s(n) as 1-based values.
Word permute(const Word& w, std::span<const std::size_t> sigma);
NCPoly permute(const NCPoly& p, std::span<const std::size_t> sigma);

/// Kronecker pairing on words.
Rational pairing(const NCPoly& p, const NCPoly& q);

/// Number of words of length n >= 1 and degree k.
Integer dim_nmi(std::uint32_t n, std::int64_t k);

/// One row X_{j1}...X_{jk} (x) R_1 | ... | R_k of the word coproduct.
struct TensorWordLine {
  Word left;
  std::vector<NCPoly> right;
};

/// Basis key of T(K<X_i>_+)-valued tensors: left word and bar-separated words.
using WordTensorKey = std::pair<Word, std::vector<Word>>;
using WordTensor = LinComb<WordTensorKey>;

/// Coproduct dual to operadic composition, evaluated on one word.
std::vector<TensorWordLine> delta_word(const Word& w);
WordTensor expand_rows(std::span<const TensorWordLine> rows);

}  // namespace multindex
