#pragma once

#include <compare>
#include <functional>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "multindex/lincomb.hpp"
#include "multindex/words.hpp"

namespace multindex {

/// Exponent vector of a commutative monomial x^alpha. Trailing zeros are
/// trimmed; the zero vector stands for the unit and is not in Lambda.
class Alpha {
 public:
  Alpha() = default;
  explicit Alpha(std::vector<std::uint32_t> exponents);
  /// x_index^power.
  static Alpha generator(std::uint32_t index, std::uint32_t power = 1);

  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint32_t operator[](std::size_t i) const { return i < exps_.size() ? exps_[i] : 0u; }
  /// One past the largest index with a nonzero exponent.
  std::size_t support() const { return exps_.size(); }
  bool is_unit() const { return exps_.empty(); }

  std::uint64_t length() const { return length_; }
  std::uint64_t weight() const;
  std::int64_t degree() const;
  Integer factorial() const;

  Alpha& operator+=(const Alpha& other);
  friend Alpha operator+(Alpha a, const Alpha& b) { return a += b; }
  /// Componentwise difference; requires b <= a.
  friend Alpha operator-(const Alpha& a, const Alpha& b);
  /// Componentwise a <= b.
  bool divides(const Alpha& other) const;

  friend bool operator==(const Alpha&, const Alpha&) = default;
  /// Length first, then lexicographic on exponents.
  friend std::strong_ordering operator<=>(const Alpha& a, const Alpha& b);

 private:
  void trim();
  std::vector<std::uint32_t> exps_;
  std::uint64_t length_ = 0;
};

/// Element of K[x_i | i in N]_+.
using CPoly = LinComb<Alpha>;

CPoly operator*(const CPoly& a, const CPoly& b);

/// Sends each word to the monomial counting its letters.
Alpha abelianize(const Word& w);
CPoly abelianize(const NCPoly& p);

/// Shift derivation x_i -> x_{i+1}.
CPoly derive_c(const CPoly& p);
CPoly derive_c(const CPoly& p, std::uint32_t k);
/// Dual derivation x_0 -> 0, x_i -> x_{i-1}.
CPoly derive_dual_c(const CPoly& p);
CPoly derive_dual_c(const CPoly& p, std::uint32_t k);
/// d/dx_index.
CPoly partial(const CPoly& p, std::uint32_t index);

/// p <| q = sum_n D^n(q) dp/dx_n.
CPoly prelie(const CPoly& p, const CPoly& q);
/// Multi-argument extension of <|, symmetric in the arguments.
CPoly prelie_multi(const CPoly& p, std::span<const CPoly> args);
/// p <- (q_1, ..., q_k) = D^k(p) q_1 ... q_k.
CPoly black_multi(const CPoly& p, std::span<const CPoly> args);

/// Linear combination of ordered tuples of monomials.
using ShuffleTensor = LinComb<std::vector<Alpha>>;

/// Calls f(parts, coeff) for every ordered decomposition alpha = parts[0] + ... + parts[k-1]
/// with every part nonzero, coeff = alpha! / prod(parts[j]!).
void for_each_decomposition(const Alpha& alpha, std::size_t k,
                            const std::function<void(const std::vector<Alpha>&, const Integer&)>& f);

/// Iterated reduced shuffle coproduct into n+1 nonzero slots.
ShuffleTensor shuffle_iter(const CPoly& p, std::size_t n);

/// All nonzero monomials with length <= max_length and indices <= max_index,
/// in increasing Alpha order.
std::vector<Alpha> monomials_up_to(std::uint64_t max_length, std::uint32_t max_index);

/// "x2*x1^2*x0", descending indices; the unit prints as "1".
std::string to_string(const Alpha& a);
std::string to_string(const CPoly& p);

}  // namespace multindex
