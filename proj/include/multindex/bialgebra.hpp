#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "multindex/monomials.hpp"

namespace multindex {

/// Multiset of nonzero monomials x^{a_1} | ... | x^{a_k}; empty is the unit 1.
class ForestMono {
 public:
  ForestMono() = default;
  explicit ForestMono(std::vector<Alpha> blocks);
  explicit ForestMono(const Alpha& block) : ForestMono(std::vector<Alpha>{block}) {}

  /// Sorted ascending in the Alpha order.
  const std::vector<Alpha>& blocks() const { return blocks_; }
  bool is_unit() const { return blocks_.empty(); }
  std::uint64_t length() const { return length_; }
  std::uint64_t weight() const;
  std::int64_t degree() const;

  friend ForestMono operator|(const ForestMono& a, const ForestMono& b);
  friend bool operator==(const ForestMono&, const ForestMono&) = default;
  /// Total length first, then the block lists lexicographically.
  friend std::strong_ordering operator<=>(const ForestMono& a, const ForestMono& b);

 private:
  std::vector<Alpha> blocks_;
  std::uint64_t length_ = 0;
};

using SElem = LinComb<ForestMono>;
using STensor = LinComb<std::pair<ForestMono, ForestMono>>;
using STensor3 = LinComb<std::array<ForestMono, 3>>;

SElem bar_product(const SElem& a, const SElem& b);
/// Linear embedding of K[x_i]_+ as one-block forests.
SElem as_selem(const CPoly& p);
/// (a (x) b)(c (x) d) = (a|c) (x) (b|d).
STensor tensor_product(const STensor& a, const STensor& b);

/// Coproduct dual to operadic composition, on one block.
STensor delta_nmi(const Alpha& a);
STensor delta_nmi(const ForestMono& f);
STensor delta_nmi(const SElem& e);
/// Same coproduct from the unsymmetrized sum over ordered index tuples,
/// divided by k!. Slow; used to cross-check delta_nmi.
STensor delta_nmi_ordered(const Alpha& a);

/// Coproduct dual to the Grossman-Larson product of the <- pre-Lie structure.
STensor Delta_nmi(const Alpha& a);
STensor Delta_nmi(const ForestMono& f);
STensor Delta_nmi(const SElem& e);
/// Delta_nmi(f) - f (x) 1 - 1 (x) f.
STensor reduced_Delta_nmi(const ForestMono& f);

/// Counit of delta_nmi: 1 on forests of x_0 blocks only.
Rational eps_delta(const ForestMono& f);
Rational eps_delta(const SElem& e);
/// Counit of Delta_nmi: coefficient of the empty forest.
Rational eps_Delta(const SElem& e);

/// Antipode of (S, |, Delta_nmi) by the connected-bialgebra recursion.
SElem antipode_recursive(const Alpha& a);
SElem antipode_recursive(const ForestMono& f);
SElem antipode_recursive(const SElem& e);

/// Algebra map S -> K determined by its values on single blocks.
class Character {
 public:
  using BlockFn = std::function<Rational(const Alpha&)>;
  Character() = default;
  explicit Character(BlockFn on_block) : on_block_(std::move(on_block)) {}

  Rational operator()(const Alpha& a) const { return on_block_(a); }
  Rational operator()(const ForestMono& f) const;
  Rational operator()(const SElem& e) const;

  static Character counit_delta();
  static Character counit_Delta();

 private:
  BlockFn on_block_;
};

enum class Coproduct { Delta, delta };

/// (f (x) g) o coproduct; for Delta this is the product *, for delta it is the product (star).
Character convolve(const Character& f, const Character& g, Coproduct which);

/// Maps applied on tensor legs.
STensor map_left(const STensor& t, const std::function<SElem(const ForestMono&)>& f);
STensor map_right(const STensor& t, const std::function<SElem(const ForestMono&)>& f);
/// sum c * f(left) | right
SElem contract_left(const STensor& t, const Character& f);
SElem contract_right(const STensor& t, const Character& f);

struct CompatReport {
  bool comodule = false;  // (Delta (x) Id) o delta = m_{1,3,24} o (delta (x) delta) o Delta
  bool counit = false;    // (eps_Delta (x) Id) o delta = eps_Delta 1
  bool ok() const { return comodule && counit; }
};

CompatReport check_compat(const SElem& e);

std::string to_string(const ForestMono& f);
std::string to_string(const SElem& e);

}  // namespace multindex
