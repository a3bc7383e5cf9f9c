#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "multindex/lincomb.hpp"
#include "multindex/monomials.hpp"
#include "multindex/poly.hpp"

namespace multindex {

/// Unordered rooted tree in canonical form: children sorted ascending.
class RootedTree {
 public:
  /// Single vertex.
  RootedTree() = default;
  explicit RootedTree(std::vector<RootedTree> children);

  const std::vector<RootedTree>& children() const { return children_; }
  std::size_t vertices() const { return size_; }
  std::size_t fertility() const { return children_.size(); }

  friend bool operator==(const RootedTree& a, const RootedTree& b);
  /// Vertex count first, then children lexicographically.
  friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b);

 private:
  std::vector<RootedTree> children_;
  std::size_t size_ = 1;
};

/// Multiset of rooted trees; empty is the unit 1.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<RootedTree> trees);
  explicit Forest(const RootedTree& t) : trees_{t} {}

  const std::vector<RootedTree>& trees() const { return trees_; }
  bool is_unit() const { return trees_.empty(); }
  std::size_t vertices() const;

  friend Forest operator*(const Forest& a, const Forest& b);
  friend bool operator==(const Forest&, const Forest&) = default;
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);

 private:
  std::vector<RootedTree> trees_;
};

using HCKElem = LinComb<Forest>;
using HCKTensor = LinComb<std::pair<Forest, Forest>>;

HCKElem operator*(const HCKElem& a, const HCKElem& b);
HCKTensor tensor_product(const HCKTensor& a, const HCKTensor& b);

RootedTree bplus(const Forest& f);
HCKElem bplus(const HCKElem& e);
RootedTree leaf();
/// L_n = B+^n(1).
RootedTree ladder(std::size_t n);
/// C_n = B+(leaf^{n-1}).
RootedTree corolla(std::size_t n);

struct TreeStats {
  Integer symmetry;   // s_T, order of the automorphism group
  Integer embeddings; // p_T, number of plane embeddings
  Alpha monomial;     // M(T), product of x_{fertility} over vertices
};

TreeStats tree_stats(const RootedTree& t);
Alpha fertility_monomial(const RootedTree& t);

/// All canonical trees with n >= 1 vertices, ascending.
std::vector<RootedTree> all_trees(std::size_t n);

/// All trees T with M(T) = x^a, ascending; empty unless deg(a) = 0.
std::vector<RootedTree> trees_with_monomial(const Alpha& a);

/// Some forest whose vertices have exactly the given fertilities. Throws
/// std::invalid_argument when the fertilities sum to more than n - 1.
Forest build_forest(const std::vector<std::uint32_t>& fertilities);

/// Admissible-cut coproduct, computed from the cocycle recursion
/// Delta(B+(x)) = 1 (x) B+(x) + (B+ (x) Id) Delta(x). Left leg: trunk.
HCKTensor delta_ck_cut(const RootedTree& t);
HCKTensor delta_ck_cut(const Forest& f);
HCKTensor delta_ck_cut(const HCKElem& e);

/// Contraction-extraction coproduct: sum over partitions of the vertices into
/// subtrees of (contracted tree) (x) (product of the subtrees).
HCKTensor delta_ck_contract(const RootedTree& t);
HCKTensor delta_ck_contract(const Forest& f);
HCKTensor delta_ck_contract(const HCKElem& e);

/// Algebra map with Phi(B+(g)) = L(Phi(g)).
Poly phi_ck(const RootedTree& t);
Poly phi_ck(const Forest& f);
Poly phi_ck(const HCKElem& e);

/// 1 when every tree is a single vertex.
Rational eps_delta_ck(const Forest& f);
Rational eps_delta_ck(const HCKElem& e);
/// Coefficient of the empty forest.
Rational eps_Delta_ck(const HCKElem& e);

/// "B[B[],B[B[]]]"; a forest joins its trees with " | "; the unit prints as "1".
std::string to_string(const RootedTree& t);
std::string to_string(const Forest& f);
std::string to_string(const HCKElem& e);

}  // namespace multindex
