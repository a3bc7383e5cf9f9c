#include "multindex/trees.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "multindex/memo.hpp"

namespace multindex {

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
  std::sort(children_.begin(), children_.end());
  for (const auto& c : children_) size_ += c.size_;
}

bool operator==(const RootedTree& a, const RootedTree& b) {
  return a.size_ == b.size_ && a.children_ == b.children_;
}

std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(), b.children_.begin(),
                                                b.children_.end());
}

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) { std::sort(trees_.begin(), trees_.end()); }

std::size_t Forest::vertices() const {
  std::size_t s = 0;
  for (const auto& t : trees_) s += t.vertices();
  return s;
}

Forest operator*(const Forest& a, const Forest& b) {
  Forest out;
  out.trees_.reserve(a.trees_.size() + b.trees_.size());
  std::merge(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end(), std::back_inserter(out.trees_));
  return out;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
  if (auto c = a.vertices() <=> b.vertices(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end());
}

HCKElem operator*(const HCKElem& a, const HCKElem& b) {
  HCKElem out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) out.add(fa * fb, ca * cb);
  return out;
}

HCKTensor tensor_product(const HCKTensor& a, const HCKTensor& b) {
  HCKTensor out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add({ka.first * kb.first, ka.second * kb.second}, ca * cb);
  return out;
}

RootedTree bplus(const Forest& f) { return RootedTree(f.trees()); }

HCKElem bplus(const HCKElem& e) {
  HCKElem out;
  for (const auto& [f, c] : e) out.add(Forest(bplus(f)), c);
  return out;
}

RootedTree leaf() { return RootedTree(); }

RootedTree ladder(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ladders have at least one vertex");
  RootedTree t;
  for (std::size_t k = 1; k < n; ++k) t = RootedTree(std::vector<RootedTree>{t});
  return t;
}

RootedTree corolla(std::size_t n) {
  if (n == 0) throw std::invalid_argument("corollas have at least one vertex");
  return RootedTree(std::vector<RootedTree>(n - 1, leaf()));
}

TreeStats tree_stats(const RootedTree& t) {
  TreeStats out{1, 1, Alpha::generator(static_cast<std::uint32_t>(t.fertility()))};
  const auto& ch = t.children();
  std::uint64_t total = 0;
  Integer denom = 1;
  for (std::size_t i = 0; i < ch.size();) {
    std::size_t j = i;
    while (j < ch.size() && ch[j] == ch[i]) ++j;
    const std::uint64_t beta = j - i;
    const TreeStats sub = tree_stats(ch[i]);
    Integer sp, pp;
    mpz_pow_ui(sp.get_mpz_t(), sub.symmetry.get_mpz_t(), beta);
    mpz_pow_ui(pp.get_mpz_t(), sub.embeddings.get_mpz_t(), beta);
    out.symmetry *= sp * factorial(beta);
    out.embeddings *= pp;
    denom *= factorial(beta);
    for (std::uint64_t k = 0; k < beta; ++k) out.monomial += sub.monomial;
    total += beta;
    i = j;
  }
  out.embeddings = out.embeddings * factorial(total) / denom;
  return out;
}

Alpha fertility_monomial(const RootedTree& t) {
  Alpha out = Alpha::generator(static_cast<std::uint32_t>(t.fertility()));
  for (const auto& c : t.children()) out += fertility_monomial(c);
  return out;
}

namespace {

// Multisets of trees (nondecreasing picks from `pool`) accepted by `fits`.
void choose_multisets(const std::vector<RootedTree>& pool, std::size_t count,
                      const std::function<bool(const std::vector<RootedTree>&, bool complete)>& accept,
                      std::vector<RootedTree>& cur, std::size_t from, std::vector<Forest>& out) {
  if (cur.size() == count) {
    if (accept(cur, true)) out.emplace_back(cur);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    if (accept(cur, false)) choose_multisets(pool, count, accept, cur, i, out);
    cur.pop_back();
  }
}

std::vector<Forest> forests_of_size(std::size_t n);

std::vector<RootedTree> trees_of_size(std::size_t n) {
  static MemoCache<std::size_t, std::vector<RootedTree>> cache;
  return cache.get_or_compute(n, [&] {
    std::vector<RootedTree> out;
    if (n == 1) {
      out.push_back(leaf());
      return out;
    }
    for (const Forest& f : forests_of_size(n - 1)) out.push_back(bplus(f));
    std::sort(out.begin(), out.end());
    return out;
  });
}

std::vector<Forest> forests_of_size(std::size_t n) {
  static MemoCache<std::size_t, std::vector<Forest>> cache;
  return cache.get_or_compute(n, [&] {
    std::vector<RootedTree> pool;
    for (std::size_t k = 1; k <= n; ++k)
      for (auto& t : trees_of_size(k)) pool.push_back(t);
    std::vector<Forest> out;
    for (std::size_t count = 1; count <= n; ++count) {
      std::vector<RootedTree> cur;
      choose_multisets(
          pool, count,
          [n](const std::vector<RootedTree>& ts, bool complete) {
            std::size_t s = 0;
            for (const auto& t : ts) s += t.vertices();
            return complete ? s == n : s <= n;
          },
          cur, 0, out);
    }
    return out;
  });
}

}  // namespace

std::vector<RootedTree> all_trees(std::size_t n) {
  if (n == 0) return {};
  return trees_of_size(n);
}

std::vector<RootedTree> trees_with_monomial(const Alpha& a) {
  if (a.is_unit() || a.degree() != 0) return {};
  static MemoCache<Alpha, std::vector<RootedTree>> cache;
  return cache.get_or_compute(a, [&] {
    std::vector<RootedTree> out;
    for (std::uint32_t r = 0; r < a.support(); ++r) {
      if (a[r] == 0) continue;
      const Alpha rest = a - Alpha::generator(r);
      if (r == 0) {
        if (rest.is_unit()) out.push_back(leaf());
        continue;
      }
      // Candidate children: trees whose monomial divides the rest.
      std::vector<RootedTree> pool;
      for (const Alpha& b : monomials_up_to(rest.length(), static_cast<std::uint32_t>(rest.support() - 1))) {
        if (b.degree() != 0 || !b.divides(rest)) continue;
        for (auto& t : trees_with_monomial(b)) pool.push_back(t);
      }
      std::sort(pool.begin(), pool.end());
      std::vector<Alpha> monos;
      for (const auto& t : pool) monos.push_back(fertility_monomial(t));
      std::vector<Forest> picks;
      std::vector<RootedTree> cur;
      choose_multisets(
          pool, r,
          [&rest](const std::vector<RootedTree>& ts, bool complete) {
            Alpha s;
            for (const auto& t : ts) s += fertility_monomial(t);
            return complete ? s == rest : s.divides(rest);
          },
          cur, 0, picks);
      for (const Forest& f : picks) out.push_back(bplus(f));
    }
    std::sort(out.begin(), out.end());
    return out;
  });
}

Forest build_forest(const std::vector<std::uint32_t>& fertilities) {
  const std::uint64_t n = fertilities.size();
  const std::uint64_t sum = std::accumulate(fertilities.begin(), fertilities.end(), std::uint64_t{0});
  if (n == 0 ? sum > 0 : sum > n - 1)
    throw std::invalid_argument("fertilities sum to " + std::to_string(sum) + ", more than " +
                                std::to_string(n == 0 ? 0 : n - 1) + " edges");
  // Sorted ascending, every prefix of k vertices has fertility sum <= k - 1,
  // so enough roots are always available to graft.
  std::vector<std::uint32_t> order = fertilities;
  std::sort(order.begin(), order.end());
  std::vector<RootedTree> roots;
  for (auto k : order) {
    std::vector<RootedTree> kids(roots.end() - k, roots.end());
    roots.resize(roots.size() - k);
    roots.emplace_back(std::move(kids));
  }
  return Forest(std::move(roots));
}

HCKTensor delta_ck_cut(const RootedTree& t) {
  static MemoCache<RootedTree, HCKTensor> cache;
  return cache.get_or_compute(t, [&] {
    const HCKTensor below = delta_ck_cut(Forest(t.children()));
    HCKTensor out({Forest(), Forest(t)}, 1);
    for (const auto& [key, c] : below) out.add({Forest(bplus(key.first)), key.second}, c);
    return out;
  });
}

HCKTensor delta_ck_cut(const Forest& f) {
  HCKTensor out({Forest(), Forest()}, 1);
  for (const auto& t : f.trees()) out = tensor_product(out, delta_ck_cut(t));
  return out;
}

HCKTensor delta_ck_cut(const HCKElem& e) {
  HCKTensor out;
  for (const auto& [f, c] : e) out.add_scaled(delta_ck_cut(f), c);
  return out;
}

namespace {

// Preorder flattening: parent[v] < v for v > 0.
struct FlatTree {
  std::vector<std::size_t> parent;
  std::vector<std::vector<std::size_t>> children;
};

void flatten(const RootedTree& t, std::size_t parent, FlatTree& out) {
  const std::size_t v = out.parent.size();
  out.parent.push_back(parent);
  out.children.emplace_back();
  if (v != 0) out.children[parent].push_back(v);
  for (const auto& c : t.children()) flatten(c, v, out);
}

RootedTree rebuild(const std::vector<std::vector<std::size_t>>& children, std::size_t v) {
  std::vector<RootedTree> kids;
  for (auto c : children[v]) kids.push_back(rebuild(children, c));
  return RootedTree(std::move(kids));
}

}  // namespace

HCKTensor delta_ck_contract(const RootedTree& t) {
  static MemoCache<RootedTree, HCKTensor> cache;
  return cache.get_or_compute(t, [&] {
    FlatTree flat;
    flatten(t, 0, flat);
    const std::size_t n = flat.parent.size();
    HCKTensor out;
    // Bit v-1 of `kept` keeps the edge from v to its parent.
    for (std::uint64_t kept = 0; kept < (std::uint64_t{1} << (n - 1)); ++kept) {
      std::vector<std::size_t> top(n, 0);
      for (std::size_t v = 1; v < n; ++v) top[v] = ((kept >> (v - 1)) & 1u) ? top[flat.parent[v]] : v;
      std::vector<std::vector<std::size_t>> inner(n), outer(n);
      std::vector<RootedTree> blocks;
      for (std::size_t v = 1; v < n; ++v) {
        if (top[v] == v)
          outer[top[flat.parent[v]]].push_back(v);
        else
          inner[flat.parent[v]].push_back(v);
      }
      for (std::size_t v = 0; v < n; ++v)
        if (top[v] == v) blocks.push_back(rebuild(inner, v));
      out.add({Forest(rebuild(outer, 0)), Forest(std::move(blocks))}, 1);
    }
    return out;
  });
}

HCKTensor delta_ck_contract(const Forest& f) {
  HCKTensor out({Forest(), Forest()}, 1);
  for (const auto& t : f.trees()) out = tensor_product(out, delta_ck_contract(t));
  return out;
}

HCKTensor delta_ck_contract(const HCKElem& e) {
  HCKTensor out;
  for (const auto& [f, c] : e) out.add_scaled(delta_ck_contract(f), c);
  return out;
}

Poly phi_ck(const RootedTree& t) {
  static MemoCache<RootedTree, Poly> cache;
  return cache.get_or_compute(t, [&] { return summation(phi_ck(Forest(t.children()))); });
}

Poly phi_ck(const Forest& f) {
  Poly out = Poly::constant(1);
  for (const auto& t : f.trees()) out = out * phi_ck(t);
  return out;
}

Poly phi_ck(const HCKElem& e) {
  Poly out;
  for (const auto& [f, c] : e) out.add_scaled(phi_ck(f), c);
  return out;
}

Rational eps_delta_ck(const Forest& f) {
  for (const auto& t : f.trees())
    if (t.vertices() != 1) return 0;
  return 1;
}

Rational eps_delta_ck(const HCKElem& e) {
  Rational out = 0;
  for (const auto& [f, c] : e) out += c * eps_delta_ck(f);
  return out;
}

Rational eps_Delta_ck(const HCKElem& e) { return e.coefficient(Forest()); }

std::string to_string(const RootedTree& t) {
  std::string out = "B[";
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ',';
    out += to_string(t.children()[i]);
  }
  return out + "]";
}

std::string to_string(const Forest& f) {
  if (f.is_unit()) return "1";
  std::string out;
  for (const auto& t : f.trees()) {
    if (!out.empty()) out += " | ";
    out += to_string(t);
  }
  return out;
}

std::string to_string(const HCKElem& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [f, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (f.is_unit()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    if (f.trees().size() > 1)
      os << '(' << to_string(f) << ')';
    else
      os << to_string(f);
  }
  return os.str();
}

}  // namespace multindex
