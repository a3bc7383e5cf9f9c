#include "multindex/laws.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>
#include <numeric>
#include <random>
#include <span>
#include <tuple>

#include "multindex/io.hpp"
#include "multindex/morphisms.hpp"

namespace multindex {

namespace {

struct Ctx {
  std::mt19937_64 rng;
  std::size_t size;
  const LawOptions& opt;
  LawResult& result;

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++result.cases;
    if (!ok && result.passed) {
      result.passed = false;
      result.failure = describe();
    }
  }

  std::size_t pick(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }
  Rational small_rational() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return make_rational(num(rng), den(rng));
  }
};

// ---- random values ----

Word random_word(Ctx& c, std::size_t max_len, std::uint32_t max_letter) {
  std::vector<std::uint32_t> letters(c.pick(1, max_len));
  for (auto& l : letters) l = static_cast<std::uint32_t>(c.pick(0, max_letter));
  return Word(letters);
}

NCPoly random_ncpoly(Ctx& c, std::size_t max_len, std::uint32_t max_letter) {
  NCPoly p;
  for (std::size_t t = c.pick(1, 3); t > 0; --t) p.add(random_word(c, max_len, max_letter), c.small_rational());
  return p;
}

Alpha random_alpha(Ctx& c, std::size_t max_len, std::uint32_t max_index) {
  std::vector<std::uint32_t> e(max_index + 1, 0);
  for (std::size_t k = c.pick(1, max_len); k > 0; --k) ++e[c.pick(0, max_index)];
  return Alpha(e);
}

CPoly random_cpoly(Ctx& c, std::size_t max_len, std::uint32_t max_index) {
  CPoly p;
  for (std::size_t t = c.pick(1, 3); t > 0; --t) p.add(random_alpha(c, max_len, max_index), c.small_rational());
  return p;
}

Poly random_poly(Ctx& c, std::uint32_t degree) {
  Poly p;
  for (std::uint32_t k = 0; k <= degree; ++k) p.add(k, c.small_rational());
  return p;
}

RootedTree random_tree(Ctx& c, std::size_t max_vertices) {
  const auto trees = all_trees(c.pick(1, max_vertices));
  return trees[c.pick(0, trees.size() - 1)];
}

std::vector<RootedTree> trees_up_to(std::size_t n) {
  std::vector<RootedTree> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& t : all_trees(k)) out.push_back(t);
  return out;
}

std::vector<Alpha> degree_zero(std::size_t max_length) {
  std::vector<Alpha> out;
  for (const Alpha& a : monomials_up_to(max_length, static_cast<std::uint32_t>(max_length)))
    if (a.degree() == 0) out.push_back(a);
  return out;
}

std::uint32_t idx(std::size_t n) { return static_cast<std::uint32_t>(n); }

// ---- exact ----

void rota_baxter(Ctx& c) {
  const auto& L = c.opt.summation;
  for (int t = 0; t < 20; ++t) {
    const Poly p = random_poly(c, idx(c.pick(0, 6))), q = random_poly(c, idx(c.pick(0, 6)));
    c.check(L(p) * L(q) == L(L(p) * q) + L(p * L(q)) + L(p * q),
            [&] { return "p = " + to_string(p) + ", q = " + to_string(q); });
  }
}

void summation_values(Ctx& c) {
  for (int t = 0; t < 20; ++t) {
    const Poly p = random_poly(c, idx(c.pick(0, 6)));
    const Poly lp = c.opt.summation(p);
    Rational partial = 0;
    for (int n = 1; n <= 10; ++n) {
      partial += p(Rational(n - 1));
      c.check(lp(Rational(n)) == partial, [&] { return "p = " + to_string(p) + " at " + std::to_string(n); });
    }
  }
}

void summation_negative_one(Ctx& c) {
  for (int t = 0; t < 20; ++t) {
    const Poly p = random_poly(c, idx(c.pick(0, 6)));
    c.check(c.opt.summation(p)(Rational(-1)) == -p(Rational(-1)), [&] { return "p = " + to_string(p); });
  }
}

void summation_cocycle(Ctx& c) {
  for (int t = 0; t < 10; ++t) {
    const Poly p = random_poly(c, idx(c.pick(0, 6)));
    const Poly lp = c.opt.summation(p);
    for (int k = 1; k <= 6; ++k)
      for (int l = 1; l <= 6; ++l) {
        Rational tail = 0;
        for (int j = 0; j < k; ++j) tail += p(Rational(j + l));
        c.check(lp(Rational(k + l)) == lp(Rational(l)) + tail, [&] { return "p = " + to_string(p); });
      }
  }
}

void hilbert_binomial(Ctx& c) {
  for (std::uint32_t m = 0; m <= 12; ++m)
    for (std::uint32_t n = 0; n <= m; ++n)
      c.check(hilbert(n)(Rational(m)) == Rational(binomial(m, n)),
              [&] { return "H_" + std::to_string(n) + "(" + std::to_string(m) + ")"; });
}

void faulhaber(Ctx& c) {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    Poly closed;
    for (std::uint32_t i = 0; i < n; ++i) {
      Rational term = Rational(binomial(n, i)) * bernoulli(i) / Rational(n);
      if (i % 2) term = -term;
      closed.add(n - i, term);
    }
    c.check(c.opt.summation(Poly::monomial(n - 1)) == closed, [&] { return "n = " + std::to_string(n); });
  }
}

// ---- words ----

struct OperadSample {
  Word outer{0};
  std::vector<Word> mid;
  std::vector<NCPoly> mid_poly;
  std::vector<NCPoly> inner;
};

OperadSample operad_sample(Ctx& c) {
  OperadSample s;
  const std::uint32_t top = idx(std::min<std::size_t>(c.size, 3));
  s.outer = random_word(c, top, top);
  std::size_t total = 0;
  for (std::size_t k = 0; k < s.outer.length(); ++k) {
    s.mid.push_back(random_word(c, 2, 2));
    s.mid_poly.emplace_back(s.mid.back());
    total += s.mid.back().length();
  }
  for (std::size_t k = 0; k < total; ++k) s.inner.push_back(random_ncpoly(c, 2, 2));
  return s;
}

void operad_associativity(Ctx& c) {
  for (int t = 0; t < 30; ++t) {
    const OperadSample s = operad_sample(c);
    const NCPoly lhs = compose(compose(s.outer, s.mid_poly), s.inner);
    std::vector<NCPoly> nested;
    std::size_t offset = 0;
    for (const Word& m : s.mid) {
      nested.push_back(compose(m, std::span<const NCPoly>(s.inner).subspan(offset, m.length())));
      offset += m.length();
    }
    c.check(lhs == compose(NCPoly(s.outer), nested), [&] { return "outer " + to_string(s.outer); });
  }
}

void operad_unit(Ctx& c) {
  for (int t = 0; t < 30; ++t) {
    const NCPoly p = random_ncpoly(c, c.size, idx(c.size));
    const NCPoly one[] = {p};
    c.check(compose(Word{0}, one) == p, [&] { return "X0 o " + to_string(p); });
    const Word w = random_word(c, c.size, idx(c.size));
    const std::vector<NCPoly> units(w.length(), NCPoly(Word{0}));
    c.check(compose(w, units) == NCPoly(w), [&] { return to_string(w) + " o units"; });
  }
}

std::vector<std::size_t> block_permutation(std::span<const std::size_t> sigma, std::span<const std::size_t> sizes) {
  std::vector<std::size_t> start(sizes.size(), 1);
  for (std::size_t j = 1; j < sizes.size(); ++j) start[j] = start[j - 1] + sizes[j - 1];
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const std::size_t block = sigma[k] - 1;
    for (std::size_t t = 0; t < sizes[block]; ++t) out.push_back(start[block] + t);
  }
  return out;
}

void operad_equivariance(Ctx& c) {
  for (int t = 0; t < 30; ++t) {
    const OperadSample s = operad_sample(c);
    const std::size_t n = s.outer.length();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{1});
    std::shuffle(sigma.begin(), sigma.end(), c.rng);
    std::vector<std::size_t> inverse(n);
    for (std::size_t k = 0; k < n; ++k) inverse[sigma[k] - 1] = k + 1;
    std::vector<NCPoly> reordered;
    std::vector<std::size_t> sizes;
    for (std::size_t j = 0; j < n; ++j) {
      reordered.push_back(s.mid_poly[inverse[j] - 1]);
      sizes.push_back(s.mid[inverse[j] - 1].length());
    }
    const auto big = block_permutation(sigma, sizes);
    c.check(compose(NCPoly(permute(s.outer, sigma)), s.mid_poly) == permute(compose(NCPoly(s.outer), reordered), big),
            [&] { return "outer " + to_string(s.outer); });
  }
}

void operad_grading(Ctx& c) {
  for (int t = 0; t < 30; ++t) {
    const OperadSample s = operad_sample(c);
    std::int64_t deg = s.outer.degree();
    std::size_t len = 0;
    for (const Word& m : s.mid) {
      deg += m.degree();
      len += m.length();
    }
    for (const auto& [w, coef] : compose(s.outer, s.mid_poly))
      c.check(w.degree() == deg && w.length() == len, [&] { return "term " + to_string(w); });
  }
}

void novikov(Ctx& c) {
  const NCPoly x1x0{Word{1, 0}}, x0{Word{0}};
  const NCPoly la[] = {x1x0, x0}, ra[] = {x0, x1x0};
  const NCPoly left = compose(x1x0, la), right = compose(x1x0, ra);
  const std::size_t s12[] = {2, 1, 3}, s23[] = {1, 3, 2};
  c.check(left == NCPoly(Word{2, 0, 0}) + NCPoly(Word{1, 1, 0}), [] { return "X1X0 o (X1X0, X0)"; });
  c.check(right == NCPoly(Word{1, 1, 0}), [] { return "X1X0 o (X0, X1X0)"; });
  c.check(permute(right, s12) == right, [] { return "NAP relation"; });
  c.check(permute(left, s23) - permute(right, s23) == left - right, [] { return "pre-Lie relation"; });
}

void derivation_duality(Ctx& c) {
  for (int t = 0; t < 40; ++t) {
    const NCPoly p = random_ncpoly(c, c.size, idx(c.size)), q = random_ncpoly(c, c.size, idx(c.size));
    c.check(pairing(derive(p), q) == pairing(p, derive_dual(q)), [&] { return to_string(p) + " ; " + to_string(q); });
  }
}

void coproduct_duality(Ctx& c) {
  const std::uint32_t top = idx(std::min<std::size_t>(c.size, 3));
  for (int t = 0; t < 20; ++t) {
    const Word w = random_word(c, top, 2);
    for (const auto& [key, coef] : expand_rows(delta_word(w))) {
      std::vector<NCPoly> args(key.second.begin(), key.second.end());
      c.check(compose(key.first, args).coefficient(w) == coef, [&] { return "word " + to_string(w); });
    }
  }
}

void dimensions(Ctx& c) {
  const std::size_t nmax = std::min<std::size_t>(c.size, 4);
  for (std::uint32_t n = 1; n <= nmax; ++n)
    for (std::int64_t k = -4; k <= 4; ++k) {
      const std::int64_t weight = k + n - 1;
      Integer count = 0;
      if (weight >= 0) {
        std::vector<std::int64_t> letters(n, 0);
        for (;;) {
          if (std::accumulate(letters.begin(), letters.end(), std::int64_t{0}) == weight) ++count;
          std::size_t i = 0;
          while (i < n && letters[i] == weight) letters[i++] = 0;
          if (i == n) break;
          ++letters[i];
        }
      }
      c.check(dim_nmi(n, k) == count, [&] { return "n = " + std::to_string(n) + ", k = " + std::to_string(k); });
    }
  for (std::uint32_t n = 1; n <= 8; ++n)
    c.check(dim_nmi(n, 0) == binomial(2 * n - 2, n - 1), [&] { return "degree 0, n = " + std::to_string(n); });
}

// ---- pre-Lie ----

CPoly black(const CPoly& a, const CPoly& b) {
  const CPoly args[] = {b};
  return black_multi(a, args);
}

template <class Op>
void prelie_axiom(Ctx& c, Op op) {
  const std::uint32_t top = idx(std::min<std::size_t>(c.size, 3));
  for (int t = 0; t < 20; ++t) {
    const CPoly p = random_cpoly(c, top, top), q = random_cpoly(c, top, top), r = random_cpoly(c, top, top);
    c.check(op(op(p, q), r) - op(p, op(q, r)) == op(op(p, r), q) - op(p, op(r, q)),
            [&] { return to_string(p) + " ; " + to_string(q) + " ; " + to_string(r); });
  }
}

void prelie_triangle(Ctx& c) { prelie_axiom(c, [](const CPoly& a, const CPoly& b) { return prelie(a, b); }); }
void prelie_black(Ctx& c) { prelie_axiom(c, black); }

void prelie_abelianize(Ctx& c) {
  const std::uint32_t top = idx(std::min<std::size_t>(c.size, 3));
  for (int t = 0; t < 30; ++t) {
    const NCPoly p{random_word(c, top, top)}, q{random_word(c, top, top)};
    c.check(abelianize(prelie_words(p, q)) == prelie(abelianize(p), abelianize(q)),
            [&] { return to_string(p) + " ; " + to_string(q); });
  }
}

void prelie_multi_symmetry(Ctx& c) {
  const std::uint32_t top = idx(std::min<std::size_t>(c.size, 3));
  for (int t = 0; t < 20; ++t) {
    const CPoly p = random_cpoly(c, top, top), q = random_cpoly(c, 2, top), r = random_cpoly(c, 2, top);
    const CPoly qr[] = {q, r}, rq[] = {r, q};
    c.check(prelie_multi(p, qr) == prelie_multi(p, rq), [&] { return to_string(p); });
  }
}

void black_derivation(Ctx& c) {
  const std::uint32_t top = idx(std::min<std::size_t>(c.size, 3));
  for (int t = 0; t < 20; ++t) {
    const CPoly p = random_cpoly(c, top, top), q = random_cpoly(c, top, top);
    c.check(black(p, q) == derive_c(p) * q, [&] { return to_string(p) + " ; " + to_string(q); });
  }
}

void black_degree(Ctx& c) {
  const std::uint32_t top = idx(std::min<std::size_t>(c.size, 3));
  for (int t = 0; t < 30; ++t) {
    const Alpha a = random_alpha(c, top, top), b = random_alpha(c, top, top);
    for (const auto& [m, coef] : black(CPoly(a), CPoly(b)))
      c.check(m.degree() == a.degree() + b.degree(), [&] { return to_string(a) + " ; " + to_string(b); });
  }
}

// ---- multi-index bialgebras ----

using Leg = std::function<STensor(const ForestMono&)>;

// Both sides of coassociativity get large, so forests are interned to small
// integers and the coproduct of each distinct forest is computed once.
class ForestIds {
 public:
  explicit ForestIds(const Leg& cop) : cop_(cop) {}
  std::uint32_t id(const ForestMono& f) { return ids_.try_emplace(f, static_cast<std::uint32_t>(ids_.size())).first->second; }
  const std::vector<std::tuple<std::uint32_t, std::uint32_t, Rational>>& coproduct(const ForestMono& f) {
    const std::uint32_t i = id(f);
    auto it = cache_.find(i);
    if (it != cache_.end()) return it->second;
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Rational>> rows;
    for (const auto& [k, c] : cop_(f)) rows.emplace_back(id(k.first), id(k.second), c);
    return cache_.emplace(i, std::move(rows)).first->second;
  }

 private:
  const Leg& cop_;
  std::map<ForestMono, std::uint32_t> ids_;
  std::map<std::uint32_t, std::vector<std::tuple<std::uint32_t, std::uint32_t, Rational>>> cache_;
};

void coassociativity_nmi(Ctx& c, const Leg& cop, const char* name) {
  ForestIds ids(cop);
  using Key3 = std::array<std::uint32_t, 3>;
  struct Hash3 {
    std::size_t operator()(const Key3& k) const {
      return (std::uint64_t{k[0]} * 0x9E3779B97F4A7C15ULL) ^ (std::uint64_t{k[1]} << 21) ^ k[2];
    }
  };
  using Acc = std::unordered_map<Key3, Rational, Hash3>;
  for (const Alpha& a : monomials_up_to(c.size, idx(c.size))) {
    const STensor once = cop(ForestMono(a));
    Acc left, right;
    auto add = [](Acc& m, const Key3& k, const Rational& v) {
      auto [it, fresh] = m.try_emplace(k, v);
      if (!fresh) it->second += v;
    };
    for (const auto& [k, coef] : once) {
      const std::uint32_t l = ids.id(k.first), r = ids.id(k.second);
      for (const auto& [a1, a2, c2] : ids.coproduct(k.first)) add(left, {a1, a2, r}, coef * c2);
      for (const auto& [b1, b2, c2] : ids.coproduct(k.second)) add(right, {l, b1, b2}, coef * c2);
    }
    std::erase_if(left, [](const auto& kv) { return is_zero(kv.second); });
    std::erase_if(right, [](const auto& kv) { return is_zero(kv.second); });
    c.check(left == right, [&] { return std::string(name) + " on " + to_string(a); });
  }
}

void coassoc_delta(Ctx& c) {
  coassociativity_nmi(c, [](const ForestMono& f) { return delta_nmi(f); }, "delta");
}
void coassoc_Delta(Ctx& c) {
  coassociativity_nmi(c, [](const ForestMono& f) { return Delta_nmi(f); }, "Delta");
}

void counits_nmi(Ctx& c) {
  for (const Alpha& a : monomials_up_to(c.size, idx(c.size))) {
    const ForestMono f(a);
    SElem dl, dr, Dl, Dr;
    for (const auto& [k, coef] : delta_nmi(f)) {
      dl.add(k.second, coef * eps_delta(k.first));
      dr.add(k.first, coef * eps_delta(k.second));
    }
    for (const auto& [k, coef] : Delta_nmi(f)) {
      Dl.add(k.second, coef * eps_Delta(SElem(k.first)));
      Dr.add(k.first, coef * eps_Delta(SElem(k.second)));
    }
    const SElem id(f);
    c.check(dl == id && dr == id, [&] { return "delta counit on " + to_string(a); });
    c.check(Dl == id && Dr == id, [&] { return "Delta counit on " + to_string(a); });
  }
}

void homogeneity(Ctx& c) {
  for (const Alpha& a : monomials_up_to(c.size, idx(c.size))) {
    for (const auto& [k, coef] : delta_nmi(a))
      c.check(k.first.weight() + k.second.weight() == a.weight() && k.first.degree() + k.second.degree() == a.degree(),
              [&] { return "delta on " + to_string(a); });
    for (const auto& [k, coef] : Delta_nmi(a))
      c.check(k.first.length() + k.second.length() == a.length() && k.first.degree() + k.second.degree() == a.degree(),
              [&] { return "Delta on " + to_string(a); });
  }
}

void antipode_law(Ctx& c) {
  for (const Alpha& a : monomials_up_to(c.size, idx(c.size))) {
    SElem conv;
    for (const auto& [k, coef] : Delta_nmi(ForestMono(a)))
      conv.add_scaled(bar_product(antipode_recursive(k.first), SElem(k.second)), coef);
    c.check(conv.empty(), [&] { return to_string(a); });
  }
}

void compat_nmi(Ctx& c) {
  const std::size_t top = std::min<std::size_t>(c.size, 3);
  for (const Alpha& a : monomials_up_to(top, idx(top)))
    c.check(check_compat(SElem(ForestMono(a))).ok(), [&] { return to_string(a); });
}

void characters(Ctx& c) {
  const std::size_t top = std::min<std::size_t>(c.size, 3);
  const auto domain = monomials_up_to(top, idx(top));
  auto random_character = [&] {
    std::map<Alpha, Rational> table;
    for (const Alpha& a : domain) table[a] = c.small_rational();
    return Character([table](const Alpha& a) {
      auto it = table.find(a);
      return it == table.end() ? Rational(0) : it->second;
    });
  };
  const Character l = random_character(), m = random_character(), n = random_character();
  const Character lhs = convolve(convolve(l, m, Coproduct::Delta), n, Coproduct::delta);
  const Character rhs =
      convolve(convolve(l, n, Coproduct::delta), convolve(m, n, Coproduct::delta), Coproduct::Delta);
  for (const Alpha& a : domain) c.check(lhs(a) == rhs(a), [&] { return to_string(a); });
}

// ---- trees ----

RootedTree shuffled(Ctx& c, const RootedTree& t) {
  std::vector<RootedTree> kids;
  for (const auto& k : t.children()) kids.push_back(shuffled(c, k));
  std::shuffle(kids.begin(), kids.end(), c.rng);
  return RootedTree(std::move(kids));
}

void canonical(Ctx& c) {
  for (int t = 0; t < 30; ++t) {
    const RootedTree tree = random_tree(c, c.size + 3);
    c.check(shuffled(c, tree) == tree, [&] { return to_string(tree); });
  }
  for (std::size_t n = 1; n <= c.size + 2; ++n) {
    const auto ts = all_trees(n);
    c.check(std::adjacent_find(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return !(a < b); }) == ts.end(),
            [&] { return "order on " + std::to_string(n) + " vertices"; });
  }
}

void stats_identity(Ctx& c) {
  for (const auto& t : trees_up_to(std::min<std::size_t>(c.size + 3, 7))) {
    const TreeStats s = tree_stats(t);
    const Integer mf = s.monomial.factorial();
    c.check(mf % s.symmetry == 0, [&] { return "s_T divides a! on " + to_string(t); });
    c.check(c_alpha(s.monomial) * Rational(s.embeddings * s.symmetry) == Rational(mf),
            [&] { return "c p s = a! on " + to_string(t); });
  }
}

void monomial_trees(Ctx& c) {
  for (std::size_t n = 1; n <= std::min<std::size_t>(c.size + 2, 6); ++n) {
    std::map<Alpha, std::vector<RootedTree>> grouped;
    for (const auto& t : all_trees(n)) grouped[fertility_monomial(t)].push_back(t);
    for (const auto& [a, ts] : grouped) {
      const auto found = trees_with_monomial(a);
      c.check(found == ts, [&] { return "enumeration of " + to_string(a); });
      for (const auto& t : found)
        c.check(t.vertices() == a.length() && t.vertices() - 1 == a.weight(), [&] { return to_string(t); });
    }
  }
}

using CKLeg = std::function<HCKTensor(const Forest&)>;
using Tensor3 = LinComb<std::array<Forest, 3>>;

void coassociativity_ck(Ctx& c, const CKLeg& cop, const char* name) {
  for (const auto& t : trees_up_to(c.size + 1)) {
    const HCKTensor once = cop(Forest(t));
    Tensor3 left, right;
    for (const auto& [k, coef] : once) {
      for (const auto& [k2, c2] : cop(k.first)) left.add({k2.first, k2.second, k.second}, coef * c2);
      for (const auto& [k2, c2] : cop(k.second)) right.add({k.first, k2.first, k2.second}, coef * c2);
    }
    c.check(left == right, [&] { return std::string(name) + " on " + to_string(t); });
  }
}

void coassoc_cut(Ctx& c) {
  coassociativity_ck(c, [](const Forest& f) { return delta_ck_cut(f); }, "cut");
}
void coassoc_contract(Ctx& c) {
  coassociativity_ck(c, [](const Forest& f) { return delta_ck_contract(f); }, "contract");
}

void counits_ck(Ctx& c) {
  for (const auto& t : trees_up_to(c.size + 1)) {
    const Forest f(t);
    HCKElem a, b, d, e;
    for (const auto& [k, coef] : delta_ck_cut(f)) {
      a.add(k.second, coef * eps_Delta_ck(HCKElem(k.first)));
      b.add(k.first, coef * eps_Delta_ck(HCKElem(k.second)));
    }
    for (const auto& [k, coef] : delta_ck_contract(f)) {
      d.add(k.second, coef * eps_delta_ck(k.first));
      e.add(k.first, coef * eps_delta_ck(k.second));
    }
    const HCKElem id(f);
    c.check(a == id && b == id, [&] { return "cut counit on " + to_string(t); });
    c.check(d == id && e == id, [&] { return "contract counit on " + to_string(t); });
  }
}

void cocycle_ck(Ctx& c) {
  std::vector<Forest> forests{Forest()};
  for (std::size_t n = 1; n <= c.size; ++n)
    for (const auto& t : all_trees(n + 1)) forests.emplace_back(t.children());
  for (const auto& f : forests) {
    HCKTensor rhs({Forest(), Forest(bplus(f))}, 1);
    for (const auto& [k, coef] : delta_ck_cut(f)) rhs.add({Forest(bplus(k.first)), k.second}, coef);
    c.check(delta_ck_cut(Forest(bplus(f))) == rhs, [&] { return to_string(f); });
  }
}

void compat_ck(Ctx& c) {
  for (const auto& t : trees_up_to(c.size)) {
    const Forest f(t);
    Tensor3 lhs, rhs;
    for (const auto& [k, coef] : delta_ck_contract(f))
      for (const auto& [k2, c2] : delta_ck_cut(k.first)) lhs.add({k2.first, k2.second, k.second}, coef * c2);
    for (const auto& [k, coef] : delta_ck_cut(f))
      for (const auto& [a, ca] : delta_ck_contract(k.first))
        for (const auto& [b, cb] : delta_ck_contract(k.second))
          rhs.add({a.first, b.first, a.second * b.second}, coef * ca * cb);
    c.check(lhs == rhs, [&] { return to_string(t); });
  }
}

// Admissible cuts enumerated over edge subsets: at most one cut edge on every
// path to the root; the left leg is the part still holding the root.
struct FlatTree {
  std::vector<std::size_t> parent;
  std::vector<std::vector<std::size_t>> children;
};

void flatten(const RootedTree& t, std::size_t parent, FlatTree& out) {
  const std::size_t v = out.parent.size();
  out.parent.push_back(parent);
  out.children.emplace_back();
  if (v) out.children[parent].push_back(v);
  for (const auto& k : t.children()) flatten(k, v, out);
}

RootedTree regrow(const FlatTree& f, std::size_t v, std::uint64_t cut) {
  std::vector<RootedTree> kids;
  for (auto k : f.children[v])
    if (!((cut >> (k - 1)) & 1u)) kids.push_back(regrow(f, k, cut));
  return RootedTree(std::move(kids));
}

HCKTensor admissible_cuts(const RootedTree& t) {
  FlatTree f;
  flatten(t, 0, f);
  const std::size_t n = f.parent.size();
  HCKTensor out({Forest(), Forest(t)}, 1);
  for (std::uint64_t cut = 0; cut < (std::uint64_t{1} << (n - 1)); ++cut) {
    bool ok = true;
    for (std::size_t v = 1; v < n && ok; ++v) {
      if (!((cut >> (v - 1)) & 1u)) continue;
      for (std::size_t u = f.parent[v]; u != 0; u = f.parent[u])
        if ((cut >> (u - 1)) & 1u) ok = false;
    }
    if (!ok) continue;
    std::vector<RootedTree> pruned;
    for (std::size_t v = 1; v < n; ++v)
      if ((cut >> (v - 1)) & 1u) pruned.push_back(regrow(f, v, cut));
    out.add({Forest(regrow(f, 0, cut)), Forest(std::move(pruned))}, 1);
  }
  return out;
}

void cut_oracle(Ctx& c) {
  for (const auto& t : trees_up_to(c.size + 1))
    c.check(delta_ck_cut(t) == admissible_cuts(t), [&] { return to_string(t); });
}

void phi_families(Ctx& c) {
  for (std::uint32_t n = 1; n <= c.size + 1; ++n) {
    c.check(phi_ck(ladder(n)) == hilbert(n), [&] { return "ladder " + std::to_string(n); });
    const Poly p = phi_ck(corolla(n));
    Rational acc = 0;
    for (int k = 1; k <= 6; ++k) {
      Integer pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(k - 1), n - 1);
      acc += Rational(pw);
      c.check(p(Rational(k)) == acc, [&] { return "corolla " + std::to_string(n) + " at " + std::to_string(k); });
    }
  }
}

// ---- morphisms ----

void psi_formulas(Ctx& c) {
  for (const Alpha& a : degree_zero(std::min<std::size_t>(c.size + 2, 6)))
    c.check(psi_by_symmetry(a) == psi_by_embeddings(a), [&] { return to_string(a); });
}

void psi_degree(Ctx& c) {
  for (int t = 0; t < 40; ++t) {
    const Alpha a = random_alpha(c, c.size + 1, idx(c.size));
    if (a.degree() == 0) continue;
    c.check(psi(a).empty(), [&] { return to_string(a); });
  }
}

void psi_morphism(Ctx& c) {
  for (const Alpha& a : degree_zero(c.size)) {
    const auto r = check_psi_morphism(a);
    c.check(r.cut, [&] { return "cut coproduct on " + to_string(a); });
    c.check(r.contract, [&] { return "contraction coproduct on " + to_string(a); });
  }
}

void phi_routes(Ctx& c) {
  for (const Alpha& a : degree_zero(c.size + 1)) {
    const Poly v = phi_mi(a, PhiRoute::via_ck);
    c.check(phi_mi(a, PhiRoute::fixed_point) == v && phi_mi(a, PhiRoute::direct) == v,
            [&] { return to_string(a); });
  }
}

void phi_off_degree(Ctx& c) {
  for (int t = 0; t < 20; ++t) {
    const Alpha a = random_alpha(c, c.size + 1, idx(c.size));
    if (a.degree() == 0) continue;
    const Poly fp = phi_mi(a, PhiRoute::fixed_point);
    c.check(fp == phi_mi(a, PhiRoute::direct) && fp.empty() && phi_mi(a, PhiRoute::via_ck).empty(),
            [&] { return to_string(a); });
  }
}

void phi_multiplicative(Ctx& c) {
  for (int t = 0; t < 10; ++t) {
    const Alpha a = random_alpha(c, c.size, idx(c.size)), b = random_alpha(c, c.size, idx(c.size));
    const ForestMono f({a, b});
    for (auto r : {PhiRoute::via_ck, PhiRoute::fixed_point, PhiRoute::direct})
      c.check(phi_mi(f, r) == phi_mi(a, r) * phi_mi(b, r), [&] { return to_string(f) + " " + to_string(r); });
  }
}

void mu_routes(Ctx& c) {
  for (const Alpha& a : monomials_up_to(c.size + 1, idx(c.size)))
    c.check(mu_mi(a) == mu_mi_via_phi(a), [&] { return to_string(a); });
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const Rational sign = n % 2 == 0 ? 1 : -1;
    const Alpha cor = Alpha::generator(0, n - 1) + Alpha::generator(n - 1);
    const Alpha lad = Alpha::generator(0) + Alpha::generator(1, n - 1);
    c.check(mu_mi(cor) == sign, [&] { return to_string(cor); });
    c.check(mu_mi(lad) == sign * Rational(factorial(n - 1)), [&] { return to_string(lad); });
  }
}

void mu_inverse(Ctx& c) {
  const Character e = convolve(mu_character(), Character::counit_delta(), Coproduct::Delta);
  for (const Alpha& a : monomials_up_to(c.size, idx(c.size))) c.check(is_zero(e(a)), [&] { return to_string(a); });
}

void antipode_routes(Ctx& c) {
  for (const Alpha& a : monomials_up_to(c.size, idx(c.size)))
    c.check(antipode_closed(a) == antipode_recursive(a), [&] { return to_string(a); });
  for (int t = 0; t < 10; ++t) {
    const ForestMono f({random_alpha(c, 2, 2), random_alpha(c, 2, 2)});
    c.check(antipode_closed(f) == antipode_recursive(f), [&] { return to_string(f); });
  }
}

void ds_identity(Ctx& c) {
  for (int t = 0; t < 3; ++t) {
    DSCoeffs f;
    for (std::size_t k = 0; k <= c.size; ++k) f.a.push_back(c.small_rational());
    const DSSolution s = ds_solve(f, c.size + 1);
    for (const Alpha& a : degree_zero(c.size + 1)) {
      Rational w = 1;
      for (std::uint32_t i = 0; i < a.support(); ++i)
        for (std::uint32_t k = 0; k < a[i]; ++k) w *= f[i];
      HCKElem expected;
      for (const auto& tr : trees_with_monomial(a)) expected.add(Forest(tr), w * Rational(tree_stats(tr).embeddings));
      auto it = s.entries.find(a);
      const HCKElem got = it == s.entries.end() ? HCKElem() : it->second;
      c.check(got == expected, [&] { return to_string(a); });
    }
  }
  DSCoeffs ex;
  for (std::uint32_t k = 0; k <= c.size + 1; ++k) ex.a.push_back(make_rational(1, factorial(k)));
  const DSSolution e = ds_solve(ex, c.size + 1);
  for (const Alpha& a : degree_zero(c.size + 1)) {
    auto it = e.entries.find(a);
    c.check(it != e.entries.end() && it->second == make_rational(1, a.factorial()) * psi(a),
            [&] { return "exponential series at " + to_string(a); });
  }
}

// ---- text ----

void round_trip(Ctx& c) {
  for (int t = 0; t < 20; ++t) {
    const Poly p = random_poly(c, 5);
    c.check(parse_poly(to_string(p)) == p, [&] { return to_string(p); });
    const NCPoly w = random_ncpoly(c, c.size, idx(c.size));
    c.check(parse_ncpoly(to_string(w)) == w, [&] { return to_string(w); });
    const Alpha a = random_alpha(c, c.size, idx(c.size));
    c.check(parse_alpha(to_string(a)) == a, [&] { return to_string(a); });
    const ForestMono f({a, random_alpha(c, c.size, idx(c.size))});
    c.check(parse_forest_mono(to_string(f)) == f, [&] { return to_string(f); });
    SElem e(f, c.small_rational());
    e.add(ForestMono(), c.small_rational());
    c.check(parse_selem(to_string(e)) == e, [&] { return to_string(e); });
    const RootedTree tr = random_tree(c, c.size + 2);
    c.check(parse_tree(to_string(tr)) == tr, [&] { return to_string(tr); });
    const Forest fr({tr, random_tree(c, c.size + 1)});
    c.check(parse_forest(to_string(fr)) == fr, [&] { return to_string(fr); });
  }
}

struct Law {
  const char* name;
  void (*run)(Ctx&);
};

const std::vector<Law>& registry() {
  static const std::vector<Law> laws = {
      {"summation.rota_baxter", rota_baxter},
      {"summation.values", summation_values},
      {"summation.at_minus_one", summation_negative_one},
      {"summation.cocycle", summation_cocycle},
      {"summation.faulhaber", faulhaber},
      {"hilbert.binomial", hilbert_binomial},
      {"operad.associativity", operad_associativity},
      {"operad.unit", operad_unit},
      {"operad.equivariance", operad_equivariance},
      {"operad.grading", operad_grading},
      {"words.novikov", novikov},
      {"words.derivation_duality", derivation_duality},
      {"words.coproduct_duality", coproduct_duality},
      {"words.dimensions", dimensions},
      {"prelie.triangle", prelie_triangle},
      {"prelie.black", prelie_black},
      {"prelie.abelianize", prelie_abelianize},
      {"prelie.multi_symmetry", prelie_multi_symmetry},
      {"prelie.black_is_derivation_product", black_derivation},
      {"prelie.black_degree", black_degree},
      {"nmi.coassoc_delta", coassoc_delta},
      {"nmi.coassoc_Delta", coassoc_Delta},
      {"nmi.counits", counits_nmi},
      {"nmi.homogeneity", homogeneity},
      {"nmi.antipode", antipode_law},
      {"nmi.compatibility", compat_nmi},
      {"nmi.characters", characters},
      {"ck.canonical", canonical},
      {"ck.tree_stats", stats_identity},
      {"ck.monomial_trees", monomial_trees},
      {"ck.coassoc_cut", coassoc_cut},
      {"ck.coassoc_contract", coassoc_contract},
      {"ck.counits", counits_ck},
      {"ck.cocycle", cocycle_ck},
      {"ck.compatibility", compat_ck},
      {"ck.cut_oracle", cut_oracle},
      {"ck.invariant_families", phi_families},
      {"psi.formulas", psi_formulas},
      {"psi.degree", psi_degree},
      {"psi.morphism", psi_morphism},
      {"phi.routes", phi_routes},
      {"phi.off_degree", phi_off_degree},
      {"phi.multiplicative", phi_multiplicative},
      {"mu.routes", mu_routes},
      {"mu.inverse", mu_inverse},
      {"antipode.closed", antipode_routes},
      {"ds.identity", ds_identity},
      {"io.round_trip", round_trip},
  };
  return laws;
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ull;
  return h;
}

}  // namespace

std::vector<std::string> law_names() {
  std::vector<std::string> out;
  for (const auto& l : registry()) out.emplace_back(l.name);
  return out;
}

LawResult run_law(const std::string& name, const LawOptions& options) {
  for (const auto& l : registry()) {
    if (name != l.name) continue;
    LawResult r;
    r.name = name;
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(name_hash(name)), static_cast<std::uint32_t>(name_hash(name) >> 32)};
    Ctx c{std::mt19937_64(seq), std::max<std::size_t>(options.size, 1), options, r};
    try {
      l.run(c);
    } catch (const std::exception& e) {
      r.passed = false;
      r.failure = std::string("exception: ") + e.what();
    }
    return r;
  }
  throw std::invalid_argument("unknown law " + name);
}

std::vector<LawResult> run_laws(const LawOptions& options, const std::string& prefix) {
  std::vector<LawResult> out;
  for (const auto& l : registry())
    if (std::string_view(l.name).starts_with(prefix)) out.push_back(run_law(l.name, options));
  return out;
}

}  // namespace multindex
