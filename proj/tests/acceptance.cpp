// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line; the
// process exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "multindex/laws.hpp"
#include "multindex/morphisms.hpp"
#include "multindex/words.hpp"

using namespace multindex;

namespace {

// Counts cases and remembers the first failure.
class Check {
 public:
  void operator()(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  std::size_t cases() const { return cases_; }
  const std::string& failure() const { return failure_; }

 private:
  std::size_t cases_ = 0;
  std::string failure_;
};

// ---- shared helpers ----

Rational q(const char* s) { return rational_from_string(s); }
Alpha A(std::initializer_list<std::uint32_t> e) { return Alpha(std::vector<std::uint32_t>(e)); }
NCPoly W(std::initializer_list<std::uint32_t> letters, const Rational& c = 1) { return NCPoly(Word(letters), c); }
RootedTree B(std::initializer_list<RootedTree> kids) { return RootedTree(std::vector<RootedTree>(kids)); }
HCKElem T(const RootedTree& t, const Rational& c = 1) { return HCKElem(Forest(t), c); }

Rational multinom(std::initializer_list<std::uint32_t> parts) {
  const std::vector<std::uint32_t> v(parts);
  return Rational(multinomial(v));
}

std::vector<Alpha> degree_zero(std::uint64_t max_length) {
  std::vector<Alpha> out;
  for (const Alpha& a : monomials_up_to(max_length, static_cast<std::uint32_t>(max_length)))
    if (a.degree() == 0) out.push_back(a);
  return out;
}

Alpha corolla_monomial(std::uint32_t n) { return n == 1 ? A({1}) : Alpha::generator(0, n - 1) + Alpha::generator(n - 1); }
Alpha ladder_monomial(std::uint32_t n) { return n == 1 ? A({1}) : Alpha::generator(0) + Alpha::generator(1, n - 1); }

Poly from_roots(const Rational& lead, std::initializer_list<int> roots) {
  Poly p = Poly::constant(lead);
  for (int r : roots) p = p * (Poly::x() - Poly::constant(r));
  return p;
}
Poly lin(int a, int b) { return Poly::monomial(1, a) + Poly::constant(b); }
Poly quad(int a, int b, int c) { return Poly::monomial(2, a) + Poly::monomial(1, b) + Poly::constant(c); }

// Monomials of the invariant and character tables, in table order.
const std::vector<Alpha>& table_monomials() {
  static const std::vector<Alpha> v = {
      A({1, 1}),    A({2, 0, 1}), A({1, 2}),    A({3, 0, 0, 1}), A({2, 1, 1}), A({1, 3}),
      A({4, 0, 0, 0, 1}), A({3, 1, 0, 1}), A({3, 0, 2}), A({2, 2, 1}), A({1, 4}),
  };
  return v;
}

// ---- 1: composition ----

void composition(Check& c) {
  const std::uint32_t r = 2;
  for (std::uint32_t i = 0; i <= r; ++i)
    for (std::uint32_t j = 0; j <= r; ++j)
      for (std::uint32_t k = 0; k <= r; ++k)
        for (std::uint32_t l = 0; l <= r; ++l)
          for (std::uint32_t m = 0; m <= r; ++m) {
            const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
                                   std::to_string(l) + "," + std::to_string(m) + ")";
            const NCPoly one[] = {W({j})};
            c(compose(Word{i}, one) == W({i + j}), "X_i o X_j at " + at);

            const NCPoly two[] = {W({k}), W({l})};
            c(compose(Word{i, j}, two) == W({i + k, j + l}), "X_iX_j o (X_k, X_l) at " + at);

            NCPoly left_split;
            for (std::uint32_t i1 = 0; i1 <= i; ++i1)
              left_split += W({k + i1, l + (i - i1), m + j}, multinom({i1, i - i1}));
            const NCPoly kl_m[] = {W({k, l}), W({m})};
            const Word kl_m_words[] = {Word{k, l}, Word{m}};
            c(compose(Word{i, j}, kl_m) == left_split, "X_iX_j o (X_kX_l, X_m) at " + at);
            c(compose_multinomial(Word{i, j}, kl_m_words) == left_split, "multinomial route (X_kX_l, X_m) at " + at);

            NCPoly right_split;
            for (std::uint32_t j1 = 0; j1 <= j; ++j1)
              right_split += W({k + i, l + j1, m + (j - j1)}, multinom({j1, j - j1}));
            const NCPoly k_lm[] = {W({k}), W({l, m})};
            const Word k_lm_words[] = {Word{k}, Word{l, m}};
            c(compose(Word{i, j}, k_lm) == right_split, "X_iX_j o (X_k, X_lX_m) at " + at);
            c(compose_multinomial(Word{i, j}, k_lm_words) == right_split, "multinomial route (X_k, X_lX_m) at " + at);
          }
  const NCPoly a[] = {W({1, 0}), W({0})};
  c(compose(Word{1, 0}, a) == W({2, 0, 0}) + W({1, 1, 0}), "X1X0 o (X1X0, X0)");
  const NCPoly b[] = {W({0}), W({1, 0})};
  c(compose(Word{1, 0}, b) == W({1, 1, 0}), "X1X0 o (X0, X1X0)");
}

// ---- 2: dimensions ----

void dimensions(Check& c) {
  const int table[5][10] = {
      {0, 0, 0, 0, 1, 1, 1, 1, 1, 1},
      {0, 0, 0, 1, 2, 3, 4, 5, 6, 7},
      {0, 0, 1, 3, 6, 10, 15, 21, 28, 36},
      {0, 1, 4, 10, 20, 35, 56, 84, 120, 165},
      {1, 5, 15, 35, 70, 126, 210, 330, 495, 715},
  };
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (std::int64_t k = -4; k <= 5; ++k)
      c(dim_nmi(n, k) == table[n - 1][k + 4], "table entry n=" + std::to_string(n) + " k=" + std::to_string(k));
  // Brute force: count letter sequences of length n with the right degree.
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (std::int64_t k = -4; k <= 4; ++k) {
      const std::int64_t weight = k + n - 1;
      unsigned long count = 0;
      if (weight >= 0) {
        std::vector<std::uint32_t> letters(n, 0);
        while (true) {
          if (Word(letters).degree() == k) ++count;
          std::size_t i = 0;
          while (i < n && letters[i] == weight) letters[i++] = 0;
          if (i == n) break;
          ++letters[i];
        }
      }
      const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      c(dim_nmi(n, k) == Integer(count), "brute force " + at);
      const Integer closed = weight < 0 ? Integer(0) : binomial(2 * n + k - 2, n - 1);
      c(dim_nmi(n, k) == closed, "binomial formula " + at);
    }
  for (std::uint32_t n = 1; n <= 8; ++n)
    c(dim_nmi(n, 0) == binomial(2 * n - 2, n - 1), "degree zero n=" + std::to_string(n));
}

// ---- 3: coproduct fixtures ----

using WKey = WordTensorKey;

void word_coproducts(Check& c) {
  const std::uint32_t r = 2;
  auto add = [](WordTensor& t, Word left, std::vector<Word> right, const Rational& v) {
    t.add(WKey{std::move(left), std::move(right)}, v);
  };
  for (std::uint32_t m = 0; m <= r; ++m) {
    WordTensor e;
    for (std::uint32_t i = 0; i <= m; ++i) add(e, Word{i}, {Word{m - i}}, 1);
    c(expand_rows(delta_word(Word{m})) == e, "delta X_" + std::to_string(m));
    for (std::uint32_t n = 0; n <= r; ++n) {
      WordTensor e2;
      for (std::uint32_t i = 0; i <= m; ++i)
        for (std::uint32_t j = 0; j <= n; ++j) {
          add(e2, Word{i + j}, {Word{m - i, n - j}}, multinom({i, j}));
          add(e2, Word{i, j}, {Word{m - i}, Word{n - j}}, 1);
        }
      c(expand_rows(delta_word(Word{m, n})) == e2, "delta X_mX_n at " + std::to_string(m) + std::to_string(n));
      for (std::uint32_t p = 0; p <= r; ++p) {
        WordTensor e3;
        for (std::uint32_t i = 0; i <= m; ++i)
          for (std::uint32_t j = 0; j <= n; ++j)
            for (std::uint32_t k = 0; k <= p; ++k) {
              add(e3, Word{i + j + k}, {Word{m - i, n - j, p - k}}, multinom({i, j, k}));
              add(e3, Word{i + j, k}, {Word{m - i, n - j}, Word{p - k}}, multinom({i, j}));
              add(e3, Word{i, j + k}, {Word{m - i}, Word{n - j, p - k}}, multinom({j, k}));
              add(e3, Word{i, j, k}, {Word{m - i}, Word{n - j}, Word{p - k}}, 1);
            }
        c(expand_rows(delta_word(Word{m, n, p})) == e3,
          "delta X_mX_nX_p at " + std::to_string(m) + std::to_string(n) + std::to_string(p));
      }
    }
  }
}

// Forest monomial from blocks given as index lists; nullopt when an index is
// negative, so that terms with x_{<0} drop out.
std::optional<ForestMono> blocks(std::initializer_list<std::initializer_list<int>> bs) {
  std::vector<Alpha> out;
  for (const auto& b : bs) {
    Alpha a;
    for (int i : b) {
      if (i < 0) return std::nullopt;
      a += Alpha::generator(static_cast<std::uint32_t>(i));
    }
    out.push_back(a);
  }
  return ForestMono(out);
}

void cut_coproducts(Check& c) {
  auto add = [](STensor& t, std::optional<ForestMono> l, std::optional<ForestMono> r) {
    if (l && r) t.add({*l, *r}, 1);
  };
  const ForestMono one;
  for (int i = 0; i <= 2; ++i) {
    STensor e1;
    add(e1, blocks({{i}}), one);
    add(e1, one, blocks({{i}}));
    c(Delta_nmi(*blocks({{i}})) == e1, "Delta x_" + std::to_string(i));
    for (int j = 0; j <= 2; ++j) {
      STensor e2;
      add(e2, blocks({{i, j}}), one);
      add(e2, one, blocks({{i, j}}));
      add(e2, blocks({{i - 1}}), blocks({{j}}));
      add(e2, blocks({{j - 1}}), blocks({{i}}));
      c(Delta_nmi(*blocks({{i, j}})) == e2, "Delta x_ix_j at " + std::to_string(i) + std::to_string(j));
      for (int k = 0; k <= 2; ++k) {
        STensor e3;
        add(e3, blocks({{i, j, k}}), one);
        add(e3, one, blocks({{i, j, k}}));
        add(e3, blocks({{i - 1}}), blocks({{j, k}}));
        add(e3, blocks({{j - 1}}), blocks({{i, k}}));
        add(e3, blocks({{k - 1}}), blocks({{i, j}}));
        add(e3, blocks({{j - 1, k}}), blocks({{i}}));
        add(e3, blocks({{j, k - 1}}), blocks({{i}}));
        add(e3, blocks({{i - 1, k}}), blocks({{j}}));
        add(e3, blocks({{i, k - 1}}), blocks({{j}}));
        add(e3, blocks({{i - 1, j}}), blocks({{k}}));
        add(e3, blocks({{i, j - 1}}), blocks({{k}}));
        add(e3, blocks({{i - 2}}), blocks({{j}, {k}}));
        add(e3, blocks({{j - 2}}), blocks({{i}, {k}}));
        add(e3, blocks({{k - 2}}), blocks({{i}, {j}}));
        c(Delta_nmi(*blocks({{i, j, k}})) == e3,
          "Delta x_ix_jx_k at " + std::to_string(i) + std::to_string(j) + std::to_string(k));
      }
    }
  }
}

void coproducts(Check& c) {
  word_coproducts(c);
  cut_coproducts(c);
}

// ---- 4: forest map ----

void forest_map(Check& c) {
  const RootedTree dot = leaf();
  c(psi(A({1})) == T(dot), "x0");
  c(psi(A({1, 1})) == T(ladder(2)), "x1x0");
  c(psi(A({2, 0, 1})) == T(corolla(3)), "x2x0^2");
  c(psi(A({2, 1, 1})) == T(B({dot, ladder(2)}), 2) + T(B({corolla(3)}), 1), "x2x1x0^2");
  for (std::uint32_t n = 1; n <= 5; ++n) {
    c(psi(corolla_monomial(n)) == T(corolla(n)), "corolla " + std::to_string(n));
    c(psi(ladder_monomial(n)) == T(ladder(n), Rational(factorial(n - 1))), "ladder " + std::to_string(n));
  }
  for (const Alpha& a : degree_zero(6))
    c(psi_by_symmetry(a) == psi_by_embeddings(a), "formulas disagree on " + to_string(a));
}

// ---- 5: coefficient tables ----

void coefficients(Check& c) {
  const std::vector<std::pair<Alpha, int>> ctable = {
      {A({1}), 1},          {A({1, 1}), 1},       {A({2, 0, 1}), 1},       {A({1, 2}), 2},
      {A({3, 0, 0, 1}), 1}, {A({2, 1, 1}), 1},    {A({1, 3}), 6},          {A({4, 0, 0, 0, 1}), 1},
      {A({3, 1, 0, 1}), 1}, {A({3, 0, 2}), 3},    {A({2, 2, 1}), 2},       {A({1, 4}), 24},
  };
  for (const auto& [a, v] : ctable) c(c_alpha(a) == v, "c of " + to_string(a));
  c(c_alpha(A({5, 0, 1, 0, 1})) == q("5/2"), "c = 5/2");
  c(c_alpha(A({5, 0, 0, 2})) == q("20/3"), "c = 20/3");

  const RootedTree dot = leaf();
  const std::vector<std::pair<RootedTree, int>> ptable = {
      {dot, 1},          {ladder(2), 1},          {corolla(3), 1},          {ladder(3), 1},
      {corolla(4), 1},   {B({dot, ladder(2)}), 2}, {B({corolla(3)}), 1},    {ladder(4), 1},
      {B({dot, dot, ladder(2)}), 3}, {B({dot, corolla(3)}), 2}, {B({dot, ladder(3)}), 2},
  };
  for (const auto& [t, p] : ptable) c(tree_stats(t).embeddings == p, "p of " + to_string(t));

  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& t : all_trees(n)) {
      const TreeStats s = tree_stats(t);
      const Integer mf = s.monomial.factorial();
      c(mf % s.symmetry == 0, "s does not divide M! for " + to_string(t));
      c(c_alpha(s.monomial) * Rational(s.embeddings * s.symmetry) == Rational(mf), "c p s = M! for " + to_string(t));
    }
}

// ---- 6: polynomial invariants ----

void invariants(Check& c) {
  const RootedTree dot = leaf();
  const std::vector<std::pair<RootedTree, Poly>> ck = {
      {dot, Poly::x()},
      {ladder(2), from_roots(q("1/2"), {0, 1})},
      {corolla(3), from_roots(q("1/6"), {0, 1}) * lin(2, -1)},
      {ladder(3), from_roots(q("1/6"), {0, 1, 2})},
      {corolla(4), from_roots(q("1/4"), {0, 0, 1, 1})},
      {B({dot, ladder(2)}), from_roots(q("1/24"), {0, 1, 2}) * lin(3, -1)},
      {B({corolla(3)}), from_roots(q("1/12"), {0, 1, 1, 2})},
      {ladder(4), from_roots(q("1/24"), {0, 1, 2, 3})},
  };
  for (const auto& [t, p] : ck) c(phi_ck(t) == p, "tree invariant of " + to_string(t));

  const std::vector<Poly> mi = {
      from_roots(q("1/2"), {1, 0}),
      from_roots(q("1/6"), {1, 0}) * lin(2, -1),
      from_roots(q("1/3"), {1, 2, 0}),
      from_roots(q("1/4"), {1, 1, 0, 0}),
      from_roots(q("1/6"), {1, 2, 0}) * lin(2, -1),
      from_roots(q("1/4"), {1, 2, 3, 0}),
      from_roots(q("1/30"), {1, 0}) * quad(3, -3, -1) * lin(2, -1),
      from_roots(q("1/120"), {1, 2, 0}) * quad(42, -39, -1),
      from_roots(q("1/20"), {1, 2, 0}) * quad(8, -11, 1),
      from_roots(q("1/60"), {1, 2, 0}) * lin(11, -29) * lin(2, -1),
      from_roots(q("1/5"), {1, 2, 3, 4, 0}),
  };
  const auto& ms = table_monomials();
  for (std::size_t i = 0; i < ms.size(); ++i) c(phi_mi(ms[i]) == mi[i], "invariant of " + to_string(ms[i]));

  // Sums of squares start at 0^2, so the sequence 1^2 + ... + n^2 is read at n + 1.
  const Poly squares = phi_mi(A({2, 0, 1}));
  const Poly pairs = phi_mi(A({1, 1}));
  Rational acc = 0;
  for (int n = 1; n <= 10; ++n) {
    acc += n * n;
    c(squares(Rational(n + 1)) == acc, "squares at " + std::to_string(n));
    c(pairs(Rational(n)) == make_rational(n * (n - 1), 2), "pairs at " + std::to_string(n));
  }

  const char* btable[] = {"1", "1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0", "-691/2730"};
  for (std::uint32_t k = 0; k <= 12; ++k) c(bernoulli(k) == q(btable[k]), "bernoulli " + std::to_string(k));
  for (std::uint32_t n = 1; n <= 6; ++n) {
    // (1/n) sum_{i<n} (-1)^i binom(n, i) B_i X^{n-i}
    Poly f;
    for (std::uint32_t i = 0; i < n; ++i) {
      const Rational sign = i % 2 == 0 ? 1 : -1;
      f.add(n - i, sign * Rational(binomial(n, i)) * q(btable[i]) / Rational(n));
    }
    c(phi_mi(corolla_monomial(n)) == f, "power sum closed form n=" + std::to_string(n));
  }
}

// ---- 7: three routes ----

void routes(Check& c) {
  for (const Alpha& a : degree_zero(5)) {
    const Poly v = phi_mi(a, PhiRoute::via_ck);
    c(phi_mi(a, PhiRoute::fixed_point) == v, "fixed point route on " + to_string(a));
    c(phi_mi(a, PhiRoute::direct) == v, "direct route on " + to_string(a));
  }
}

// ---- 8: inverse character ----

void inverse_character(Check& c) {
  const std::vector<int> table = {1, -1, -2, 1, 3, 6, -1, -4, -6, -12, -24};
  const auto& ms = table_monomials();
  for (std::size_t i = 0; i < ms.size(); ++i) c(mu_mi(ms[i]) == table[i], "mu of " + to_string(ms[i]));
  c(mu_mi(A({3, 0, 2})) == -6, "mu of x2^2x0^3");
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const Rational sign = n % 2 == 0 ? 1 : -1;
    c(mu_mi(corolla_monomial(n)) == sign, "corolla family n=" + std::to_string(n));
    c(mu_mi(ladder_monomial(n)) == sign * Rational(factorial(n - 1)), "ladder family n=" + std::to_string(n));
  }
  for (const Alpha& a : monomials_up_to(5, 4))
    c(mu_mi(a) == phi_mi(a, PhiRoute::via_ck)(Rational(-1)), "mu vs invariant at -1 on " + to_string(a));
}

// ---- 9: antipode ----

void antipode(Check& c) {
  for (const Alpha& a : monomials_up_to(4, 4)) {
    const SElem s = antipode_closed(a);
    c(s == antipode_recursive(a), "closed vs recursive on " + to_string(a));
    // sum S(a') | a'' over Delta(a) equals eps_Delta(a) times the unit, which is 0 here.
    SElem conv;
    for (const auto& [k, coef] : Delta_nmi(a)) conv.add_scaled(bar_product(antipode_closed(k.first), SElem(k.second)), coef);
    c(conv.empty() && is_zero(eps_Delta(SElem(ForestMono(a)))), "S * Id on " + to_string(a));
  }
}

// ---- 10: Dyson-Schwinger ----

void dyson_schwinger(Check& c) {
  const RootedTree dot = leaf();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  for (int trial = 0; trial < 5; ++trial) {
    DSCoeffs f;
    for (int k = 0; k <= 5; ++k) {
      int n = num(rng);
      if (n == 0) n = 1;
      f.a.push_back(make_rational(n, den(rng)));
    }
    const DSSolution s = ds_solve(f, 5);
    auto entry = [&](const Alpha& a) {
      auto it = s.entries.find(a);
      return it == s.entries.end() ? HCKElem() : it->second;
    };
    const Rational a0 = f[0], a1 = f[1], a2 = f[2], a3 = f[3];
    c(entry(A({1})) == T(dot, a0), "x0");
    c(entry(A({1, 1})) == T(ladder(2), a1 * a0), "x1x0");
    c(entry(A({1, 2})) == T(ladder(3), a1 * a1 * a0), "x1^2x0");
    c(entry(A({2, 0, 1})) == T(corolla(3), a2 * a0 * a0), "x2x0^2");
    c(entry(A({1, 3})) == T(ladder(4), a1 * a1 * a1 * a0), "x1^3x0");
    c(entry(A({2, 1, 1})) == a2 * a1 * a0 * a0 * (T(B({dot, ladder(2)}), 2) + T(B({corolla(3)}))), "x2x1x0^2");
    c(entry(A({3, 0, 0, 1})) == T(corolla(4), a3 * a0 * a0 * a0), "x3x0^3");
    // (1/alpha!) prod (i! a_i)^{alpha_i} psi(x^alpha) through 5 vertices.
    for (const Alpha& a : degree_zero(5)) {
      Rational w = 1;
      for (std::uint32_t i = 0; i < a.support(); ++i)
        for (std::uint32_t k = 0; k < a[i]; ++k) w *= Rational(factorial(i)) * f[i];
      c(entry(a) == w / Rational(a.factorial()) * psi(a), "weighted forest map on " + to_string(a));
    }
  }
  DSCoeffs exp_f;
  for (std::uint32_t k = 0; k <= 5; ++k) exp_f.a.push_back(make_rational(1, factorial(k)));
  const DSSolution e = ds_solve(exp_f, 5);
  for (const Alpha& a : degree_zero(5)) {
    auto it = e.entries.find(a);
    c(it != e.entries.end() && it->second == make_rational(1, a.factorial()) * psi(a), "exp on " + to_string(a));
  }
}

// ---- 11: law suites ----

void law_suites(Check& c) {
  for (std::uint64_t seed = 0; seed <= 4; ++seed) {
    LawOptions opt;
    opt.seed = seed;
    opt.size = 4;
    for (const LawResult& r : run_laws(opt))
      c(r.passed, r.name + " seed " + std::to_string(seed) + ": " + r.failure);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"composition fixtures", composition},
      {"dimension table", dimensions},
      {"coproduct fixtures", coproducts},
      {"forest map fixtures", forest_map},
      {"coefficient tables", coefficients},
      {"polynomial invariants", invariants},
      {"three-route agreement", routes},
      {"inverse character", inverse_character},
      {"antipode", antipode},
      {"Dyson-Schwinger solutions", dyson_schwinger},
      {"law suites", law_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2zu %-28s %6zu cases %7.2fs%s%s\n", c.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first,
                c.cases(), secs, c.ok() ? "" : "  first failure: ", c.failure().c_str());
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
