#include "multindex/morphisms.hpp"

#include <functional>
#include <stdexcept>

#include "multindex/memo.hpp"

namespace multindex {

namespace {

/// Calls f on every gamma with 0 <= gamma <= beta componentwise.
void for_each_divisor(const Alpha& beta, const std::function<void(const Alpha&)>& f) {
  const auto& e = beta.exponents();
  std::vector<std::uint32_t> cur(e.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == e.size()) {
      f(Alpha(cur));
      return;
    }
    for (std::uint32_t k = 0; k <= e[i]; ++k) {
      cur[i] = k;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
}

/// Coefficients of a series G = sum_a g_a x^a defined by a fixed-point
/// equation in which g_a only needs coefficients of shorter monomials.
/// Powers G^i are extracted coefficientwise and memoized.
template <class V>
class FixedPointSeries {
 public:
  using Rule = std::function<V(const Alpha&, FixedPointSeries&)>;
  FixedPointSeries(V one, Rule rule) : one_(std::move(one)), rule_(std::move(rule)) {}

  V coefficient(const Alpha& a) {
    return coeffs_.get_or_compute(a, [&] { return rule_(a, *this); });
  }

  /// [x^beta] G^i.
  V power(std::uint32_t i, const Alpha& beta) {
    if (i == 0) return beta.is_unit() ? one_ : V();
    if (beta.length() < i) return V();
    if (i == 1) return coefficient(beta);
    return powers_.get_or_compute({i, beta}, [&] {
      V out{};
      for_each_divisor(beta, [&](const Alpha& gamma) {
        if (gamma.is_unit() || gamma == beta) return;
        out += coefficient(gamma) * power(i - 1, beta - gamma);
      });
      return out;
    });
  }

  /// sum over i with a_i > 0 of (1/i!) [x^{a - e_i}] G^i.
  V outer_sum(const Alpha& a) {
    V out{};
    for (std::uint32_t i = 0; i < a.support(); ++i) {
      if (a[i] == 0) continue;
      out += power(i, a - Alpha::generator(i)) * make_rational(1, factorial(i));
    }
    return out;
  }

 private:
  V one_;
  Rule rule_;
  MemoCache<Alpha, V> coeffs_;
  MemoCache<std::pair<std::uint32_t, Alpha>, V> powers_;
};

// P = L(sum_i (X_i/i!) P^i); phi_mi(x^a) = a! p_a.
FixedPointSeries<Poly>& invariant_series() {
  static FixedPointSeries<Poly> series(Poly::constant(1), [](const Alpha& a, FixedPointSeries<Poly>& s) {
    return summation(s.outer_sum(a));
  });
  return series;
}

// U = -sum_i (X_i/i!) U^i; mu(x^a) = a! u_a.
FixedPointSeries<Rational>& inverse_series() {
  static FixedPointSeries<Rational> series(Rational(1), [](const Alpha& a, FixedPointSeries<Rational>& s) {
    return Rational(-s.outer_sum(a));
  });
  return series;
}

// e_k = eps_delta^{(x) k} o reduced Delta^{(k-1)}.
Rational iterated_counit(std::uint32_t k, const ForestMono& f) {
  static MemoCache<std::pair<std::uint32_t, ForestMono>, Rational> cache;
  if (k == 1) return eps_delta(f);
  return cache.get_or_compute({k, f}, [&] {
    Rational out = 0;
    for (const auto& [key, c] : reduced_Delta_nmi(f)) {
      const Rational right = eps_delta(key.second);
      if (is_zero(right)) continue;
      out += c * iterated_counit(k - 1, key.first) * right;
    }
    return out;
  });
}

Poly phi_direct(const Alpha& a) {
  const ForestMono f(a);
  Poly out;
  for (std::uint32_t k = 1; k <= a.length(); ++k) out.add_scaled(hilbert(k), iterated_counit(k, f));
  return out;
}

}  // namespace

Rational c_alpha(const Alpha& a) {
  Integer denom = 1;
  for (std::uint32_t i = 0; i < a.support(); ++i) {
    Integer f = factorial(i);
    for (std::uint32_t k = 0; k < a[i]; ++k) denom *= f;
  }
  return make_rational(a.factorial(), denom);
}

HCKElem psi_by_symmetry(const Alpha& a) {
  HCKElem out;
  if (a.degree() != 0) return out;
  const Integer af = a.factorial();
  for (const auto& t : trees_with_monomial(a)) out.add(Forest(t), make_rational(af, tree_stats(t).symmetry));
  return out;
}

HCKElem psi_by_embeddings(const Alpha& a) {
  HCKElem out;
  if (a.degree() != 0) return out;
  const Rational c = c_alpha(a);
  for (const auto& t : trees_with_monomial(a)) out.add(Forest(t), c * Rational(tree_stats(t).embeddings));
  return out;
}

HCKElem psi(const Alpha& a) {
  static MemoCache<Alpha, HCKElem> cache;
  return cache.get_or_compute(a, [&] {
    HCKElem s = psi_by_symmetry(a);
    if (!(s == psi_by_embeddings(a)))
      throw std::logic_error("forest map formulas disagree on " + to_string(a));
    return s;
  });
}

HCKElem psi(const ForestMono& f) {
  HCKElem out(Forest{}, 1);
  for (const auto& b : f.blocks()) out = out * psi(b);
  return out;
}

HCKElem psi(const SElem& e) {
  return e.map_linear<HCKElem>([](const ForestMono& f) { return psi(f); });
}

HCKTensor psi(const STensor& t) {
  HCKTensor out;
  for (const auto& [key, c] : t) {
    const HCKElem l = psi(key.first);
    if (l.empty()) continue;
    const HCKElem r = psi(key.second);
    for (const auto& [fl, cl] : l)
      for (const auto& [fr, cr] : r) out.add({fl, fr}, c * cl * cr);
  }
  return out;
}

Poly phi_mi(const Alpha& a, PhiRoute route) {
  switch (route) {
    case PhiRoute::via_ck:
      return phi_ck(psi(a));
    case PhiRoute::fixed_point:
      return invariant_series().coefficient(a) * Rational(a.factorial());
    case PhiRoute::direct:
      return phi_direct(a);
  }
  throw std::invalid_argument("unknown route");
}

Poly phi_mi(const ForestMono& f, PhiRoute route) {
  Poly out = Poly::constant(1);
  for (const auto& b : f.blocks()) out = out * phi_mi(b, route);
  return out;
}

Poly phi_mi(const SElem& e, PhiRoute route) {
  return e.map_linear<Poly>([route](const ForestMono& f) { return phi_mi(f, route); });
}

Rational mu_mi(const Alpha& a) { return inverse_series().coefficient(a) * Rational(a.factorial()); }

Rational mu_mi_via_phi(const Alpha& a) { return phi_mi(a)(Rational(-1)); }

Character mu_character() {
  return Character([](const Alpha& a) { return mu_mi(a); });
}

SElem antipode_closed(const Alpha& a) { return antipode_closed(ForestMono(a)); }

SElem antipode_closed(const ForestMono& f) { return contract_left(delta_nmi(f), mu_character()); }

SElem antipode_closed(const SElem& e) {
  return e.map_linear<SElem>([](const ForestMono& f) { return antipode_closed(f); });
}

DSSolution ds_solve(const DSCoeffs& coeffs, std::size_t max_vertices) {
  if (max_vertices == 0) throw std::invalid_argument("max_vertices must be at least 1");
  // Coefficient of T in F, from B+(T_1^{b_1} ... T_k^{b_k}) with distinct T_i:
  // a_r * (r!/b!) * prod coef(T_i)^{b_i}, r = b_1 + ... + b_k.
  std::map<RootedTree, Rational> coef;
  DSSolution out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    for (const auto& t : all_trees(n)) {
      const auto& kids = t.children();
      Rational c = coeffs[kids.size()] * Rational(factorial(static_cast<std::uint32_t>(kids.size())));
      for (std::size_t i = 0; i < kids.size();) {
        std::size_t j = i;
        while (j < kids.size() && kids[j] == kids[i]) ++j;
        const Rational& ck = coef.at(kids[i]);
        for (std::size_t m = i; m < j; ++m) c *= ck;
        c /= Rational(factorial(static_cast<std::uint32_t>(j - i)));
        i = j;
      }
      coef.emplace(t, c);
      if (!is_zero(c)) out.entries[fertility_monomial(t)].add(Forest(t), c);
    }
  }
  return out;
}

PsiMorphismReport check_psi_morphism(const Alpha& a) {
  PsiMorphismReport r;
  const HCKElem image = psi(a);
  r.cut = psi(Delta_nmi(a)) == delta_ck_cut(image);
  r.contract = psi(delta_nmi(a)) == delta_ck_contract(image);
  return r;
}

std::string to_string(PhiRoute r) {
  switch (r) {
    case PhiRoute::via_ck:
      return "via-ck";
    case PhiRoute::fixed_point:
      return "fixed-point";
    case PhiRoute::direct:
      return "direct";
  }
  return "?";
}

}  // namespace multindex
