#pragma once

#include <map>
#include <string>
#include <vector>

#include "multindex/bialgebra.hpp"
#include "multindex/poly.hpp"
#include "multindex/trees.hpp"

namespace multindex {

/// Forest map sending x^a to the trees with fertility monomial a.
/// Zero off degree 0. Both closed forms are evaluated and must agree.
HCKElem psi(const Alpha& a);
HCKElem psi(const ForestMono& f);
HCKElem psi(const SElem& e);
HCKTensor psi(const STensor& t);

/// a! * sum over M(T) = a of T / s_T.
HCKElem psi_by_symmetry(const Alpha& a);
/// c_a * sum over M(T) = a of p_T T.
HCKElem psi_by_embeddings(const Alpha& a);

/// prod a_i! / prod (i!)^{a_i}; not always an integer.
Rational c_alpha(const Alpha& a);

enum class PhiRoute { via_ck, fixed_point, direct };

/// Polynomial invariant of the multi-index double bialgebra.
Poly phi_mi(const Alpha& a, PhiRoute route = PhiRoute::fixed_point);
Poly phi_mi(const ForestMono& f, PhiRoute route = PhiRoute::fixed_point);
Poly phi_mi(const SElem& e, PhiRoute route = PhiRoute::fixed_point);

/// Convolution inverse of eps_delta, from U = -sum_i (X_i/i!) U^i.
Rational mu_mi(const Alpha& a);
/// Same value as phi_mi(a) evaluated at X = -1.
Rational mu_mi_via_phi(const Alpha& a);
Character mu_character();

/// (mu (x) Id) o delta_nmi.
SElem antipode_closed(const Alpha& a);
SElem antipode_closed(const ForestMono& f);
SElem antipode_closed(const SElem& e);

/// Coefficients a_0, ..., a_N of f = sum a_k h^k; zero beyond N.
struct DSCoeffs {
  std::vector<Rational> a;
  Rational operator[](std::size_t k) const { return k < a.size() ? a[k] : Rational(0); }
};

struct DSSolution {
  std::map<Alpha, HCKElem> entries;
};

/// T_a for every a with at most max_vertices letters, solving
/// F = B+(f(F)) tree by tree.
DSSolution ds_solve(const DSCoeffs& coeffs, std::size_t max_vertices);

struct PsiMorphismReport {
  bool cut = false;       // (psi (x) psi) o Delta_nmi = Delta_ck o psi
  bool contract = false;  // (psi (x) psi) o delta_nmi = delta_ck o psi
  bool ok() const { return cut && contract; }
};

PsiMorphismReport check_psi_morphism(const Alpha& a);

std::string to_string(PhiRoute r);

}  // namespace multindex
