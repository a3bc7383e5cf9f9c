#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <vector>

#include "multindex/lincomb.hpp"
#include "multindex/rational.hpp"

namespace multindex {

/// Univariate polynomial in X over the rationals, stored sparsely by exponent.
class Poly : public LinComb<std::uint32_t> {
 public:
  using LinComb::LinComb;
  Poly() = default;
  Poly(const LinComb<std::uint32_t>& base) : LinComb(base) {}  // NOLINT

  static Poly constant(const Rational& c) { return Poly(0u, c); }
  static Poly x() { return Poly(1u, Rational(1)); }
  static Poly monomial(std::uint32_t exponent, const Rational& c = 1) { return Poly(exponent, c); }

  /// Largest stored exponent; -1 for the zero polynomial.
  std::int64_t degree() const;
  Rational operator()(const Rational& at) const;

  friend Poly operator*(const Poly& a, const Poly& b);
  using LinComb::operator*=;
  Poly& operator*=(const Poly& other) { return *this = *this * other; }
  Poly pow(std::uint32_t k) const;
};

/// (sum parts)! / prod(part!)
Integer multinomial(std::span<const std::uint32_t> parts);

/// X(X-1)...(X-n+1)/n!
Poly hilbert(std::uint32_t n);

/// Summation operator: L(p)(n) = p(0) + ... + p(n-1) for n >= 1.
/// Works through the Hilbert basis, where it is the shift H_n -> H_{n+1}.
Poly summation(const Poly& p);

/// Coordinates of p in the Hilbert basis (forward differences at 0).
std::vector<Rational> hilbert_coordinates(const Poly& p);

/// Bernoulli numbers with B_1 = +1/2.
Rational bernoulli(std::uint32_t k);

/// Descending-exponent text form, e.g. "1/6*X^3 - 1/2*X^2 + 1/3*X".
std::string to_string(const Poly& p);

/// Best-effort factored form: pulls out linear factors (X - r) for small
/// integer roots r, then prints the remaining cofactor expanded.
std::string to_factored_string(const Poly& p);

}  // namespace multindex
