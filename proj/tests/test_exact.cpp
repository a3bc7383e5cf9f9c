#include <random>
#include <vector>

#include "doctest.h"
#include "multindex/poly.hpp"

using namespace multindex;

namespace {

Rational q(const char* s) { return rational_from_string(s); }

Poly poly_from(std::initializer_list<std::pair<std::uint32_t, const char*>> terms) {
  Poly p;
  for (auto [e, c] : terms) p.add(e, q(c));
  return p;
}

Poly random_poly(std::mt19937_64& rng, std::uint32_t max_degree) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  Poly p;
  for (std::uint32_t e = 0; e <= max_degree; ++e) p.add(e, make_rational(coeff(rng), den(rng)));
  return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(q("6/4")) == "3/2");
  CHECK(to_string(q("-2/4")) == "-1/2");
  CHECK(to_string(q("-7")) == "-7");
  CHECK_THROWS_AS(rational_from_string("1/0"), std::domain_error);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(factorial(30) == Integer("265252859812191058636308480000000"));
}

TEST_CASE("multinomial") {
  const std::vector<std::uint32_t> a{1, 1}, b{0, 0, 0}, c{2, 1, 1}, empty{};
  CHECK(multinomial(a) == 2);
  CHECK(multinomial(b) == 1);
  CHECK(multinomial(empty) == 1);
  // 4!/(2!1!1!) straight from factorials
  CHECK(multinomial(c) == factorial(4) / (factorial(2) * factorial(1) * factorial(1)));
  CHECK(multinomial(c) == 12);
}

TEST_CASE("hilbert polynomials") {
  CHECK(hilbert(0) == Poly::constant(1));
  CHECK(hilbert(1) == Poly::x());
  CHECK(hilbert(2) == poly_from({{2, "1/2"}, {1, "-1/2"}}));
  for (std::int64_t m = 0; m <= 12; ++m)
    for (std::uint32_t n = 0; n <= m; ++n) CHECK(hilbert(n)(Rational(m)) == Rational(binomial(m, n)));
}

TEST_CASE("summation operator examples") {
  CHECK(summation(Poly::constant(1)) == Poly::x());
  const Poly sq = summation(Poly::monomial(2));
  // X(X-1)(2X-1)/6
  CHECK(sq == poly_from({{3, "1/3"}, {2, "-1/2"}, {1, "1/6"}}));
  const Poly lin = summation(Poly::x());
  for (int n = 1; n <= 8; ++n) {
    Rational brute = 0;
    for (int j = 0; j < n; ++j) brute += j;
    CHECK(lin(Rational(n)) == brute);
  }
  CHECK(summation(Poly()).is_zero());
}

TEST_CASE("bernoulli table") {
  const char* table[] = {"1", "1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0", "-691/2730"};
  for (std::uint32_t k = 0; k <= 12; ++k) CHECK(bernoulli(k) == q(table[k]));
}

TEST_CASE("summation laws on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly p = random_poly(rng, 6);
    const Poly r = random_poly(rng, 6);
    const Poly lp = summation(p);
    const Poly lr = summation(r);
    CHECK(lp * lr == summation(summation(p) * r) + summation(p * summation(r)) + summation(p * r));
    Rational partial = 0;
    for (int n = 1; n <= 10; ++n) {
      partial += p(Rational(n - 1));
      CHECK(lp(Rational(n)) == partial);
    }
    CHECK(lp(Rational(-1)) == -p(Rational(-1)));
    for (int k = 1; k <= 6; ++k)
      for (int l = 1; l <= 6; ++l) {
        Rational tail = 0;
        for (int j = 0; j < k; ++j) tail += p(Rational(j + l));
        CHECK(lp(Rational(k + l)) == lp(Rational(l)) + tail);
      }
  }
}

TEST_CASE("Faulhaber closed form") {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    Poly expected;
    for (std::uint32_t i = 0; i < n; ++i) {
      Rational c = bernoulli(i) * Rational(binomial(n, i)) / Rational(n);
      if (i % 2) c = -c;
      expected.add(n - i, c);
    }
    CHECK(summation(Poly::monomial(n - 1)) == expected);
  }
}

TEST_CASE("high degree summation") {
  const Poly p = Poly::monomial(30);
  const Poly lp = summation(p);
  CHECK(lp.degree() == 31);
  Integer brute = 0;
  for (int j = 0; j < 20; ++j) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), j, 30);
    brute += t;
  }
  CHECK(lp(Rational(20)) == Rational(brute));
}

TEST_CASE("polynomial printing") {
  CHECK(to_string(poly_from({{3, "1/6"}, {2, "-1/2"}, {1, "1/3"}})) == "1/6*X^3 - 1/2*X^2 + 1/3*X");
  CHECK(to_string(Poly()) == "0");
  CHECK(to_string(Poly::constant(-6)) == "-6");
  CHECK(to_string(poly_from({{1, "-1"}, {0, "1"}})) == "-X + 1");
  const Poly f = summation(Poly::monomial(2));
  CHECK(to_factored_string(f) == "1/6*(2*X - 1)*X*(X - 1)");
  CHECK(to_factored_string(hilbert(3)) == "1/6*X*(X - 1)*(X - 2)");
  CHECK(to_factored_string(Poly::x()) == "X");
}
