#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace multindex {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q" or "p"; throws std::invalid_argument on malformed text.
Rational rational_from_string(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer factorial(std::uint64_t n);
Integer binomial(std::int64_t n, std::int64_t k);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace multindex
