#include "multindex/rational.hpp"

#include <stdexcept>

namespace multindex {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(std::string_view text) {
  auto is_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    return Rational(Integer(strip_plus(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  return make_rational(Integer(strip_plus(num)), Integer(std::string(den)));
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer factorial(std::uint64_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace multindex
