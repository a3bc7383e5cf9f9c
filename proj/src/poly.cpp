#include "multindex/poly.hpp"

#include <sstream>

#include "multindex/memo.hpp"

namespace multindex {

std::int64_t Poly::degree() const {
  if (empty()) return -1;
  return static_cast<std::int64_t>(terms().rbegin()->first);
}

Rational Poly::operator()(const Rational& at) const {
  // Horner over the sparse exponents, descending.
  Rational acc = 0;
  std::int64_t current = degree();
  for (auto it = terms().rbegin(); it != terms().rend(); ++it) {
    for (; current > static_cast<std::int64_t>(it->first); --current) acc *= at;
    acc += it->second;
  }
  for (; current > 0; --current) acc *= at;
  return acc;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out.add(ea + eb, ca * cb);
  return out;
}

Poly Poly::pow(std::uint32_t k) const {
  Poly out = Poly::constant(1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) out *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return out;
}

Integer multinomial(std::span<const std::uint32_t> parts) {
  std::uint64_t total = 0;
  Integer denom = 1;
  for (auto p : parts) {
    total += p;
    denom *= factorial(p);
  }
  return factorial(total) / denom;
}

Poly hilbert(std::uint32_t n) {
  static MemoCache<std::uint32_t, Poly> cache;
  return cache.get_or_compute(n, [n] {
    Poly out = Poly::constant(1);
    for (std::uint32_t j = 0; j < n; ++j) {
      Poly factor = Poly::x();
      factor.add(0u, Rational(-static_cast<long>(j)));
      out *= factor;
    }
    out *= make_rational(1, factorial(n));
    return out;
  });
}

std::vector<Rational> hilbert_coordinates(const Poly& p) {
  const std::int64_t d = p.degree();
  std::vector<Rational> values;
  for (std::int64_t j = 0; j <= d; ++j) values.push_back(p(Rational(j)));
  // Repeated forward differences; values[n] ends up holding (Delta^n p)(0).
  std::vector<Rational> coords;
  for (std::int64_t n = 0; n <= d; ++n) {
    coords.push_back(values[0]);
    for (std::size_t j = 0; j + 1 < values.size(); ++j) values[j] = values[j + 1] - values[j];
    values.pop_back();
  }
  return coords;
}

Poly summation(const Poly& p) {
  const auto coords = hilbert_coordinates(p);
  Poly out;
  for (std::size_t n = 0; n < coords.size(); ++n)
    out.add_scaled(hilbert(static_cast<std::uint32_t>(n + 1)), coords[n]);
  return out;
}

Rational bernoulli(std::uint32_t k) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  // sum_{j=0}^{m} C(m+1, j) B_j = m+1
  while (table.size() <= k) {
    const auto m = static_cast<std::int64_t>(table.size());
    Rational acc = m + 1;
    for (std::int64_t j = 0; j < m; ++j) acc -= Rational(binomial(m + 1, j)) * table[j];
    table.push_back(acc / Rational(binomial(m + 1, m)));
  }
  return table[k];
}

namespace {

void append_term(std::ostringstream& os, bool first, const Rational& c, std::uint32_t e) {
  const bool negative = sgn(c) < 0;
  const Rational mag = abs(c);
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  if (e == 0) {
    os << mag.get_str();
    return;
  }
  if (mag != 1) os << mag.get_str() << '*';
  os << 'X';
  if (e > 1) os << '^' << e;
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_term(os, first, it->second, it->first);
    first = false;
  }
  return os.str();
}

namespace {

// Synthetic division by (X - r); returns false when r is not a root.
bool divide_root(const Poly& p, const Rational& r, Poly& quotient) {
  if (!is_zero(p(r))) return false;
  const std::int64_t d = p.degree();
  std::vector<Rational> coeffs(static_cast<std::size_t>(d + 1));
  for (const auto& [e, c] : p) coeffs[e] = c;
  Poly q;
  Rational carry = 0;
  for (std::int64_t e = d; e >= 1; --e) {
    carry = coeffs[static_cast<std::size_t>(e)] + carry * r;
    q.add(static_cast<std::uint32_t>(e - 1), carry);
  }
  quotient = q;
  return true;
}

}  // namespace

std::string to_factored_string(const Poly& p) {
  if (p.degree() <= 0) return to_string(p);
  Poly rest = p;
  std::ostringstream factors;
  const std::int64_t bound = p.degree() + 2;
  for (std::int64_t mag = 0; mag <= bound; ++mag) {
    for (std::int64_t r : {mag, -mag}) {
      if (mag == 0 && r != 0) continue;
      Poly q;
      while (rest.degree() >= 1 && divide_root(rest, Rational(r), q)) {
        rest = q;
        if (r == 0)
          factors << "*X";
        else
          factors << "*(X " << (r > 0 ? "- " : "+ ") << (r > 0 ? r : -r) << ")";
      }
    }
  }
  // Split the cofactor into a rational content and a primitive integer part.
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [e, c] : rest) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (sgn(rest.terms().rbegin()->second) < 0) content = -content;
  std::string head;
  if (rest.degree() == 0) {
    head = content.get_str();
  } else {
    Poly primitive = rest;
    primitive *= Rational(1 / content);
    if (content == -1)
      head = "-";
    else if (content != 1)
      head = content.get_str() + "*";
    head += "(" + to_string(primitive) + ")";
  }
  if (head == "1" || head == "-1") {
    std::string tail = factors.str().substr(1);
    return (head == "-1" ? "-" : "") + tail;
  }
  return head + factors.str();
}

}  // namespace multindex
