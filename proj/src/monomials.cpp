#include "multindex/monomials.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace multindex {

Alpha::Alpha(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) { trim(); }

Alpha Alpha::generator(std::uint32_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(index + 1, 0);
  e[index] = power;
  return Alpha(std::move(e));
}

void Alpha::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  length_ = 0;
  for (auto e : exps_) length_ += e;
}

std::uint64_t Alpha::weight() const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) s += i * exps_[i];
  return s;
}

std::int64_t Alpha::degree() const {
  return static_cast<std::int64_t>(weight()) - static_cast<std::int64_t>(length()) + 1;
}

Integer Alpha::factorial() const {
  Integer out = 1;
  for (auto e : exps_) out *= multindex::factorial(e);
  return out;
}

Alpha& Alpha::operator+=(const Alpha& other) {
  if (other.exps_.size() > exps_.size()) exps_.resize(other.exps_.size(), 0);
  for (std::size_t i = 0; i < other.exps_.size(); ++i) exps_[i] += other.exps_[i];
  length_ += other.length_;
  return *this;
}

Alpha operator-(const Alpha& a, const Alpha& b) {
  if (!b.divides(a)) throw std::invalid_argument("monomial difference would be negative");
  std::vector<std::uint32_t> e = a.exps_;
  for (std::size_t i = 0; i < b.exps_.size(); ++i) e[i] -= b.exps_[i];
  return Alpha(std::move(e));
}

bool Alpha::divides(const Alpha& other) const {
  if (exps_.size() > other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const Alpha& a, const Alpha& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  CPoly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add(ka + kb, ca * cb);
  return out;
}

Alpha abelianize(const Word& w) {
  std::vector<std::uint32_t> e;
  for (auto l : w.letters()) {
    if (l >= e.size()) e.resize(l + 1, 0);
    ++e[l];
  }
  return Alpha(std::move(e));
}

CPoly abelianize(const NCPoly& p) {
  CPoly out;
  for (const auto& [w, c] : p) out.add(abelianize(w), c);
  return out;
}

namespace {

// Sum over indices i of exps[i] * x^{alpha - e_i + e_{i+shift}}; shift is +1 or -1,
// with x_{-1} = 0.
CPoly shift_derivation(const CPoly& p, int shift) {
  CPoly out;
  for (const auto& [a, c] : p) {
    for (std::size_t i = 0; i < a.support(); ++i) {
      if (a[i] == 0) continue;
      if (shift < 0 && i == 0) continue;
      std::vector<std::uint32_t> e = a.exponents();
      e.resize(std::max(e.size(), i + 2), 0);
      --e[i];
      ++e[static_cast<std::size_t>(static_cast<std::int64_t>(i) + shift)];
      out.add(Alpha(std::move(e)), c * a[i]);
    }
  }
  return out;
}

}  // namespace

CPoly derive_c(const CPoly& p) { return shift_derivation(p, 1); }

CPoly derive_c(const CPoly& p, std::uint32_t k) {
  CPoly out = p;
  for (std::uint32_t i = 0; i < k && !out.empty(); ++i) out = derive_c(out);
  return out;
}

CPoly derive_dual_c(const CPoly& p) { return shift_derivation(p, -1); }

CPoly derive_dual_c(const CPoly& p, std::uint32_t k) {
  CPoly out = p;
  for (std::uint32_t i = 0; i < k && !out.empty(); ++i) out = derive_dual_c(out);
  return out;
}

CPoly partial(const CPoly& p, std::uint32_t index) {
  CPoly out;
  for (const auto& [a, c] : p) {
    const std::uint32_t e = a[index];
    if (e == 0) continue;
    // x^a / x_index stays a unit when a = x_index; that is the constant 1 here,
    // represented by the zero Alpha.
    out.add(a - Alpha::generator(index), c * e);
  }
  return out;
}

namespace {

std::size_t max_support(const CPoly& p) {
  std::size_t s = 0;
  for (const auto& [a, c] : p) s = std::max(s, a.support());
  return s;
}

}  // namespace

CPoly prelie(const CPoly& p, const CPoly& q) {
  const CPoly args[] = {q};
  return prelie_multi(p, args);
}

CPoly prelie_multi(const CPoly& p, std::span<const CPoly> args) {
  if (args.empty()) return p;
  // Derivatives in x_l vanish beyond p's support, so l ranges over [0, support).
  const std::size_t bound = max_support(p);
  CPoly out;
  std::vector<CPoly> shifted;
  auto recurse = [&](auto&& self, std::size_t j, const CPoly& derived, const CPoly& factor) -> void {
    if (derived.empty()) return;
    if (j == args.size()) {
      out += derived * factor;
      return;
    }
    CPoly image = args[j];
    for (std::uint32_t l = 0; l < bound; ++l) {
      self(self, j + 1, partial(derived, l), factor * image);
      image = derive_c(image);
    }
  };
  recurse(recurse, 0, p, CPoly(Alpha(), 1));
  return out;
}

CPoly black_multi(const CPoly& p, std::span<const CPoly> args) {
  CPoly out = derive_c(p, static_cast<std::uint32_t>(args.size()));
  for (const auto& q : args) out = out * q;
  return out;
}

void for_each_decomposition(const Alpha& alpha, std::size_t k,
                            const std::function<void(const std::vector<Alpha>&, const Integer&)>& f) {
  if (k == 0) {
    if (alpha.is_unit()) f({}, Integer(1));
    return;
  }
  if (alpha.length() < k) return;
  // Distribute each exponent alpha_i over the k parts independently, then
  // discard assignments leaving a part empty.
  const std::size_t support = alpha.support();
  std::vector<std::vector<std::uint32_t>> parts(k, std::vector<std::uint32_t>(support, 0));
  auto enumerate = [&](auto&& self, std::size_t index, std::size_t slot, std::uint32_t remaining) -> void {
    if (index == support) {
      std::vector<Alpha> out;
      out.reserve(k);
      Integer denom = 1;
      for (const auto& e : parts) {
        Alpha a(e);
        if (a.is_unit()) return;
        denom *= a.factorial();
        out.push_back(std::move(a));
      }
      f(out, alpha.factorial() / denom);
      return;
    }
    if (slot + 1 == k) {
      parts[slot][index] = remaining;
      self(self, index + 1, 0, index + 1 < support ? alpha[index + 1] : 0);
      parts[slot][index] = 0;
      return;
    }
    for (std::uint32_t share = 0; share <= remaining; ++share) {
      parts[slot][index] = share;
      self(self, index, slot + 1, remaining - share);
    }
    parts[slot][index] = 0;
  };
  enumerate(enumerate, 0, 0, alpha[0]);
}

ShuffleTensor shuffle_iter(const CPoly& p, std::size_t n) {
  ShuffleTensor out;
  for (const auto& [a, c] : p) {
    for_each_decomposition(a, n + 1, [&](const std::vector<Alpha>& parts, const Integer& coeff) {
      out.add(parts, c * Rational(coeff));
    });
  }
  return out;
}

std::vector<Alpha> monomials_up_to(std::uint64_t max_length, std::uint32_t max_index) {
  std::vector<Alpha> out;
  std::vector<std::uint32_t> e(max_index + 1, 0);
  auto recurse = [&](auto&& self, std::size_t i, std::uint64_t budget) -> void {
    if (i == e.size()) {
      Alpha a(e);
      if (!a.is_unit()) out.push_back(std::move(a));
      return;
    }
    for (std::uint32_t k = 0; k <= budget; ++k) {
      e[i] = k;
      self(self, i + 1, budget - k);
    }
    e[i] = 0;
  };
  recurse(recurse, 0, max_length);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Alpha& a) {
  if (a.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.support(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << i;
    if (a[i] > 1) os << '^' << a[i];
  }
  return os.str();
}

std::string to_string(const CPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest terms first, like polynomials.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [a, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (a.is_unit()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << to_string(a);
  }
  return os.str();
}

}  // namespace multindex
