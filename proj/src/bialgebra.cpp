#include "multindex/bialgebra.hpp"

#include <algorithm>
#include <sstream>

#include "multindex/memo.hpp"

namespace multindex {

ForestMono::ForestMono(std::vector<Alpha> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_)
    if (b.is_unit()) throw std::invalid_argument("forest blocks must be nonzero monomials");
  std::sort(blocks_.begin(), blocks_.end());
  for (const auto& b : blocks_) length_ += b.length();
}

std::uint64_t ForestMono::weight() const {
  std::uint64_t s = 0;
  for (const auto& b : blocks_) s += b.weight();
  return s;
}

std::int64_t ForestMono::degree() const {
  std::int64_t s = 0;
  for (const auto& b : blocks_) s += b.degree();
  return s;
}

ForestMono operator|(const ForestMono& a, const ForestMono& b) {
  ForestMono out;
  out.blocks_.reserve(a.blocks_.size() + b.blocks_.size());
  std::merge(a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(), b.blocks_.end(), std::back_inserter(out.blocks_));
  out.length_ = a.length_ + b.length_;
  return out;
}

std::strong_ordering operator<=>(const ForestMono& a, const ForestMono& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(),
                                                b.blocks_.end());
}

SElem bar_product(const SElem& a, const SElem& b) {
  SElem out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) out.add(fa | fb, ca * cb);
  return out;
}

SElem as_selem(const CPoly& p) {
  SElem out;
  for (const auto& [a, c] : p) out.add(a.is_unit() ? ForestMono() : ForestMono(a), c);
  return out;
}

STensor tensor_product(const STensor& a, const STensor& b) {
  STensor out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add({ka.first | kb.first, ka.second | kb.second}, ca * cb);
  return out;
}

namespace {

const STensor& unit_tensor() {
  static const STensor t({ForestMono(), ForestMono()}, 1);
  return t;
}

// D'^j(x^a) for j = 0, 1, ... until the image vanishes.
std::vector<CPoly> dual_images(const Alpha& a) {
  std::vector<CPoly> out;
  CPoly img(a);
  while (!img.empty()) {
    out.push_back(img);
    img = derive_dual_c(img);
  }
  return out;
}

// Bar product of one-block polynomials, expanded into forests.
SElem bar_of(const std::vector<const CPoly*>& factors) {
  SElem out(ForestMono(), 1);
  for (const CPoly* f : factors) out = bar_product(out, as_selem(*f));
  return out;
}

}  // namespace

STensor delta_nmi(const Alpha& a) {
  static MemoCache<Alpha, STensor> cache;
  return cache.get_or_compute(a, [&] {
    STensor out;
    const auto n = a.length();
    for (std::size_t k = 1; k <= n; ++k) {
      for_each_decomposition(a, k, [&](const std::vector<Alpha>& parts, const Integer& mult) {
        std::vector<std::vector<CPoly>> images;
        for (const auto& p : parts) images.push_back(dual_images(p));
        // Nondecreasing j_1 <= ... <= j_k; the left factor is x_{j_1}...x_{j_k}
        // and carries 1/beta! with beta the multiplicity vector of the j's.
        std::vector<std::uint32_t> js;
        std::vector<const CPoly*> factors;
        auto recurse = [&](auto&& self, std::size_t m, std::uint32_t lo) -> void {
          if (m == k) {
            Alpha left;
            for (auto j : js) left += Alpha::generator(j);
            const Rational coeff = Rational(mult) / Rational(left.factorial());
            const ForestMono lf(left);
            for (const auto& [forest, c] : bar_of(factors)) out.add({lf, forest}, coeff * c);
            return;
          }
          for (std::uint32_t j = lo; j < images[m].size(); ++j) {
            js.push_back(j);
            factors.push_back(&images[m][j]);
            self(self, m + 1, j);
            js.pop_back();
            factors.pop_back();
          }
        };
        recurse(recurse, 0, 0);
      });
    }
    return out;
  });
}

STensor delta_nmi_ordered(const Alpha& a) {
  STensor out;
  const auto n = a.length();
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational inv_kfact = Rational(1) / Rational(factorial(k));
    for_each_decomposition(a, k, [&](const std::vector<Alpha>& parts, const Integer& mult) {
      std::vector<std::vector<CPoly>> images;
      for (const auto& p : parts) images.push_back(dual_images(p));
      std::vector<std::uint32_t> js;
      std::vector<const CPoly*> factors;
      auto recurse = [&](auto&& self, std::size_t m) -> void {
        if (m == k) {
          Alpha left;
          for (auto j : js) left += Alpha::generator(j);
          const ForestMono lf(left);
          for (const auto& [forest, c] : bar_of(factors)) out.add({lf, forest}, Rational(mult) * inv_kfact * c);
          return;
        }
        for (std::uint32_t j = 0; j < images[m].size(); ++j) {
          js.push_back(j);
          factors.push_back(&images[m][j]);
          self(self, m + 1);
          js.pop_back();
          factors.pop_back();
        }
      };
      recurse(recurse, 0);
    });
  }
  return out;
}

STensor delta_nmi(const ForestMono& f) {
  if (f.blocks().size() == 1) return delta_nmi(f.blocks().front());
  static MemoCache<ForestMono, STensor> cache;
  return cache.get_or_compute(f, [&] {
    STensor out = unit_tensor();
    for (const auto& b : f.blocks()) out = tensor_product(out, delta_nmi(b));
    return out;
  });
}

STensor delta_nmi(const SElem& e) {
  STensor out;
  for (const auto& [f, c] : e) out.add_scaled(delta_nmi(f), c);
  return out;
}

STensor Delta_nmi(const Alpha& a) {
  static MemoCache<Alpha, STensor> cache;
  return cache.get_or_compute(a, [&] {
    STensor out;
    const ForestMono fa(a);
    out.add({fa, ForestMono()}, 1);
    out.add({ForestMono(), fa}, 1);
    const auto n = a.length();
    for (std::size_t k = 1; k < n; ++k) {
      const Rational inv_kfact = Rational(1) / Rational(factorial(k));
      for_each_decomposition(a, k + 1, [&](const std::vector<Alpha>& parts, const Integer& mult) {
        const CPoly left = derive_dual_c(CPoly(parts[0]), static_cast<std::uint32_t>(k));
        if (left.empty()) return;
        const ForestMono right(std::vector<Alpha>(parts.begin() + 1, parts.end()));
        for (const auto& [la, c] : left) out.add({ForestMono(la), right}, Rational(mult) * inv_kfact * c);
      });
    }
    return out;
  });
}

STensor Delta_nmi(const ForestMono& f) {
  STensor out = unit_tensor();
  for (const auto& b : f.blocks()) out = tensor_product(out, Delta_nmi(b));
  return out;
}

STensor Delta_nmi(const SElem& e) {
  STensor out;
  for (const auto& [f, c] : e) out.add_scaled(Delta_nmi(f), c);
  return out;
}

STensor reduced_Delta_nmi(const ForestMono& f) {
  STensor out = Delta_nmi(f);
  if (f.is_unit()) return {};
  out.add({f, ForestMono()}, -1);
  out.add({ForestMono(), f}, -1);
  return out;
}

Rational eps_delta(const ForestMono& f) {
  const Alpha x0 = Alpha::generator(0);
  for (const auto& b : f.blocks())
    if (b != x0) return 0;
  return 1;
}

Rational eps_delta(const SElem& e) {
  Rational out = 0;
  for (const auto& [f, c] : e) out += c * eps_delta(f);
  return out;
}

Rational eps_Delta(const SElem& e) { return e.coefficient(ForestMono()); }

SElem antipode_recursive(const Alpha& a) {
  static MemoCache<Alpha, SElem> cache;
  return cache.get_or_compute(a, [&] {
    const ForestMono fa(a);
    SElem out(fa, -1);
    for (const auto& [key, c] : reduced_Delta_nmi(fa)) {
      // The left leg is strictly shorter, so the recursion terminates.
      out.add_scaled(bar_product(antipode_recursive(key.first), SElem(key.second)), -c);
    }
    return out;
  });
}

SElem antipode_recursive(const ForestMono& f) {
  SElem out(ForestMono(), 1);
  for (const auto& b : f.blocks()) out = bar_product(out, antipode_recursive(b));
  return out;
}

SElem antipode_recursive(const SElem& e) {
  SElem out;
  for (const auto& [f, c] : e) out.add_scaled(antipode_recursive(f), c);
  return out;
}

Rational Character::operator()(const ForestMono& f) const {
  Rational out = 1;
  for (const auto& b : f.blocks()) {
    out *= on_block_(b);
    if (is_zero(out)) break;
  }
  return out;
}

Rational Character::operator()(const SElem& e) const {
  Rational out = 0;
  for (const auto& [f, c] : e) out += c * (*this)(f);
  return out;
}

Character Character::counit_delta() {
  return Character([](const Alpha& a) { return a == Alpha::generator(0) ? Rational(1) : Rational(0); });
}

Character Character::counit_Delta() {
  return Character([](const Alpha&) { return Rational(0); });
}

Character convolve(const Character& f, const Character& g, Coproduct which) {
  return Character([f, g, which](const Alpha& a) {
    const STensor t = which == Coproduct::Delta ? Delta_nmi(a) : delta_nmi(a);
    Rational out = 0;
    for (const auto& [key, c] : t) {
      const Rational left = f(key.first);
      if (is_zero(left)) continue;
      out += c * left * g(key.second);
    }
    return out;
  });
}

STensor map_left(const STensor& t, const std::function<SElem(const ForestMono&)>& f) {
  STensor out;
  for (const auto& [key, c] : t)
    for (const auto& [g, d] : f(key.first)) out.add({g, key.second}, c * d);
  return out;
}

STensor map_right(const STensor& t, const std::function<SElem(const ForestMono&)>& f) {
  STensor out;
  for (const auto& [key, c] : t)
    for (const auto& [g, d] : f(key.second)) out.add({key.first, g}, c * d);
  return out;
}

SElem contract_left(const STensor& t, const Character& f) {
  SElem out;
  for (const auto& [key, c] : t) out.add(key.second, c * f(key.first));
  return out;
}

SElem contract_right(const STensor& t, const Character& f) {
  SElem out;
  for (const auto& [key, c] : t) out.add(key.first, c * f(key.second));
  return out;
}

CompatReport check_compat(const SElem& e) {
  STensor3 lhs, rhs;
  for (const auto& [key, c] : delta_nmi(e))
    for (const auto& [inner, d] : Delta_nmi(key.first)) lhs.add({inner.first, inner.second, key.second}, c * d);
  for (const auto& [key, c] : Delta_nmi(e)) {
    const STensor da = delta_nmi(key.first);
    const STensor db = delta_nmi(key.second);
    for (const auto& [a, ca] : da)
      for (const auto& [b, cb] : db) rhs.add({a.first, b.first, a.second | b.second}, c * ca * cb);
  }
  CompatReport report;
  report.comodule = lhs == rhs;
  SElem counit_side;
  for (const auto& [key, c] : delta_nmi(e))
    if (key.first.is_unit()) counit_side.add(key.second, c);
  report.counit = counit_side == SElem(ForestMono(), eps_Delta(e));
  return report;
}

std::string to_string(const ForestMono& f) {
  if (f.is_unit()) return "1";
  std::string out;
  for (auto it = f.blocks().rbegin(); it != f.blocks().rend(); ++it) {
    if (!out.empty()) out += " | ";
    out += to_string(*it);
  }
  return out;
}

std::string to_string(const SElem& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [f, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (f.is_unit()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    if (f.blocks().size() > 1)
      os << '(' << to_string(f) << ')';
    else
      os << to_string(f);
  }
  return os.str();
}

}  // namespace multindex
