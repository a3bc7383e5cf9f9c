#include "multindex/words.hpp"

#include <numeric>

#include "multindex/poly.hpp"

namespace multindex {

Word::Word(std::vector<std::uint32_t> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("a word needs at least one letter");
}

std::uint64_t Word::weight() const {
  return std::accumulate(letters_.begin(), letters_.end(), std::uint64_t{0});
}

std::int64_t Word::degree() const {
  return static_cast<std::int64_t>(weight()) - static_cast<std::int64_t>(length()) + 1;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<std::uint32_t> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(letters));
}

Grading grading(const Word& w) { return {w.length(), w.weight(), w.degree()}; }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) out.add(wa * wb, ca * cb);
  return out;
}

ArityError::ArityError(std::size_t expected, std::size_t actual)
    : std::invalid_argument("arity mismatch: expected " + std::to_string(expected) + " argument(s), got " +
                            std::to_string(actual)),
      expected_(expected),
      actual_(actual) {}

NCPoly derive(const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p) {
    for (std::size_t k = 0; k < w.length(); ++k) {
      auto letters = w.letters();
      ++letters[k];
      out.add(Word(std::move(letters)), c);
    }
  }
  return out;
}

NCPoly derive(const NCPoly& p, std::uint32_t k) {
  NCPoly out = p;
  for (std::uint32_t i = 0; i < k && !out.empty(); ++i) out = derive(out);
  return out;
}

NCPoly derive_dual(const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p) {
    for (std::size_t k = 0; k < w.length(); ++k) {
      if (w[k] == 0) continue;
      auto letters = w.letters();
      --letters[k];
      out.add(Word(std::move(letters)), c);
    }
  }
  return out;
}

NCPoly derive_dual(const NCPoly& p, std::uint32_t k) {
  NCPoly out = p;
  for (std::uint32_t i = 0; i < k && !out.empty(); ++i) out = derive_dual(out);
  return out;
}

NCPoly compose(const Word& w, std::span<const NCPoly> args) {
  if (args.size() != w.length()) throw ArityError(w.length(), args.size());
  NCPoly out;
  bool first = true;
  for (std::size_t k = 0; k < w.length(); ++k) {
    NCPoly factor = derive(args[k], w[k]);
    out = first ? std::move(factor) : out * factor;
    first = false;
  }
  return out;
}

NCPoly compose(const NCPoly& p, std::span<const NCPoly> args) {
  NCPoly out;
  for (const auto& [w, c] : p) out.add_scaled(compose(w, args), c);
  return out;
}

namespace {

// Enumerates all ways to write `total` as an ordered sum of `parts` naturals.
template <class F>
void for_each_composition(std::uint32_t total, std::size_t parts, std::vector<std::uint32_t>& buf, F&& f) {
  if (parts == 1) {
    buf.push_back(total);
    f(static_cast<const std::vector<std::uint32_t>&>(buf));
    buf.pop_back();
    return;
  }
  for (std::uint32_t first = 0; first <= total; ++first) {
    buf.push_back(first);
    for_each_composition(total - first, parts - 1, buf, f);
    buf.pop_back();
  }
}

}  // namespace

NCPoly compose_multinomial(const Word& w, std::span<const Word> args) {
  if (args.size() != w.length()) throw ArityError(w.length(), args.size());
  // Terms are indexed by one composition of i_k into length(args[k]) parts per slot.
  NCPoly out;
  std::vector<std::uint32_t> letters;
  auto recurse = [&](auto&& self, std::size_t slot, const Integer& coeff) -> void {
    if (slot == w.length()) {
      out.add(Word(letters), Rational(coeff));
      return;
    }
    const Word& arg = args[slot];
    std::vector<std::uint32_t> scratch;
    for_each_composition(w[slot], arg.length(), scratch, [&](const std::vector<std::uint32_t>& split) {
      const auto mark = letters.size();
      for (std::size_t m = 0; m < arg.length(); ++m) letters.push_back(arg[m] + split[m]);
      self(self, slot + 1, coeff * multinomial(split));
      letters.resize(mark);
    });
  };
  recurse(recurse, 0, Integer(1));
  return out;
}

NCPoly partial_compose(const NCPoly& p, std::size_t slot, const NCPoly& q) {
  if (p.empty()) return {};
  const std::size_t arity = p.begin()->first.length();
  for (const auto& [w, c] : p) {
    if (w.length() != arity) throw std::invalid_argument("partial composition needs a length-homogeneous operation");
  }
  if (slot < 1 || slot > arity)
    throw std::out_of_range("slot " + std::to_string(slot) + " outside 1.." + std::to_string(arity));
  std::vector<NCPoly> args(arity, NCPoly(Word{0}));
  args[slot - 1] = q;
  return compose(p, args);
}

NCPoly brace(const Word& w, std::span<const NCPoly> args) {
  const std::size_t n = w.length();
  const std::size_t k = args.size();
  if (k == 0) return NCPoly(w);
  if (k > n) return {};
  NCPoly out;
  // Increasing positions j_1 < ... < j_k.
  std::vector<std::size_t> pos(k);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  while (true) {
    NCPoly term;
    bool first = true;
    std::size_t next_arg = 0;
    for (std::size_t slot = 0; slot < n; ++slot) {
      NCPoly factor = (next_arg < k && pos[next_arg] == slot) ? derive(args[next_arg++], w[slot])
                                                              : NCPoly(Word{w[slot]});
      term = first ? std::move(factor) : term * factor;
      first = false;
    }
    out += term;
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
  return out;
}

NCPoly brace(const NCPoly& p, std::span<const NCPoly> args) {
  NCPoly out;
  for (const auto& [w, c] : p) out.add_scaled(brace(w, args), c);
  return out;
}

NCPoly prelie_words(const NCPoly& p, const NCPoly& q) {
  const NCPoly args[] = {q};
  return brace(p, args);
}

Word permute(const Word& w, std::span<const std::size_t> sigma) {
  if (sigma.size() != w.length()) throw ArityError(w.length(), sigma.size());
  std::vector<std::uint32_t> letters(w.length());
  for (std::size_t k = 0; k < w.length(); ++k) letters[k] = w[sigma[k] - 1];
  return Word(std::move(letters));
}

NCPoly permute(const NCPoly& p, std::span<const std::size_t> sigma) {
  NCPoly out;
  for (const auto& [w, c] : p) out.add(permute(w, sigma), c);
  return out;
}

Rational pairing(const NCPoly& p, const NCPoly& q) {
  Rational acc = 0;
  for (const auto& [w, c] : p) acc += c * q.coefficient(w);
  return acc;
}

Integer dim_nmi(std::uint32_t n, std::int64_t k) {
  if (n == 0) throw std::invalid_argument("words have length at least 1");
  const std::int64_t weight = k + static_cast<std::int64_t>(n) - 1;
  if (weight < 0) return 0;
  // Weak compositions of the weight into n parts.
  return binomial(weight + static_cast<std::int64_t>(n) - 1, static_cast<std::int64_t>(n) - 1);
}

std::vector<TensorWordLine> delta_word(const Word& w) {
  const std::size_t n = w.length();
  std::vector<TensorWordLine> rows;
  // Each deconcatenation into k consecutive blocks is a subset of the n-1 cut points.
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
    std::vector<Word> blocks;
    std::vector<std::uint32_t> current;
    for (std::size_t i = 0; i < n; ++i) {
      current.push_back(w[i]);
      if (i + 1 == n || ((cuts >> i) & 1u)) {
        blocks.emplace_back(std::move(current));
        current.clear();
      }
    }
    // Nonzero iterated duals D'^j(block) for each block; D'^j vanishes once j exceeds the weight.
    std::vector<std::vector<NCPoly>> images(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      NCPoly img(blocks[b]);
      while (!img.empty()) {
        images[b].push_back(img);
        img = derive_dual(img);
      }
    }
    std::vector<std::uint32_t> left;
    std::vector<NCPoly> right;
    auto recurse = [&](auto&& self, std::size_t b) -> void {
      if (b == blocks.size()) {
        rows.push_back({Word(left), right});
        return;
      }
      for (std::uint32_t j = 0; j < images[b].size(); ++j) {
        left.push_back(j);
        right.push_back(images[b][j]);
        self(self, b + 1);
        left.pop_back();
        right.pop_back();
      }
    };
    recurse(recurse, 0);
  }
  return rows;
}

WordTensor expand_rows(std::span<const TensorWordLine> rows) {
  WordTensor out;
  for (const auto& row : rows) {
    std::vector<Word> key;
    auto recurse = [&](auto&& self, std::size_t slot, const Rational& coeff) -> void {
      if (slot == row.right.size()) {
        out.add(WordTensorKey{row.left, key}, coeff);
        return;
      }
      for (const auto& [word, c] : row.right[slot]) {
        key.push_back(word);
        self(self, slot + 1, coeff * c);
        key.pop_back();
      }
    };
    recurse(recurse, 0, Rational(1));
  }
  return out;
}

}  // namespace multindex
