#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "multindex/poly.hpp"
#include "multindex/words.hpp"

using namespace multindex;

namespace {

NCPoly w(std::initializer_list<std::uint32_t> letters) { return NCPoly(Word(letters)); }

// Letter sequences of length n with letters <= bound, by odometer.
std::vector<Word> all_words(std::size_t n, std::uint32_t bound) {
  std::vector<Word> out;
  std::vector<std::uint32_t> letters(n, 0);
  while (true) {
    out.emplace_back(letters);
    std::size_t i = 0;
    while (i < n && letters[i] == bound) letters[i++] = 0;
    if (i == n) break;
    ++letters[i];
  }
  return out;
}

Word random_word(std::mt19937_64& rng, std::size_t max_len, std::uint32_t max_letter) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::uint32_t> letter(0, max_letter);
  std::vector<std::uint32_t> letters(len(rng));
  for (auto& l : letters) l = letter(rng);
  return Word(letters);
}

}  // namespace

TEST_CASE("grading") {
  CHECK(grading(Word{0}) == Grading{1, 0, 0});
  CHECK(grading(Word{1, 0}) == Grading{2, 1, 0});
  CHECK(grading(Word{0, 0}) == Grading{2, 0, -1});
  CHECK_THROWS(Word(std::vector<std::uint32_t>{}));
}

TEST_CASE("derivations") {
  CHECK(derive(w({0})) == w({1}));
  CHECK(derive(w({0, 0})) == w({1, 0}) + w({0, 1}));
  CHECK(derive(w({1, 0})) == w({2, 0}) + w({1, 1}));
  CHECK(derive_dual(w({0})).is_zero());
  CHECK(derive_dual(w({1, 0})) == w({0, 0}));
  CHECK(derive_dual(w({1, 0}), 2).is_zero());
}

TEST_CASE("composition fixtures") {
  const NCPoly x1x0[] = {w({1, 0}), w({0})};
  CHECK(compose(Word{1, 0}, x1x0) == w({2, 0, 0}) + w({1, 1, 0}));
  const NCPoly x0x1x0[] = {w({0}), w({1, 0})};
  CHECK(compose(Word{1, 0}, x0x1x0) == w({1, 1, 0}));
  const NCPoly single[] = {w({0}), w({3})};
  CHECK(compose(Word{2, 1}, single) == w({2, 4}));
  const NCPoly units[] = {w({0}), w({0}), w({0})};
  CHECK(compose(Word{3, 1, 2}, units) == w({3, 1, 2}));
  const NCPoly two[] = {w({0}), w({0})};
  try {
    compose(Word{1}, two);
    FAIL("expected arity error");
  } catch (const ArityError& e) {
    CHECK(e.expected() == 1);
    CHECK(e.actual() == 2);
  }
}

TEST_CASE("multinomial composition agrees with derivation path") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Word outer = random_word(rng, 3, 3);
    std::vector<Word> inner;
    std::vector<NCPoly> inner_poly;
    for (std::size_t k = 0; k < outer.length(); ++k) {
      inner.push_back(random_word(rng, 3, 2));
      inner_poly.emplace_back(inner.back());
    }
    CHECK(compose(outer, inner_poly) == compose_multinomial(outer, inner));
  }
}

TEST_CASE("partial composition") {
  CHECK(partial_compose(w({0, 0}), 1, w({1})) == w({1, 0}));
  CHECK(partial_compose(w({0, 0}), 1, w({0, 0})) == w({0, 0, 0}));
  CHECK(partial_compose(w({0, 0}), 2, w({0, 0})) == w({0, 0, 0}));
  CHECK(partial_compose(w({1}), 1, w({0, 0})) == w({1, 0}) + w({0, 1}));
  CHECK_THROWS_AS(partial_compose(w({0, 0}), 3, w({0})), std::out_of_range);
  CHECK_THROWS_AS(partial_compose(w({0, 0}) + w({0}), 1, w({0})), std::invalid_argument);
}

TEST_CASE("brace") {
  const NCPoly q[] = {w({0, 0})};
  CHECK(brace(Word{1}, q) == w({1, 0}) + w({0, 1}));
  const NCPoly x1[] = {w({1})};
  CHECK(brace(Word{1, 0}, x1) == w({2, 0}) + w({1, 1}));
  CHECK(brace(Word{1, 0}, std::span<const NCPoly>{}) == w({1, 0}));
  const NCPoly three[] = {w({0}), w({0}), w({0})};
  CHECK(brace(Word{1, 0}, three).is_zero());
  // Two arguments on a two-letter word fill both slots in order.
  const NCPoly pair[] = {w({1}), w({2})};
  CHECK(brace(Word{1, 0}, pair) == w({2, 2}));
}

TEST_CASE("novikov identities for X1X0") {
  const NCPoly x1x0 = w({1, 0});
  const NCPoly left_args[] = {x1x0, w({0})};
  const NCPoly right_args[] = {w({0}), x1x0};
  const NCPoly left = compose(x1x0, left_args);
  const NCPoly right = compose(x1x0, right_args);
  CHECK(left == w({2, 0, 0}) + w({1, 1, 0}));
  CHECK(right == w({1, 1, 0}));
  const std::size_t s12[] = {2, 1, 3};
  const std::size_t s23[] = {1, 3, 2};
  // NAP relation, then the right pre-Lie relation.
  CHECK(permute(right, s12) == right);
  CHECK(permute(left, s23) - permute(right, s23) == left - right);
  CHECK(permute(right, s12) == w({1, 1, 0}));
  CHECK(permute(left, s23) - permute(right, s23) == w({2, 0, 0}));
}

namespace {

// Block permutation: concatenates blocks sigma(1), ..., sigma(n) of a word
// whose consecutive blocks have the given sizes, as 1-based letter positions.
std::vector<std::size_t> block_permutation(std::span<const std::size_t> sigma, std::span<const std::size_t> sizes) {
  std::vector<std::size_t> start(sizes.size(), 1);
  for (std::size_t j = 1; j < sizes.size(); ++j) start[j] = start[j - 1] + sizes[j - 1];
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const std::size_t block = sigma[k] - 1;
    for (std::size_t t = 0; t < sizes[block]; ++t) out.push_back(start[block] + t);
  }
  return out;
}

}  // namespace

TEST_CASE("operad laws on random instances") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Word outer = random_word(rng, 3, 3);
    const std::size_t n = outer.length();
    std::vector<Word> mid;
    std::vector<NCPoly> mid_poly;
    for (std::size_t k = 0; k < n; ++k) {
      mid.push_back(random_word(rng, 2, 2));
      mid_poly.emplace_back(mid.back());
    }
    std::size_t total = 0;
    for (const Word& m : mid) total += m.length();
    std::vector<NCPoly> inner;
    for (std::size_t k = 0; k < total; ++k) inner.emplace_back(random_word(rng, 2, 2));

    // Associativity: (w o (p)) o (q) = w o (p_1 o (q_1..), p_2 o (..), ...).
    const NCPoly lhs = compose(compose(outer, mid_poly), inner);
    std::vector<NCPoly> nested;
    std::size_t offset = 0;
    for (const Word& m : mid) {
      nested.push_back(compose(m, std::span<const NCPoly>(inner).subspan(offset, m.length())));
      offset += m.length();
    }
    CHECK(lhs == compose(NCPoly(outer), nested));

    // Units.
    const NCPoly unit_arg[] = {NCPoly(outer)};
    CHECK(compose(Word{0}, unit_arg) == NCPoly(outer));

    // Grading additivity.
    const NCPoly composed = compose(outer, mid_poly);
    std::int64_t deg = outer.degree();
    for (const Word& m : mid) deg += m.degree();
    for (const auto& [word, c] : composed) {
      CHECK(word.degree() == deg);
      CHECK(word.length() == total);
    }

    // Equivariance with a random sigma.
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{1});
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<std::size_t> inverse(n);
    for (std::size_t k = 0; k < n; ++k) inverse[sigma[k] - 1] = k + 1;
    std::vector<NCPoly> reordered;
    std::vector<std::size_t> sizes;
    for (std::size_t j = 0; j < n; ++j) {
      reordered.push_back(mid_poly[inverse[j] - 1]);
      sizes.push_back(mid[inverse[j] - 1].length());
    }
    const auto big = block_permutation(sigma, sizes);
    CHECK(compose(NCPoly(permute(outer, sigma)), mid_poly) == permute(compose(NCPoly(outer), reordered), big));
  }
}

TEST_CASE("D and its dual are adjoint for the word pairing") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    NCPoly p, r;
    for (int t = 0; t < 4; ++t) {
      p.add(random_word(rng, 3, 2), Rational(t + 1));
      r.add(random_word(rng, 3, 3), Rational(2 * t - 3));
    }
    CHECK(pairing(derive(p), r) == pairing(p, derive_dual(r)));
  }
}

TEST_CASE("word coproduct is dual to composition") {
  // Coefficient of u (x) q_1|...|q_k in delta_word(w) equals the coefficient of w in u o (q).
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Word& target : all_words(n, 2)) {
      const WordTensor expanded = expand_rows(delta_word(target));
      for (const auto& [key, c] : expanded) {
        std::vector<NCPoly> args(key.second.begin(), key.second.end());
        CHECK(compose(key.first, args).coefficient(target) == c);
      }
      // Conversely every nonzero composition landing on the target is listed.
      for (std::size_t k = 1; k <= n; ++k) {
        for (const Word& u : all_words(k, 2)) {
          for (std::size_t cut = 0; cut < (std::size_t{1} << (n - 1)); ++cut) {
            std::vector<Word> blocks;
            std::vector<std::uint32_t> cur;
            for (std::size_t i = 0; i < n; ++i) {
              cur.push_back(0);
              if (i + 1 == n || ((cut >> i) & 1u)) {
                blocks.emplace_back(cur);
                cur.clear();
              }
            }
            if (blocks.size() != k) continue;
            // Probe the blocks at every letter pattern bounded by the target.
            std::vector<NCPoly> args;
            std::size_t pos = 0;
            std::vector<Word> qs;
            for (const Word& b : blocks) {
              std::vector<std::uint32_t> letters;
              for (std::size_t t = 0; t < b.length(); ++t) letters.push_back(target[pos++] > 0 ? target[pos - 1] - 1 : 0);
              qs.emplace_back(letters);
              args.emplace_back(qs.back());
            }
            const Rational c = compose(u, args).coefficient(target);
            CHECK(expanded.coefficient(WordTensorKey{u, qs}) == c);
          }
        }
      }
    }
  }
}

TEST_CASE("dimensions") {
  CHECK(dim_nmi(3, 2) == 15);
  CHECK(dim_nmi(1, 0) == 1);
  CHECK(dim_nmi(5, -4) == 1);
  CHECK(dim_nmi(5, -5) == 0);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::int64_t k = -4; k <= 4; ++k) {
      const std::int64_t weight = k + static_cast<std::int64_t>(n) - 1;
      std::size_t count = 0;
      if (weight >= 0) {
        for (const Word& word : all_words(n, static_cast<std::uint32_t>(weight)))
          if (word.degree() == k) ++count;
      }
      CHECK(dim_nmi(static_cast<std::uint32_t>(n), k) == Integer(static_cast<unsigned long>(count)));
    }
  }
  for (std::uint32_t n = 1; n <= 8; ++n) CHECK(dim_nmi(n, 0) == binomial(2 * n - 2, n - 1));
}

TEST_CASE("word coproduct fixtures") {
  auto key = [](Word left, std::vector<Word> right) { return WordTensorKey{std::move(left), std::move(right)}; };
  WordTensor expected;
  expected.add(key(Word{0}, {Word{2}}), 1);
  expected.add(key(Word{1}, {Word{1}}), 1);
  expected.add(key(Word{2}, {Word{0}}), 1);
  CHECK(expand_rows(delta_word(Word{2})) == expected);

  WordTensor two;
  two.add(key(Word{0}, {Word{1, 0}}), 1);
  two.add(key(Word{1}, {Word{0, 0}}), 1);
  two.add(key(Word{0, 0}, {Word{1}, Word{0}}), 1);
  two.add(key(Word{1, 0}, {Word{0}, Word{0}}), 1);
  CHECK(expand_rows(delta_word(Word{1, 0})) == two);

  WordTensor unit;
  unit.add(key(Word{0}, {Word{0}}), 1);
  CHECK(expand_rows(delta_word(Word{0})) == unit);
}
