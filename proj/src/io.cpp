#include "multindex/io.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

namespace multindex {

ParseError::ParseError(std::size_t position, std::string expected, std::string_view found)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": expected " + expected +
                            ", found " + (found.empty() ? std::string("end of input") : "'" + std::string(found) + "'")),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_blanks() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_blanks();
    return pos_ == s_.size();
  }
  /// Next nonblank character, or 0 at the end.
  char peek() {
    skip_blanks();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  /// Next character without skipping blanks.
  char peek_raw() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept_word(std::string_view w) {
    skip_blanks();
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }
  void expect_end() {
    if (!at_end()) fail("end of input");
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip_blanks();
    throw ParseError(pos_, expected, s_.substr(pos_, std::min<std::size_t>(12, s_.size() - pos_)));
  }

  bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    if (!digit_next()) fail("digit");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::uint32_t uint32() {
    const std::size_t start = (skip_blanks(), pos_);
    const std::string d = digits();
    if (d.size() > 10 || std::stoull(d) > std::numeric_limits<std::uint32_t>::max()) {
      pos_ = start;
      fail("integer below 2^32");
    }
    return static_cast<std::uint32_t>(std::stoull(d));
  }

  /// Unsigned literal "p" or "p/q".
  Rational rational_literal() {
    const Integer num(digits());
    if (!accept('/')) return Rational(num);
    const std::size_t at = (skip_blanks(), pos_);
    const Integer den(digits());
    if (den == 0) {
      pos_ = at;
      fail("nonzero denominator");
    }
    return make_rational(num, den);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

/// Signed sum of terms "[coef][*]body" or bare constants. constant_key is
/// the basis element a bare number multiplies; without one, bare numbers
/// are rejected.
template <class Key, class Compare>
LinComb<Key, Compare> parse_sum(Cursor& c, const std::function<Key(Cursor&)>& body,
                                const std::optional<Key>& constant_key, const char* what) {
  LinComb<Key, Compare> out;
  bool first = true;
  for (;;) {
    Rational sign = 1;
    if (c.accept('-')) {
      sign = -1;
    } else if (!first && !c.accept('+')) {
      break;
    }
    first = false;
    Rational coef = 1;
    bool have_coef = false;
    if (c.digit_next()) {
      coef = c.rational_literal();
      have_coef = true;
    }
    if (have_coef) {
      const bool star = c.accept('*');
      const char n = c.peek();
      const bool body_next = star || (n != '\0' && n != '+' && n != '-' && n != ')');
      if (!body_next) {
        if (is_zero(coef)) continue;
        if (!constant_key) c.fail(what);
        out.add(*constant_key, sign * coef);
        continue;
      }
    }
    out.add(body(c), sign * coef);
  }
  return out;
}

Poly::key_type poly_body(Cursor& c) {
  if (!c.accept('X')) c.fail("'X'");
  if (c.peek_raw() == '^') {
    c.expect('^');
    return c.uint32();
  }
  return 1;
}

Word word_body(Cursor& c) {
  std::vector<std::uint32_t> letters;
  if (c.accept('[')) {
    letters.push_back(c.uint32());
    while (c.accept(',')) letters.push_back(c.uint32());
    c.expect(']');
    return Word(letters);
  }
  if (!c.accept('X')) c.fail("'X' or '['");
  letters.push_back(c.uint32());
  while (c.peek() == '*') {
    c.expect('*');
    if (!c.accept('X')) c.fail("'X'");
    letters.push_back(c.uint32());
  }
  return Word(letters);
}

Alpha alpha_body(Cursor& c) {
  Alpha a;
  if (!c.accept('x')) c.fail("'x'");
  for (;;) {
    const std::uint32_t i = c.uint32();
    std::uint32_t p = 1;
    if (c.accept('^')) p = c.uint32();
    if (p > 0) a += Alpha::generator(i, p);
    if (c.peek() == '*') {
      c.expect('*');
      if (!c.accept('x')) c.fail("'x'");
    } else if (!c.accept('x')) {
      break;
    }
  }
  if (a.is_unit()) c.fail("nonzero exponent");
  return a;
}

ForestMono forest_mono_body(Cursor& c) {
  const bool paren = c.accept('(');
  std::vector<Alpha> blocks{alpha_body(c)};
  while (c.accept('|')) blocks.push_back(alpha_body(c));
  if (paren) c.expect(')');
  return ForestMono(std::move(blocks));
}

RootedTree tree_body(Cursor& c) {
  if (c.accept_word("ladder:")) {
    const std::uint32_t n = c.uint32();
    if (n == 0) c.fail("positive size");
    return ladder(n);
  }
  if (c.accept_word("corolla:")) {
    const std::uint32_t n = c.uint32();
    if (n == 0) c.fail("positive size");
    return corolla(n);
  }
  if (!c.accept('B')) c.fail("'B', 'ladder:' or 'corolla:'");
  c.expect('[');
  std::vector<RootedTree> kids;
  if (!c.accept(']')) {
    kids.push_back(tree_body(c));
    while (c.accept(',')) kids.push_back(tree_body(c));
    c.expect(']');
  }
  return RootedTree(std::move(kids));
}

Forest forest_body(Cursor& c) {
  const bool paren = c.accept('(');
  std::vector<RootedTree> trees{tree_body(c)};
  while (c.accept('|')) trees.push_back(tree_body(c));
  if (paren) c.expect(')');
  return Forest(std::move(trees));
}

template <class F>
auto parse_whole(std::string_view text, F&& f) {
  Cursor c(text);
  auto v = f(c);
  c.expect_end();
  return v;
}

bool is_one(std::string_view text) {
  Cursor c(text);
  return c.accept('1') && c.at_end();
}

std::string coef_prefix(const Rational& c) { return c.get_str(); }

template <class T, class F>
std::vector<std::string> tensor_rows(const T& t, F&& print) {
  std::vector<std::string> out;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    out.push_back(coef_prefix(c) + "  " + print(k.first) + " (x) " + print(k.second));
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  return parse_whole(text, [](Cursor& c) {
    const bool neg = c.accept('-');
    Rational q = c.rational_literal();
    return neg ? Rational(-q) : q;
  });
}

Poly parse_poly(std::string_view text) {
  return parse_whole(text, [](Cursor& c) {
    return Poly(parse_sum<Poly::key_type, std::less<Poly::key_type>>(c, poly_body, 0u, "'X'"));
  });
}

Word parse_word(std::string_view text) { return parse_whole(text, word_body); }

NCPoly parse_ncpoly(std::string_view text) {
  return parse_whole(text, [](Cursor& c) {
    return parse_sum<Word, std::less<Word>>(c, word_body, std::nullopt, "'X' or '['");
  });
}

Alpha parse_alpha(std::string_view text) {
  if (is_one(text)) return Alpha();
  return parse_whole(text, alpha_body);
}

CPoly parse_cpoly(std::string_view text) {
  return parse_whole(text, [](Cursor& c) {
    return parse_sum<Alpha, std::less<Alpha>>(c, alpha_body, Alpha(), "'x'");
  });
}

ForestMono parse_forest_mono(std::string_view text) {
  if (is_one(text)) return ForestMono();
  return parse_whole(text, forest_mono_body);
}

SElem parse_selem(std::string_view text) {
  return parse_whole(text, [](Cursor& c) {
    return parse_sum<ForestMono, std::less<ForestMono>>(c, forest_mono_body, ForestMono(), "'x' or '('");
  });
}

RootedTree parse_tree(std::string_view text) { return parse_whole(text, tree_body); }

Forest parse_forest(std::string_view text) {
  if (is_one(text)) return Forest();
  return parse_whole(text, forest_body);
}

HCKElem parse_hck(std::string_view text) {
  return parse_whole(text, [](Cursor& c) {
    return parse_sum<Forest, std::less<Forest>>(c, forest_body, Forest(), "tree or '('");
  });
}

DSCoeffs parse_ds_coeffs(std::string_view text) {
  return parse_whole(text, [](Cursor& c) {
    DSCoeffs out;
    do {
      const bool neg = c.accept('-');
      Rational q = c.rational_literal();
      out.a.push_back(neg ? Rational(-q) : q);
    } while (c.accept(','));
    return out;
  });
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += '*';
    out += 'X' + std::to_string(w[i]);
  }
  return out;
}

std::string to_bracket_string(const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out + "]";
}

std::string to_string(const NCPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (mag != 1) os << mag.get_str() << '*';
    os << to_string(w);
  }
  return os.str();
}

std::vector<std::string> to_rows(const STensor& t) {
  return tensor_rows(t, [](const ForestMono& f) { return to_string(f); });
}

std::vector<std::string> to_rows(const HCKTensor& t) {
  return tensor_rows(t, [](const Forest& f) { return to_string(f); });
}

std::vector<std::string> to_rows(const DSSolution& s) {
  std::vector<std::string> out;
  for (const auto& [a, e] : s.entries)
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
      out.push_back(to_string(a) + "\t" + it->second.get_str() + "*" + to_string(it->first));
  return out;
}

}  // namespace multindex
