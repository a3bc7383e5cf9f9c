#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "multindex/bialgebra.hpp"
#include "multindex/morphisms.hpp"
#include "multindex/poly.hpp"
#include "multindex/trees.hpp"
#include "multindex/words.hpp"

namespace multindex {

/// Malformed text. position is a 0-based byte offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, std::string expected, std::string_view found);
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// Every parser consumes the whole input (surrounding blanks allowed).

Rational parse_rational(std::string_view text);
/// "1/6*X^3 - 1/2*X^2 + 1/3*X"
Poly parse_poly(std::string_view text);
/// "[1,0,2]" or "X1*X0*X2"
Word parse_word(std::string_view text);
/// "X1*X0 + 3/2*X2*X0", "3/2 [2,0]"
NCPoly parse_ncpoly(std::string_view text);
/// "x2*x1^2*x0", star optional; "1" is the unit.
Alpha parse_alpha(std::string_view text);
CPoly parse_cpoly(std::string_view text);
/// "x1*x0 | x0"; "1" is the empty forest.
ForestMono parse_forest_mono(std::string_view text);
/// "-x1*x0 + (x0 | x0)"
SElem parse_selem(std::string_view text);
/// "B[B[],B[B[]]]", "ladder:4", "corolla:3"
RootedTree parse_tree(std::string_view text);
/// Trees joined by "|"; "1" is the empty forest.
Forest parse_forest(std::string_view text);
HCKElem parse_hck(std::string_view text);
/// "1,1,1/2,1/6"
DSCoeffs parse_ds_coeffs(std::string_view text);

/// "X1*X0*X2"
std::string to_string(const Word& w);
/// "[1,0,2]"
std::string to_bracket_string(const Word& w);
std::string to_string(const NCPoly& p);

/// One "coef  left (x) right" line per term, highest terms first.
std::vector<std::string> to_rows(const STensor& t);
std::vector<std::string> to_rows(const HCKTensor& t);
/// One "alpha<TAB>coef*tree" line per tree.
std::vector<std::string> to_rows(const DSSolution& s);

}  // namespace multindex
