#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symlab/error.hpp"
#include "symlab/field.hpp"
#include "symlab/ratfunc.hpp"
#include "symlab/unipoly.hpp"

namespace symlab {

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Parses a rational-function expression over `field` in the given symbols.
///
///   expr   := term (("+" | "-") term)*
///   term   := unary (("*" | "/")? unary)*      juxtaposition multiplies
///   unary  := "-" unary | power
///   power  := atom ("^" uint)?
///   atom   := integer | symbol | "(" expr ")"
///
/// The field's generator name (e.g. zeta3) is accepted as a constant.
RationalFunction parse_ratfunc(std::string_view src, const Field& field, const SymbolList& symbols);

/// Parses a polynomial in `var` with coefficients in `field`. A leading
/// "factored:" tag is allowed and ignored.
UniPoly<FieldElement> parse_unipoly(std::string_view src, const Field& field, const std::string& var = "X");

/// Parses a field constant such as "2", "-1/3" or "zeta3 + 1".
FieldElement parse_scalar(std::string_view src, const Field& field);

/// Splits on commas at parenthesis depth zero, trimming whitespace.
std::vector<std::string> split_top_level(std::string_view src, char sep = ',');

}  // namespace symlab
