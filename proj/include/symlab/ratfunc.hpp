#pragma once

#include <string>
#include <variant>

#include "symlab/multipoly.hpp"

namespace symlab {

/// Quotient of two multivariate polynomials over a common field and symbol list.
///
/// Values are not kept in a canonical reduced form. Construction strips common
/// monomial factors, cancels exactly when one side divides the other or when
/// only a single symbol occurs, and makes the denominator's leading coefficient
/// one. Equality is decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : RationalFunction(MultiPoly()) {}
  RationalFunction(MultiPoly num);
  RationalFunction(MultiPoly num, MultiPoly den);

  static RationalFunction constant(Field field, SymbolList symbols, const FieldElement& c);
  static RationalFunction variable(Field field, SymbolList symbols, const std::string& name);

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  const Field& field() const { return num_.field(); }
  const SymbolList& symbols() const { return num_.symbols(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.is_constant(); }
  /// True when neither numerator nor denominator involves any symbol.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// The value of a constant rational function.
  FieldElement constant_value() const;

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  RationalFunction inverse() const;
  RationalFunction pow(long n) const;

  /// n1*d2 == n2*d1; throws on symbol-list mismatch.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  RationalFunction zero_like() const;
  RationalFunction one_like() const;
  RationalFunction like(long v) const;

  /// Substitutes a constant for a symbol. Throws DivisionByZero when the
  /// denominator vanishes identically after substitution.
  RationalFunction substitute(const std::string& symbol, const FieldElement& value) const;
  RationalFunction substitute(const std::string& symbol, const RationalFunction& value) const;

  /// Numerator and denominator with integer (or unit) coefficients, for display.
  std::pair<MultiPoly, MultiPoly> display_form() const;
  std::string to_string() const;
  /// True when to_string() needs parentheses to be used as a factor.
  bool is_compound() const;

 private:
  void normalize();
  MultiPoly num_;
  MultiPoly den_;
};

/// ord_symbol(numerator) - ord_symbol(denominator); throws for the zero function.
int order_at_zero(const RationalFunction& r, const std::string& symbol);
/// Order of r at symbol = value.
int order_at(const RationalFunction& r, const std::string& symbol, const FieldElement& value);

struct Pole {
  int order;  // negative
  friend bool operator==(const Pole&, const Pole&) = default;
};

/// Limit of r as symbol -> value. A finite result is a rational function in the
/// same symbol list that no longer involves the symbol.
using LimitResult = std::variant<RationalFunction, Pole>;
LimitResult limit_at(const RationalFunction& r, const std::string& symbol, const FieldElement& value);

bool ratfunc_equal(const RationalFunction& a, const RationalFunction& b);

}  // namespace symlab
