#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symlab/field.hpp"

namespace symlab {

using Exponent = std::vector<int>;

/// Ordered list of symbol names shared by every polynomial in one computation.
class SymbolList {
 public:
  SymbolList() : names_(std::make_shared<const std::vector<std::string>>()) {}
  SymbolList(std::vector<std::string> names);
  SymbolList(std::initializer_list<std::string> names)
      : SymbolList(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  /// Position of a symbol, or nullopt.
  std::optional<std::size_t> find(const std::string& name) const;
  /// Position of a symbol; throws InputError when absent.
  std::size_t index(const std::string& name) const;

  friend bool operator==(const SymbolList& a, const SymbolList& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Sparse multivariate polynomial over a field, in a fixed list of symbols.
/// Terms are keyed by exponent vector; zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, FieldElement>;

  MultiPoly() : field_(Field::rationals()) {}
  MultiPoly(Field field, SymbolList symbols) : field_(field), symbols_(std::move(symbols)) {}
  static MultiPoly constant(Field field, SymbolList symbols, const FieldElement& c);
  static MultiPoly variable(Field field, SymbolList symbols, const std::string& name);

  const Field& field() const { return field_; }
  const SymbolList& symbols() const { return symbols_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  FieldElement constant_term() const;
  /// Coefficient of the lexicographically largest exponent.
  const FieldElement& leading_coefficient() const;
  const Exponent& leading_exponent() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const FieldElement& c) const;
  MultiPoly pow(unsigned n) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Adds c * x^e (accumulating into an existing term).
  void add_term(const Exponent& e, const FieldElement& c);

  int degree_in(std::size_t var) const;
  /// Lowest exponent of var occurring in any term; the polynomial must be nonzero.
  int order_in(std::size_t var) const;
  /// Coefficient of var^k, as a polynomial in the same symbol list (var-free).
  MultiPoly coefficient_in(std::size_t var, int k) const;
  /// Symbols that actually occur.
  std::vector<std::size_t> used_variables() const;

  /// Replaces var by a constant.
  MultiPoly substitute(std::size_t var, const FieldElement& value) const;
  /// Replaces var by a polynomial over the same symbols.
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  /// Evaluates at a full point; values.size() == symbols().size().
  FieldElement evaluate(const std::vector<FieldElement>& values) const;
  /// p(var + shift).
  MultiPoly shift(std::size_t var, const FieldElement& shift) const;
  /// Same polynomial under a permutation of variables: x_i -> x_{perm[i]}.
  MultiPoly rename(const std::vector<std::size_t>& perm) const;

  /// Exact quotient by d when d divides *this, otherwise nullopt.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;
  /// Largest monomial dividing every term (exponent-wise minimum).
  Exponent monomial_content() const;
  MultiPoly divide_monomial(const Exponent& e) const;

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;
  Field field_;
  SymbolList symbols_;
  Terms terms_;
};

/// Greatest common divisor of two polynomials in at most one shared variable
/// (monic; zero when both are zero). Throws when more than one variable occurs.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace symlab
