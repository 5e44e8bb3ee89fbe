#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "symlab/error.hpp"
#include "symlab/scalar.hpp"

namespace symlab {

/// Dense univariate polynomial, lowest degree first, over any Scalar.
template <Scalar S>
class UniPoly {
 public:
  /// The zero polynomial over the ring of `proto`.
  explicit UniPoly(const S& proto) : zero_(proto.zero_like()) {}
  UniPoly(std::vector<S> coeffs, const S& proto) : zero_(proto.zero_like()), c_(std::move(coeffs)) {
    trim();
  }

  static UniPoly constant(const S& c) { return UniPoly({c}, c); }
  static UniPoly monomial(const S& c, int k) {
    std::vector<S> v(k + 1, c.zero_like());
    v[k] = c;
    return UniPoly(std::move(v), c);
  }
  /// The polynomial X.
  static UniPoly x(const S& proto) { return monomial(proto.one_like(), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const S& coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : zero_;
  }
  const std::vector<S>& coeffs() const { return c_; }
  const S& leading() const {
    if (c_.empty()) throw InputError("zero polynomial has no leading coefficient");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  const S& zero_scalar() const { return zero_; }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<S> r(std::max(c_.size(), o.c_.size()), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UniPoly(std::move(r), zero_);
  }
  UniPoly operator-() const {
    std::vector<S> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return UniPoly(std::move(r), zero_);
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly(zero_);
    std::vector<S> r(c_.size() + o.c_.size() - 1, zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return UniPoly(std::move(r), zero_);
  }
  UniPoly operator*(const S& s) const {
    std::vector<S> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c * s);
    return UniPoly(std::move(r), zero_);
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  /// f = q*g + r with deg r < deg g.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& g) const {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<S> rem = c_;
    if (rem.size() < g.c_.size()) return {UniPoly(zero_), *this};
    std::vector<S> q(rem.size() - g.c_.size() + 1, zero_);
    const S lead_inv = g.leading().one_like() / g.leading();
    for (std::size_t i = rem.size(); i-- >= g.c_.size();) {
      if (rem[i].is_zero()) continue;
      const std::size_t shift = i - (g.c_.size() - 1);
      S c = rem[i] * lead_inv;
      for (std::size_t j = 0; j < g.c_.size(); ++j) rem[shift + j] = rem[shift + j] - c * g.c_[j];
      rem[i] = zero_;
      q[shift] = std::move(c);
    }
    rem.resize(g.c_.size() - 1, zero_);
    return {UniPoly(std::move(q), zero_), UniPoly(std::move(rem), zero_)};
  }
  UniPoly mod(const UniPoly& g) const { return divmod(g).second; }

  S eval(const S& x) const {
    S acc = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// this(g(X)).
  UniPoly compose(const UniPoly& g) const {
    UniPoly acc(zero_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(c_[i]);
    return acc;
  }

  /// Terms in ascending order, e.g. "t + 2X - X^2"; compound coefficients are
  /// parenthesized.
  std::string to_string(const std::string& var = "X") const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const S& c = c_[k];
      if (c.is_zero()) continue;
      std::string cs = c.to_string();
      bool neg = !c.is_compound() && !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (c.is_compound() && !enclosed(cs)) cs = "(" + cs + ")";
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      if (k == 0)
        out += cs;
      else if (cs == "1")
        out += mono;
      else if (std::any_of(cs.begin(), cs.end(), [](unsigned char ch) { return std::isalpha(ch); }))
        out += cs + "*" + mono;
      else
        out += cs + mono;
    }
    return out;
  }

 private:
  // "(...)" with the first parenthesis closing at the end.
  static bool enclosed(const std::string& s) {
    if (s.size() < 2 || s.front() != '(') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
      if (depth == 0) return i + 1 == s.size();
    }
    return false;
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  S zero_;
  std::vector<S> c_;
};

}  // namespace symlab
