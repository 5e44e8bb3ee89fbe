#include "symlab/multipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "symlab/error.hpp"

namespace symlab {

SymbolList::SymbolList(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw InputError("duplicate symbol '" + n + "'");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> SymbolList::find(const std::string& name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

std::size_t SymbolList::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw InputError("unknown symbol '" + name + "'");
  return *i;
}

MultiPoly MultiPoly::constant(Field field, SymbolList symbols, const FieldElement& c) {
  MultiPoly p(field, std::move(symbols));
  p.add_term(Exponent(p.symbols_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(Field field, SymbolList symbols, const std::string& name) {
  MultiPoly p(field, symbols);
  Exponent e(symbols.size(), 0);
  e[symbols.index(name)] = 1;
  p.add_term(e, field.one());
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](int x) { return x == 0; });
}

FieldElement MultiPoly::constant_term() const {
  auto it = terms_.find(Exponent(symbols_.size(), 0));
  return it == terms_.end() ? field_.zero() : it->second;
}

const FieldElement& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw InputError("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

const Exponent& MultiPoly::leading_exponent() const {
  if (terms_.empty()) throw InputError("zero polynomial has no leading exponent");
  return terms_.rbegin()->first;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!(field_ == o.field_)) throw InputError("polynomial field mismatch");
  if (!(symbols_ == o.symbols_)) throw InputError("polynomial symbol-list mismatch");
}

void MultiPoly::add_term(const Exponent& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_, symbols_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(field_, symbols_);
  Exponent e(symbols_.size());
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const FieldElement& c) const {
  MultiPoly r(field_, symbols_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(field_, symbols_, field_.one());
  MultiPoly base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.field_ == b.field_ && a.symbols_ == b.symbols_ && a.terms_ == b.terms_;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int MultiPoly::order_in(std::size_t var) const {
  if (terms_.empty()) throw InputError("zero polynomial has no order");
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

MultiPoly MultiPoly::coefficient_in(std::size_t var, int k) const {
  MultiPoly r(field_, symbols_);
  for (const auto& [e, c] : terms_)
    if (e[var] == k) {
      Exponent f = e;
      f[var] = 0;
      r.terms_.emplace(std::move(f), c);
    }
  return r;
}

std::vector<std::size_t> MultiPoly::used_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < symbols_.size(); ++v)
    if (std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] != 0; }))
      out.push_back(v);
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const FieldElement& value) const {
  MultiPoly r(field_, symbols_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    r.add_term(f, c * value.pow(e[var]));
  }
  return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  check_compatible(value);
  int deg = degree_in(var);
  std::vector<MultiPoly> powers{constant(field_, symbols_, field_.one())};
  for (int k = 1; k <= deg; ++k) powers.push_back(powers.back() * value);
  MultiPoly r(field_, symbols_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    MultiPoly term(field_, symbols_);
    term.terms_.emplace(f, c);
    r += term * powers[e[var]];
  }
  return r;
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& values) const {
  if (values.size() != symbols_.size()) throw InputError("evaluate: wrong number of values");
  FieldElement acc = field_.zero();
  for (const auto& [e, c] : terms_) {
    FieldElement term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * values[i].pow(e[i]);
    acc = acc + term;
  }
  return acc;
}

MultiPoly MultiPoly::shift(std::size_t var, const FieldElement& s) const {
  if (s.is_zero()) return *this;
  MultiPoly x = variable(field_, symbols_, symbols_[var]);
  return substitute(var, x + constant(field_, symbols_, s));
}

MultiPoly MultiPoly::rename(const std::vector<std::size_t>& perm) const {
  MultiPoly r(field_, symbols_);
  for (const auto& [e, c] : terms_) {
    Exponent f(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[perm[i]] += e[i];
    r.add_term(f, c);
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  check_compatible(d);
  if (d.is_zero()) throw DivisionByZero();
  MultiPoly rem = *this;
  MultiPoly q(field_, symbols_);
  const Exponent& lead = d.leading_exponent();
  const FieldElement lead_inv = d.leading_coefficient().inverse();
  while (!rem.is_zero()) {
    const Exponent& le = rem.leading_exponent();
    Exponent diff(le.size());
    for (std::size_t i = 0; i < le.size(); ++i) {
      diff[i] = le[i] - lead[i];
      if (diff[i] < 0) return std::nullopt;
    }
    MultiPoly mono(field_, symbols_);
    mono.terms_.emplace(diff, rem.leading_coefficient() * lead_inv);
    q += mono;
    rem -= mono * d;
  }
  return q;
}

Exponent MultiPoly::monomial_content() const {
  Exponent m(symbols_.size(), 0);
  if (terms_.empty()) return m;
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

MultiPoly MultiPoly::divide_monomial(const Exponent& m) const {
  MultiPoly r(field_, symbols_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i] -= m[i];
      if (f[i] < 0) throw InputError("monomial does not divide polynomial");
    }
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending lexicographic order of exponents.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += symbols_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    bool negative = false;
    std::string coeff;
    if (c.is_compound()) {
      coeff = "(" + c.to_string() + ")";
    } else {
      auto comps = c.components();
      auto nz = std::find_if(comps.begin(), comps.end(), [](const mpq_class& x) { return x != 0; });
      negative = field_.characteristic() == 0 && *nz < 0;
      coeff = (negative ? -c : c).to_string();
    }
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (mono.empty())
      out << coeff;
    else if (coeff == "1")
      out << mono;
    else
      out << coeff << "*" << mono;
  }
  return out.str();
}

namespace {

// Dense univariate representation of a polynomial in a single variable.
std::vector<FieldElement> to_dense(const MultiPoly& p, std::size_t var) {
  std::vector<FieldElement> v(std::max(p.degree_in(var) + 1, 0), p.field().zero());
  for (const auto& [e, c] : p.terms()) v[e[var]] = c;
  return v;
}

MultiPoly from_dense(const std::vector<FieldElement>& v, const MultiPoly& like, std::size_t var) {
  MultiPoly r(like.field(), like.symbols());
  Exponent e(like.symbols().size(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    e[var] = static_cast<int>(k);
    r.add_term(e, v[k]);
  }
  return r;
}

void trim(std::vector<FieldElement>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

std::vector<FieldElement> dense_rem(std::vector<FieldElement> a, const std::vector<FieldElement>& b) {
  trim(a);
  const FieldElement inv = b.back().inverse();
  while (a.size() >= b.size()) {
    FieldElement c = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - c * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b) {
  std::set<std::size_t> vars;
  for (auto v : a.used_variables()) vars.insert(v);
  for (auto v : b.used_variables()) vars.insert(v);
  if (vars.size() > 1) throw InputError("univariate_gcd: more than one variable");
  const std::size_t var = vars.empty() ? 0 : *vars.begin();
  if (a.symbols().size() == 0) {
    // No symbols at all: gcd of constants.
    if (a.is_zero() && b.is_zero()) return a;
    return MultiPoly::constant(a.field(), a.symbols(), a.field().one());
  }
  auto x = to_dense(a, var), y = to_dense(b, var);
  trim(x);
  trim(y);
  while (!y.empty()) {
    auto r = dense_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return MultiPoly(a.field(), a.symbols());
  const FieldElement inv = x.back().inverse();
  for (auto& c : x) c = c * inv;
  return from_dense(x, a, var);
}

}  // namespace symlab
