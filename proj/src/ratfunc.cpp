#include "symlab/ratfunc.hpp"

#include <algorithm>

#include "symlab/error.hpp"

namespace symlab {

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)),
      den_(MultiPoly::constant(num_.field(), num_.symbols(), num_.field().one())) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.field() == den_.field()) || !(num_.symbols() == den_.symbols()))
    throw InputError("numerator and denominator live in different rings");
  normalize();
}

RationalFunction RationalFunction::constant(Field field, SymbolList symbols, const FieldElement& c) {
  return RationalFunction(MultiPoly::constant(field, std::move(symbols), c));
}

RationalFunction RationalFunction::variable(Field field, SymbolList symbols, const std::string& name) {
  return RationalFunction(MultiPoly::variable(field, std::move(symbols), name));
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.field(), num_.symbols(), num_.field().one());
    return;
  }
  Exponent a = num_.monomial_content(), b = den_.monomial_content();
  bool strip = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = std::min(a[i], b[i]);
    strip = strip || a[i] > 0;
  }
  if (strip) {
    num_ = num_.divide_monomial(a);
    den_ = den_.divide_monomial(a);
  }
  if (!den_.is_constant()) {
    auto vars = num_.used_variables();
    for (auto v : den_.used_variables())
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    if (vars.size() <= 1) {
      MultiPoly g = univariate_gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
      }
    } else if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = MultiPoly::constant(num_.field(), num_.symbols(), num_.field().one());
    } else if (auto q2 = den_.divide_exact(num_)) {
      den_ = std::move(*q2);
      num_ = MultiPoly::constant(num_.field(), num_.symbols(), num_.field().one());
    }
  }
  const FieldElement lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    const FieldElement inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

bool RationalFunction::is_one() const { return num_ == den_; }

FieldElement RationalFunction::constant_value() const {
  if (!is_constant()) throw InputError("'" + to_string() + "' is not a constant");
  return num_.constant_term() / den_.constant_term();
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  if (o.den_.is_constant()) return RationalFunction(num_ + o.num_ * den_ * o.den_.constant_term().inverse(), den_);
  if (den_.is_constant()) return RationalFunction(num_ * o.den_ * den_.constant_term().inverse() + o.num_, o.den_);
  if (auto q = o.den_.divide_exact(den_)) return RationalFunction(num_ * *q + o.num_, o.den_);
  if (auto q = den_.divide_exact(o.den_)) return RationalFunction(num_ + o.num_ * *q, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return zero_like();
  // Cancel across before multiplying to keep sizes down.
  if (auto q = num_.divide_exact(o.den_)) {
    if (auto q2 = o.num_.divide_exact(den_)) return RationalFunction(*q * *q2);
    return RationalFunction(*q * o.num_, den_);
  }
  if (auto q = o.num_.divide_exact(den_)) return RationalFunction(num_ * *q, o.den_);
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  return *this * o.inverse();
}

RationalFunction RationalFunction::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  return RationalFunction(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool ratfunc_equal(const RationalFunction& a, const RationalFunction& b) { return a == b; }

RationalFunction RationalFunction::zero_like() const {
  return constant(field(), symbols(), field().zero());
}
RationalFunction RationalFunction::one_like() const {
  return constant(field(), symbols(), field().one());
}
RationalFunction RationalFunction::like(long v) const {
  return constant(field(), symbols(), field().from_int(v));
}

RationalFunction RationalFunction::substitute(const std::string& symbol, const FieldElement& value) const {
  const std::size_t v = symbols().index(symbol);
  MultiPoly d = den_.substitute(v, value);
  if (d.is_zero())
    throw DivisionByZero("denominator vanishes at " + symbol + " = " + value.to_string());
  return RationalFunction(num_.substitute(v, value), d);
}

RationalFunction RationalFunction::substitute(const std::string& symbol,
                                              const RationalFunction& value) const {
  const std::size_t v = symbols().index(symbol);
  auto eval = [&](const MultiPoly& p) {
    RationalFunction acc = zero_like();
    RationalFunction power = one_like();
    for (int k = 0; k <= p.degree_in(v); ++k) {
      MultiPoly c = p.coefficient_in(v, k);
      if (!c.is_zero()) acc += RationalFunction(c) * power;
      power *= value;
    }
    return acc;
  };
  return eval(num_) / eval(den_);
}

std::pair<MultiPoly, MultiPoly> RationalFunction::display_form() const {
  MultiPoly n = num_, d = den_;
  if (field().characteristic() != 0) return {n, d};
  mpz_class lcm = 1, gcd = 0;
  for (const MultiPoly* p : {&n, &d})
    for (const auto& [e, c] : p->terms())
      for (const auto& x : c.components())
        if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  for (const MultiPoly* p : {&n, &d})
    for (const auto& [e, c] : p->terms())
      for (const auto& x : c.components())
        if (x != 0) {
          mpz_class scaled = x.get_num() * (lcm / x.get_den());
          mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_mpz_t());
        }
  mpq_class scale(lcm, gcd == 0 ? mpz_class(1) : gcd);
  scale.canonicalize();
  // Positive leading coefficient in the denominator.
  auto comps = d.leading_coefficient().components();
  auto nz = std::find_if(comps.begin(), comps.end(), [](const mpq_class& x) { return x != 0; });
  if (*nz < 0) scale = -scale;
  const FieldElement s = field().from_rational(scale);
  return {n * s, d * s};
}

namespace {
bool single_term_unit(const MultiPoly& p) {
  return p.terms().size() == 1 && p.to_string().find_first_of("*/ ") == std::string::npos;
}
}  // namespace

std::string RationalFunction::to_string() const {
  auto [n, d] = display_form();
  if (d.is_constant() && d.constant_term().is_one()) return n.to_string();
  std::string ns = n.terms().size() > 1 ? "(" + n.to_string() + ")" : n.to_string();
  std::string ds = single_term_unit(d) ? d.to_string() : "(" + d.to_string() + ")";
  return ns + "/" + ds;
}

bool RationalFunction::is_compound() const {
  auto [n, d] = display_form();
  if (!(d.is_constant() && d.constant_term().is_one())) return true;
  if (n.terms().size() > 1) return true;
  return n.terms().size() == 1 && n.terms().begin()->second.is_compound();
}

int order_at_zero(const RationalFunction& r, const std::string& symbol) {
  if (r.is_zero()) throw InputError("the zero rational function has no order");
  const std::size_t v = r.symbols().index(symbol);
  return r.numerator().order_in(v) - r.denominator().order_in(v);
}

int order_at(const RationalFunction& r, const std::string& symbol, const FieldElement& value) {
  if (r.is_zero()) throw InputError("the zero rational function has no order");
  const std::size_t v = r.symbols().index(symbol);
  return r.numerator().shift(v, value).order_in(v) - r.denominator().shift(v, value).order_in(v);
}

LimitResult limit_at(const RationalFunction& r, const std::string& symbol, const FieldElement& value) {
  const std::size_t v = r.symbols().index(symbol);
  if (r.is_zero()) return r;
  MultiPoly n = r.numerator().shift(v, value);
  MultiPoly d = r.denominator().shift(v, value);
  const int on = n.order_in(v), od = d.order_in(v);
  if (on < od) return Pole{on - od};
  if (on > od) return r.zero_like();
  return RationalFunction(n.coefficient_in(v, on), d.coefficient_in(v, od));
}

}  // namespace symlab
