#include "symlab/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "symlab/error.hpp"

namespace symlab {

namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::rationals;
  std::int64_t p = 0;  // 0 for characteristic zero
  int degree = 1;
  const FieldData* base = nullptr;
  std::vector<mpq_class> mod_q;      // monic modulus over Q, lowest first
  std::vector<std::int64_t> mod_p;   // monic modulus over F_p, lowest first
  std::string generator;
  std::string spec;
  std::uint64_t size = 0;
};

}  // namespace detail

using detail::FieldData;

namespace {

std::mutex registry_mutex;

std::map<std::string, std::unique_ptr<FieldData>>& registry() {
  static std::map<std::string, std::unique_ptr<FieldData>> r;
  return r;
}

template <class Build>
const FieldData* intern(const std::string& key, Build build) {
  std::lock_guard lock(registry_mutex);
  auto& reg = registry();
  auto it = reg.find(key);
  if (it != reg.end()) return it->second.get();
  auto data = std::make_unique<FieldData>(build());
  const FieldData* ptr = data.get();
  reg.emplace(key, std::move(data));
  return ptr;
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod(a, p);
  if (nr == 0) throw DivisionByZero();
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return mod(t, p);
}

// Scalar operations of the prime field (or Q) used to build extension arithmetic.
struct ModP {
  std::int64_t p;
  using T = std::int64_t;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(T a, T b) const { return mod(a + b, p); }
  T sub(T a, T b) const { return mod(a - b, p); }
  T mul(T a, T b) const { return mulmod(a, b, p); }
  T neg(T a) const { return mod(-a, p); }
  T inv(T a) const { return invmod(a, p); }
  bool is_zero(T a) const { return a == 0; }
};

struct Rat {
  using T = mpq_class;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const {
    if (a == 0) throw DivisionByZero();
    return 1 / a;
  }
  bool is_zero(const T& a) const { return a == 0; }
};

template <class Ops>
void trim(const Ops& ops, std::vector<typename Ops::T>& v) {
  while (!v.empty() && ops.is_zero(v.back())) v.pop_back();
}

// Reduces a polynomial modulo a monic modulus of degree d; result has length d.
template <class Ops>
std::vector<typename Ops::T> reduce(const Ops& ops, std::vector<typename Ops::T> r,
                                    const std::vector<typename Ops::T>& m) {
  const std::size_t d = m.size() - 1;
  for (std::size_t i = r.size(); i-- > d;) {
    auto c = r[i];
    if (ops.is_zero(c)) continue;
    for (std::size_t j = 0; j < d; ++j) r[i - d + j] = ops.sub(r[i - d + j], ops.mul(c, m[j]));
    r[i] = ops.zero();
  }
  r.resize(d, ops.zero());
  return r;
}

template <class Ops>
std::vector<typename Ops::T> poly_mul(const Ops& ops, const std::vector<typename Ops::T>& a,
                                      const std::vector<typename Ops::T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<typename Ops::T> r(a.size() + b.size() - 1, ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ops.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
  }
  return r;
}

// (quotient, remainder) of a by nonzero trimmed b.
template <class Ops>
std::pair<std::vector<typename Ops::T>, std::vector<typename Ops::T>> poly_divmod(
    const Ops& ops, std::vector<typename Ops::T> a, const std::vector<typename Ops::T>& b) {
  trim(ops, a);
  if (a.size() < b.size()) return {{}, a};
  std::vector<typename Ops::T> q(a.size() - b.size() + 1, ops.zero());
  auto lead_inv = ops.inv(b.back());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    auto c = ops.mul(a[i], lead_inv);
    q[i - b.size() + 1] = c;
    if (ops.is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[i - b.size() + 1 + j] = ops.sub(a[i - b.size() + 1 + j], ops.mul(c, b[j]));
  }
  a.resize(b.size() - 1);
  trim(ops, a);
  trim(ops, q);
  return {q, a};
}

// Inverse of a modulo m via extended Euclid; a must be coprime to m.
template <class Ops>
std::vector<typename Ops::T> poly_invmod(const Ops& ops, std::vector<typename Ops::T> a,
                                         const std::vector<typename Ops::T>& m) {
  using V = std::vector<typename Ops::T>;
  trim(ops, a);
  if (a.empty()) throw DivisionByZero();
  V r0 = m, r1 = a, s0, s1{ops.one()};
  trim(ops, r0);
  auto sub = [&](const V& x, const V& y) {
    V out(std::max(x.size(), y.size()), ops.zero());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = ops.sub(out[i], y[i]);
    trim(ops, out);
    return out;
  };
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(ops, r0, r1);
    V s = sub(s0, poly_mul(ops, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw InputError("element is not invertible modulo the field modulus");
  auto c = ops.inv(r0[0]);
  for (auto& x : s0) x = ops.mul(x, c);
  s0.resize(m.size() - 1, ops.zero());
  return s0;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

bool finite_irreducible(std::int64_t p, const std::vector<std::int64_t>& m) {
  const int k = static_cast<int>(m.size()) - 1;
  ModP ops{p};
  // Trial division by every monic polynomial of degree 1..k/2.
  for (int deg = 1; deg <= k / 2; ++deg) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::int64_t> d(deg + 1, 0);
      std::uint64_t x = idx;
      for (int i = 0; i < deg; ++i) {
        d[i] = static_cast<std::int64_t>(x % p);
        x /= p;
      }
      d[deg] = 1;
      auto [q, r] = poly_divmod(ops, m, d);
      if (r.empty()) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> smallest_irreducible(std::int64_t p, int k) {
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(p);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::int64_t> m(k + 1, 0);
    std::uint64_t x = idx;
    for (int i = 0; i < k; ++i) {
      m[i] = static_cast<std::int64_t>(x % p);
      x /= p;
    }
    m[k] = 1;
    if (finite_irreducible(p, m)) return m;
  }
  throw InconsistencyError("no irreducible polynomial found");
}

const FieldData* rationals_data() {
  return intern("Q", [] {
    FieldData d;
    d.kind = FieldKind::rationals;
    d.spec = "Q";
    return d;
  });
}

}  // namespace

// ---- Field ---------------------------------------------------------------

Field Field::rationals() { return Field(rationals_data()); }

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) throw InputError("Fp(" + std::to_string(p) + "): modulus is not prime");
  if (p >= (std::int64_t{1} << 31)) throw InputError("prime too large (must be < 2^31)");
  const std::string key = "Fp(" + std::to_string(p) + ")";
  return Field(intern(key, [&] {
    FieldData d;
    d.kind = FieldKind::prime;
    d.p = p;
    d.spec = key;
    d.size = static_cast<std::uint64_t>(p);
    return d;
  }));
}

Field Field::extension(const Field& base, const std::vector<mpq_class>& modulus,
                       std::string generator) {
  if (base.kind() == FieldKind::extension)
    throw InputError("towers of extensions are not supported");
  if (modulus.size() < 3) throw InputError("extension modulus must have degree >= 2");
  if (generator.empty()) throw InputError("extension generator needs a name");
  const int k = static_cast<int>(modulus.size()) - 1;
  std::ostringstream key;
  key << "ext(" << base.spec() << ";";
  if (base.kind() == FieldKind::rationals) {
    if (modulus.back() != 1) throw InputError("extension modulus must be monic");
    const std::vector<mpq_class> cyclo{1, 1, 1};
    if (modulus != cyclo)
      throw InputError("over Q only the modulus Y^2 + Y + 1 is supported");
    for (const auto& c : modulus) key << c.get_str() << ",";
    key << ";" << generator << ")";
    return Field(intern(key.str(), [&] {
      FieldData d;
      d.kind = FieldKind::extension;
      d.degree = k;
      d.base = base.data_;
      d.mod_q = modulus;
      d.generator = generator;
      d.spec = generator == "zeta3" ? "Qzeta3" : key.str();
      return d;
    }));
  }
  const std::int64_t p = base.characteristic();
  std::vector<std::int64_t> m;
  for (const auto& c : modulus) {
    if (c.get_den() != 1) throw InputError("modulus over F_p must have integer coefficients");
    m.push_back(mod(c.get_num().get_si(), p));
  }
  if (m.back() != 1) throw InputError("extension modulus must be monic");
  if (std::pow(static_cast<double>(p), k) > 1e9) throw InputError("extension field too large");
  if (!finite_irreducible(p, m)) throw InputError("extension modulus is reducible");
  for (auto c : m) key << c << ",";
  key << ";" << generator << ")";
  return Field(intern(key.str(), [&] {
    FieldData d;
    d.kind = FieldKind::extension;
    d.p = p;
    d.degree = k;
    d.base = base.data_;
    d.mod_p = m;
    d.generator = generator;
    d.size = 1;
    for (int i = 0; i < k; ++i) d.size *= static_cast<std::uint64_t>(p);
    d.spec = (generator == "Y" && m == smallest_irreducible(p, k))
                 ? "F(" + std::to_string(p) + "," + std::to_string(k) + ")"
                 : key.str();
    return d;
  }));
}

Field Field::finite(std::int64_t p, int k) {
  if (k < 1) throw InputError("extension degree must be >= 1");
  Field base = prime(p);
  if (k == 1) return base;
  if (std::pow(static_cast<double>(p), k) > 1e6) throw InputError("finite field too large");
  auto m = smallest_irreducible(p, k);
  return extension(base, std::vector<mpq_class>(m.begin(), m.end()), "Y");
}

Field Field::qzeta3() { return extension(rationals(), {1, 1, 1}, "zeta3"); }

Field Field::parse(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto parse_int = [&](const std::string& txt) -> std::int64_t {
    if (txt.empty() || !std::all_of(txt.begin(), txt.end(), ::isdigit) || txt.size() > 12)
      throw InputError("bad field specification '" + std::string(spec) + "'");
    return std::stoll(txt);
  };
  if (s == "Q") return rationals();
  if (s == "Qzeta3") return qzeta3();
  if (s.size() > 4 && s.rfind("Fp(", 0) == 0 && s.back() == ')')
    return prime(parse_int(s.substr(3, s.size() - 4)));
  if (s.size() > 3 && s.rfind("F(", 0) == 0 && s.back() == ')') {
    auto inner = s.substr(2, s.size() - 3);
    auto comma = inner.find(',');
    if (comma == std::string::npos) throw InputError("bad field specification '" + s + "'");
    return finite(parse_int(inner.substr(0, comma)),
                  static_cast<int>(parse_int(inner.substr(comma + 1))));
  }
  throw InputError("unknown field specification '" + std::string(spec) +
                   "' (expected Q, Qzeta3, Fp(p) or F(p,k))");
}

FieldKind Field::kind() const { return data_->kind; }
std::int64_t Field::characteristic() const { return data_->p; }
int Field::degree() const { return data_->degree; }
bool Field::is_finite() const { return data_->p != 0; }
std::uint64_t Field::size() const { return data_->size; }
Field Field::base() const { return data_->base ? Field(data_->base) : *this; }
std::vector<mpq_class> Field::modulus() const {
  if (data_->kind != FieldKind::extension) return {};
  if (data_->p == 0) return data_->mod_q;
  return {data_->mod_p.begin(), data_->mod_p.end()};
}
const std::string& Field::generator_name() const { return data_->generator; }
const std::string& Field::spec() const { return data_->spec; }

FieldElement Field::zero() const {
  FieldElement e(data_);
  if (data_->p == 0)
    e.q_.assign(data_->degree, mpq_class(0));
  else
    e.m_.assign(data_->degree, 0);
  return e;
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long v) const {
  FieldElement e = zero();
  if (data_->p == 0)
    e.q_[0] = v;
  else
    e.m_[0] = mod(v, data_->p);
  return e;
}

FieldElement Field::from_rational(const mpq_class& v) const {
  FieldElement e = zero();
  if (data_->p == 0) {
    e.q_[0] = v;
    return e;
  }
  const mpz_class p = data_->p;
  mpz_class num = v.get_num() % p, den = v.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw DivisionByZero("denominator vanishes in characteristic " + p.get_str());
  e.m_[0] = mulmod(num.get_si(), invmod(den.get_si(), data_->p), data_->p);
  return e;
}

FieldElement Field::generator() const {
  if (data_->kind != FieldKind::extension) throw InputError(spec() + " has no generator");
  FieldElement e = zero();
  if (data_->p == 0)
    e.q_[1] = 1;
  else
    e.m_[1] = 1;
  return e;
}

FieldElement Field::element(std::uint64_t index) const {
  if (!is_finite() || index >= size()) throw InputError("element index out of range");
  FieldElement e = zero();
  for (int i = 0; i < data_->degree; ++i) {
    e.m_[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(data_->p));
    index /= static_cast<std::uint64_t>(data_->p);
  }
  return e;
}

std::vector<FieldElement> Field::elements() const {
  if (!is_finite()) throw InputError("cannot enumerate the infinite field " + spec());
  std::vector<FieldElement> out;
  out.reserve(size());
  for (std::uint64_t i = 0; i < size(); ++i) out.push_back(element(i));
  return out;
}

// ---- FieldElement --------------------------------------------------------

FieldElement::FieldElement() : FieldElement(rationals_data()) { q_.assign(1, mpq_class(0)); }

FieldElement::FieldElement(const FieldData* f) : f_(f) {}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field()))
    throw InputError("field mismatch: " + a.field().spec() + " vs " + b.field().spec());
}
}  // namespace

bool FieldElement::is_zero() const {
  if (f_->p == 0) return std::all_of(q_.begin(), q_.end(), [](const mpq_class& c) { return c == 0; });
  return std::all_of(m_.begin(), m_.end(), [](std::int64_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (f_->p == 0) {
    if (q_[0] != 1) return false;
    return std::all_of(q_.begin() + 1, q_.end(), [](const mpq_class& c) { return c == 0; });
  }
  if (m_[0] != 1) return false;
  return std::all_of(m_.begin() + 1, m_.end(), [](std::int64_t c) { return c == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(*this, o);
  FieldElement r(f_);
  if (f_->p == 0) {
    r.q_.resize(q_.size());
    for (std::size_t i = 0; i < q_.size(); ++i) r.q_[i] = q_[i] + o.q_[i];
  } else {
    r.m_.resize(m_.size());
    for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] = mod(m_[i] + o.m_[i], f_->p);
  }
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(*this, o);
  FieldElement r(f_);
  if (f_->p == 0) {
    r.q_.resize(q_.size());
    for (std::size_t i = 0; i < q_.size(); ++i) r.q_[i] = q_[i] - o.q_[i];
  } else {
    r.m_.resize(m_.size());
    for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] = mod(m_[i] - o.m_[i], f_->p);
  }
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r(f_);
  if (f_->p == 0) {
    r.q_.resize(q_.size());
    for (std::size_t i = 0; i < q_.size(); ++i) r.q_[i] = -q_[i];
  } else {
    r.m_.resize(m_.size());
    for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] = mod(-m_[i], f_->p);
  }
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(*this, o);
  FieldElement r(f_);
  if (f_->degree == 1) {
    if (f_->p == 0)
      r.q_ = {q_[0] * o.q_[0]};
    else
      r.m_ = {mulmod(m_[0], o.m_[0], f_->p)};
    return r;
  }
  if (f_->p == 0) {
    Rat ops;
    r.q_ = reduce(ops, poly_mul(ops, q_, o.q_), f_->mod_q);
  } else {
    ModP ops{f_->p};
    r.m_ = reduce(ops, poly_mul(ops, m_, o.m_), f_->mod_p);
  }
  return r;
}

FieldElement FieldElement::inverse() const {
  FieldElement r(f_);
  if (f_->degree == 1) {
    if (f_->p == 0) {
      if (q_[0] == 0) throw DivisionByZero();
      r.q_ = {1 / q_[0]};
    } else {
      r.m_ = {invmod(m_[0], f_->p)};
    }
    return r;
  }
  if (f_->p == 0)
    r.q_ = poly_invmod(Rat{}, q_, f_->mod_q);
  else
    r.m_ = poly_invmod(ModP{f_->p}, m_, f_->mod_p);
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(*this, o);
  return *this * o.inverse();
}

FieldElement FieldElement::pow(std::int64_t n) const {
  FieldElement base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  FieldElement result = one_like();
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.f_ == b.f_ && a.q_ == b.q_ && a.m_ == b.m_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  if (a.f_ != b.f_) return a.f_->spec <=> b.f_->spec;
  if (a.f_->p != 0) return a.index() <=> b.index();
  for (std::size_t i = 0; i < a.q_.size(); ++i) {
    int c = cmp(a.q_[i], b.q_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::uint64_t FieldElement::index() const {
  if (f_->p == 0) throw InputError("index() requires a finite field");
  std::uint64_t idx = 0;
  for (std::size_t i = m_.size(); i-- > 0;) idx = idx * static_cast<std::uint64_t>(f_->p) + m_[i];
  return idx;
}

std::vector<mpq_class> FieldElement::components() const {
  if (f_->p == 0) return q_;
  return {m_.begin(), m_.end()};
}

std::optional<mpq_class> FieldElement::as_rational() const {
  if (f_->p != 0) return std::nullopt;
  for (std::size_t i = 1; i < q_.size(); ++i)
    if (q_[i] != 0) return std::nullopt;
  return q_[0];
}

bool FieldElement::is_compound() const {
  auto comps = components();
  return std::count_if(comps.begin(), comps.end(), [](const mpq_class& c) { return c != 0; }) > 1;
}

std::string FieldElement::to_string() const {
  auto comps = components();
  if (comps.size() == 1) return comps[0].get_str();
  std::string out;
  bool first = true;
  for (std::size_t i = comps.size(); i-- > 0;) {
    mpq_class c = comps[i];
    if (c == 0) continue;
    // Display finite-field components in [0, p); the sign only appears over Q.
    bool neg = c < 0;
    mpq_class mag = neg ? mpq_class(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string g = f_->generator + (i > 1 ? "^" + std::to_string(i) : "");
    if (i == 0)
      out += mag.get_str();
    else if (mag == 1)
      out += g;
    else
      out += mag.get_str() + "*" + g;
  }
  return first ? "0" : out;
}

std::int64_t characteristic(const Field& f) { return f.characteristic(); }

std::optional<FieldElement> primitive_cube_root(const Field& f) {
  if (f.is_finite()) {
    for (std::uint64_t i = 0; i < f.size(); ++i) {
      auto x = f.element(i);
      if (!x.is_one() && x.pow(3).is_one()) return x;
    }
    return std::nullopt;
  }
  if (f.kind() == FieldKind::rationals) return std::nullopt;
  // The only characteristic-0 extension is Q[Y]/(Y^2+Y+1), whose generator
  // is a root of the cyclotomic modulus.
  auto g = f.generator();
  if (!g.is_one() && g.pow(3).is_one()) return g;
  return std::nullopt;
}

}  // namespace symlab
