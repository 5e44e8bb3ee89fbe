#include "symlab/famlab.hpp"

#include <algorithm>

#include "symlab/parse.hpp"

namespace symlab {

RootFamily::RootFamily(std::vector<RationalFunction> roots, std::string param)
    : roots_(std::move(roots)), param_(std::move(param)) {
  if (roots_.size() < 2) throw InputError("a root family needs at least two roots");
  if (!symbols().find(param_)) throw InputError("parameter '" + param_ + "' is not a symbol of the family");
  for (const auto& r : roots_)
    if (!(r.field() == field()) || !(r.symbols() == symbols()))
      throw InputError("roots live in different rings");
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t j = i + 1; j < roots_.size(); ++j)
      if (roots_[i] == roots_[j])
        throw InputError("roots " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
}

RootFamily RootFamily::parse(const std::string& roots, const Field& field, const SymbolList& symbols,
                             std::string param) {
  std::vector<RationalFunction> rs;
  for (const auto& s : split_top_level(roots)) rs.push_back(parse_ratfunc(s, field, symbols));
  return RootFamily(std::move(rs), std::move(param));
}

RootFamily RootFamily::symbolic_scaled(int n, const Field& field) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("t");
  const SymbolList s(names);
  const auto t = RationalFunction::variable(field, s, "t");
  std::vector<RationalFunction> rs;
  for (int i = 0; i < n; ++i) rs.push_back(t * RationalFunction::variable(field, s, names[i]));
  return RootFamily(std::move(rs));
}

RootFamily RootFamily::scaled(const std::vector<FieldElement>& xs) {
  if (xs.empty()) throw InputError("no root values given");
  const Field f = xs.front().field();
  const SymbolList s{"t"};
  const auto t = RationalFunction::variable(f, s, "t");
  std::vector<RationalFunction> rs;
  for (const auto& x : xs) rs.push_back(t * RationalFunction::constant(f, s, x));
  return RootFamily(std::move(rs));
}

RPoly RootFamily::modulus() const {
  const RationalFunction one = roots_.front().one_like();
  RPoly f = RPoly::constant(one);
  for (const auto& r : roots_) f = f * RPoly({-r, one}, one);
  return f;
}

RootFamily RootFamily::specialize(const std::string& symbol, const FieldElement& value) const {
  if (symbol == param_) throw InputError("use roots_at to specialize the parameter");
  std::vector<RationalFunction> rs;
  for (const auto& r : roots_) rs.push_back(r.substitute(symbol, value));
  return RootFamily(std::move(rs), param_);
}

std::vector<RationalFunction> RootFamily::roots_at(const FieldElement& t0) const {
  std::vector<RationalFunction> out;
  for (const auto& r : roots_) {
    auto lim = limit_at(r, param_, t0);
    if (std::holds_alternative<Pole>(lim))
      throw InputError("root " + r.to_string() + " has a pole at " + param_ + " = " + t0.to_string());
    out.push_back(std::get<RationalFunction>(lim));
  }
  return out;
}

RPoly PermAutomorphism::image() const { return RPoly(coeffs, coeffs.front()); }

std::string PermAutomorphism::to_string() const { return "X ↦ " + image().to_string(); }

namespace {

void check_perm(const Perm& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) throw InputError("permutation has the wrong size");
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v]) throw InputError("not a permutation");
    seen[v] = true;
  }
}

// adj(M) applied to the permuted root vector, together with det(M), where M is
// the Vandermonde matrix of the roots.
std::pair<std::vector<RationalFunction>, RationalFunction> adjugate_image(const RootFamily& fam,
                                                                          const Perm& sigma) {
  const int n = fam.size();
  check_perm(sigma, n);
  const auto& r = fam.roots();
  Matrix<RationalFunction> m(n, n, r.front());
  for (int i = 0; i < n; ++i) {
    RationalFunction p = r.front().one_like();
    for (int k = 0; k < n; ++k) {
      m(i, k) = p;
      p = p * r[i];
    }
  }
  std::vector<RationalFunction> v;
  for (int i = 0; i < n; ++i) v.push_back(r[sigma[i]]);
  return {m.adjugate() * v, m.determinant()};
}

}  // namespace

PermAutomorphism perm_coeff_vector(const RootFamily& fam, const Perm& sigma) {
  auto [w, det] = adjugate_image(fam, sigma);
  if (det.is_zero()) throw InconsistencyError("Vandermonde determinant vanishes for distinct roots");
  PermAutomorphism out{sigma, {}};
  for (auto& x : w) out.coeffs.push_back(x / det);
  return out;
}

Analysis analyze_at(const RootFamily& fam, const Perm& sigma, const FieldElement& t0) {
  const PermAutomorphism pa = perm_coeff_vector(fam, sigma);
  Analysis out;
  out.sigma = sigma;
  std::vector<RationalFunction> lim;
  for (int k = 0; k < static_cast<int>(pa.coeffs.size()); ++k) {
    auto l = limit_at(pa.coeffs[k], fam.param(), t0);
    if (auto* p = std::get_if<Pole>(&l))
      out.poles.push_back({k, p->order});
    else
      lim.push_back(std::get<RationalFunction>(l));
  }
  if (!out.poles.empty()) return out;

  const RationalFunction one = fam.roots().front().one_like();
  RPoly f = RPoly::constant(one);
  for (const auto& r : fam.roots_at(t0)) f = f * RPoly({-r, one}, one);
  const MonogenicAlgebra<RationalFunction> A0(f);
  RPoly g(lim, one);
  if (!is_automorphism(A0, g))
    throw InconsistencyError("limit of " + pa.to_string() + " at " + fam.param() + " = " + t0.to_string() +
                             " is not an automorphism");
  out.survives = true;
  out.verified = true;
  out.limit = std::move(g);
  return out;
}

SurvivalReport surviving_subgroup(const RootFamily& fam, const FieldElement& t0) {
  const int n = fam.size();
  if (n > 5) throw InputError("families with more than 5 roots are not supported");
  SurvivalReport rep{t0, {}, {}, 0};
  std::vector<RPoly> distinct;
  for (const auto& sigma : all_perms(n)) {
    Analysis a = analyze_at(fam, sigma, t0);
    if (a.survives) {
      rep.surviving.push_back(sigma);
      if (std::none_of(distinct.begin(), distinct.end(), [&](const RPoly& g) { return g == *a.limit; }))
        distinct.push_back(*a.limit);
    }
    rep.entries.push_back(std::move(a));
  }
  if (!is_subgroup(rep.surviving)) throw InconsistencyError("surviving permutations do not form a subgroup");
  rep.effective_order = static_cast<int>(distinct.size());
  return rep;
}

SurvivalCondition survival_condition(int x_count, const Perm& sigma, const Field& field) {
  const RootFamily fam = RootFamily::symbolic_scaled(x_count, field);
  auto [w, det] = adjugate_image(fam, sigma);
  if (!det.is_polynomial()) throw InconsistencyError("Vandermonde determinant is not a polynomial");
  const std::size_t t = fam.symbols().index("t");
  const int ord_det = det.numerator().order_in(t);
  std::optional<SurvivalCondition> worst;
  for (int k = 0; k < static_cast<int>(w.size()); ++k) {
    if (w[k].is_zero()) continue;
    const MultiPoly& p = w[k].numerator();
    const int ord = p.order_in(t) - ord_det;
    if (ord < 0 && (!worst || ord <= worst->pole_order))
      worst = SurvivalCondition{sigma, p.coefficient_in(t, p.order_in(t)), k, ord};
  }
  if (!worst) throw InputError("permutation " + to_cycles(sigma) + " has no pole at t = 0");
  return *worst;
}

std::vector<FieldElement> normalize_roots(const std::vector<FieldElement>& xs) {
  if (xs.size() < 2) throw InputError("need at least two root values");
  const FieldElement d = xs[1] - xs[0];
  if (d.is_zero()) throw InputError("x1 and x2 must differ");
  std::vector<FieldElement> out;
  for (const auto& x : xs) out.push_back((x - xs[0]) / d);
  return out;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  if (n > mpz_class("1000000000000")) throw InputError("coefficients too large for the rational root search");
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

FieldElement conjugate_zeta3(const FieldElement& x) {
  const auto c = x.components();
  const Field f = x.field();
  return f.from_rational(c[0] - c[1]) - f.from_rational(c[1]) * f.generator();
}

// Roots in the field of a univariate polynomial given densely, lowest first.
std::vector<FieldElement> field_roots(std::vector<FieldElement> c, const Field& f) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  std::vector<FieldElement> out;
  if (c.size() <= 1) return out;
  auto eval = [&](const FieldElement& x) {
    FieldElement acc = f.zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  };
  if (f.is_finite()) {
    for (const auto& x : f.elements())
      if (eval(x).is_zero()) out.push_back(x);
    return out;
  }
  // Characteristic 0: reduce to a rational polynomial (times its conjugate for
  // Q(zeta3)) and use the rational root test on it.
  std::vector<mpq_class> rat;
  if (f.kind() == FieldKind::rationals) {
    for (const auto& x : c) rat.push_back(*x.as_rational());
  } else if (f.spec() == "Qzeta3") {
    std::vector<FieldElement> cc;
    for (const auto& x : c) cc.push_back(conjugate_zeta3(x));
    const UniPoly<FieldElement> norm = UniPoly<FieldElement>(c, f.zero()) * UniPoly<FieldElement>(cc, f.zero());
    for (const auto& x : norm.coeffs()) {
      auto q = x.as_rational();
      if (!q) throw InconsistencyError("norm polynomial is not rational");
      rat.push_back(*q);
    }
  } else {
    throw InputError("critical values are not supported over " + f.spec());
  }
  mpz_class l = 1;
  for (const auto& q : rat) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& q : rat) z.push_back(mpz_class(q * l));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) out.push_back(f.zero());
  if (low + 1 < z.size()) {
    for (const auto& p : divisors(z[low]))
      for (const auto& q : divisors(z.back()))
        for (int sign : {1, -1}) {
          mpq_class cand(p * sign, q);
          cand.canonicalize();
          const FieldElement x = f.from_rational(cand);
          if (eval(x).is_zero() && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
        }
  }
  // Deflate by the rational roots; a linear remainder gives one more root
  // (only possible over Q(zeta3)).
  UniPoly<FieldElement> rest(c, f.zero());
  for (const auto& x : out)
    for (;;) {
      auto [q, rem] = rest.divmod(UniPoly<FieldElement>({-x, f.one()}, f.zero()));
      if (!rem.is_zero()) break;
      rest = q;
    }
  if (rest.degree() == 1) {
    const FieldElement x = -rest.coeff(0) / rest.coeff(1);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<FieldElement> roots_in_field(const UniPoly<FieldElement>& p) {
  if (p.is_zero()) throw InputError("the zero polynomial has every root");
  auto out = field_roots(p.coeffs(), p.coeff(0).field());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<std::pair<FieldElement, int>>> split_over_field(const UniPoly<FieldElement>& p) {
  const Field f = p.coeff(0).field();
  std::vector<std::pair<FieldElement, int>> out;
  UniPoly<FieldElement> rest = p;
  for (const auto& x : roots_in_field(p)) {
    int m = 0;
    for (;;) {
      auto [q, rem] = rest.divmod(UniPoly<FieldElement>({-x, f.one()}, f.zero()));
      if (!rem.is_zero()) break;
      rest = q;
      ++m;
    }
    out.emplace_back(x, m);
  }
  if (rest.degree() > 0) return std::nullopt;
  return out;
}

std::vector<FieldElement> critical_values(const RootFamily& fam) {
  const std::size_t t = fam.symbols().index(fam.param());
  std::vector<FieldElement> out;
  const auto& r = fam.roots();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      const MultiPoly num = (r[i] - r[j]).numerator();
      for (auto v : num.used_variables())
        if (v != t)
          throw InputError("substitute values for '" + fam.symbols()[v] + "' before looking for critical values");
      std::vector<FieldElement> c;
      for (int k = 0; k <= num.degree_in(t); ++k) c.push_back(num.coefficient_in(t, k).constant_term());
      for (const auto& x : field_roots(c, fam.field()))
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symlab
