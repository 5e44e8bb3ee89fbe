#include "symlab/commands.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "symlab/chigroup.hpp"
#include "symlab/famlab.hpp"
#include "symlab/fourlines.hpp"
#include "symlab/parse.hpp"
#include "symlab/quotalg.hpp"
#include "symlab/structalg.hpp"

namespace symlab {

namespace {

std::vector<std::string> strings(const std::vector<FieldElement>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::vector<FieldElement> parse_values(const std::string& csv, const Field& f) {
  std::vector<FieldElement> out;
  for (const auto& s : split_top_level(csv)) out.push_back(parse_scalar(s, f));
  return out;
}

// c_1*name_1 + c_2*name_2 + ...
template <Scalar S>
std::string vec_string(const std::vector<S>& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string cs = v[i].to_string();
    bool neg = !v[i].is_compound() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (v[i].is_compound()) cs = "(" + cs + ")";
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (names[i] == "1")
      out += cs;
    else
      out += (cs == "1" ? "" : cs + "*") + names[i];
  }
  return out.empty() ? "0" : out;
}

// Polynomial in X with coefficients rational in the symbols.
RPoly parse_rpoly(const std::string& src, const Field& f, const SymbolList& params) {
  std::vector<std::string> names = params.names();
  names.push_back("X");
  const SymbolList all(names);
  const auto r = parse_ratfunc(src, f, all);
  const std::size_t ix = all.index("X");
  if (r.denominator().degree_in(ix) > 0) throw InputError("'" + src + "' is not polynomial in X");
  const RationalFunction den(r.denominator());
  std::vector<RationalFunction> c;
  for (int k = 0; k <= std::max(0, r.numerator().degree_in(ix)); ++k)
    c.push_back(RationalFunction(r.numerator().coefficient_in(ix, k)) / den);
  return RPoly(c, RationalFunction(MultiPoly::constant(f, all, f.one())));
}

Report run_conjugate(const AutArgs& a) {
  Report r{"aut",
           {{"field", a.field}, {"poly", a.poly}, {"params", a.params}, {"model", a.model}, {"iso", a.iso},
            {"alpha", a.alpha}},
           Json::object(),
           {}};
  if (!a.limit.empty()) r.inputs["limit"] = a.limit;
  if (a.model.empty() || a.alpha.empty()) throw InputError("--iso needs --model and --alpha");
  const Field f = Field::parse(a.field);
  const SymbolList params(split_top_level(a.params));
  const MonogenicAlgebra<RationalFunction> A(parse_rpoly(a.poly, f, params)), B(parse_rpoly(a.model, f, params));
  const RPoly out = conjugate_through_iso(A, B, parse_rpoly(a.iso, f, params), parse_rpoly(a.alpha, f, params));
  if (!is_endomorphism(A, out)) throw InconsistencyError("conjugated map is not an endomorphism");
  r.results["algebra"] = "k[X]/(" + A.modulus().to_string() + ")";
  r.results["model"] = "k[X]/(" + B.modulus().to_string() + ")";
  r.results["conjugated"] = "X ↦ " + out.to_string();
  r.results["endomorphism"] = true;
  if (a.limit.empty()) return r;

  const auto eq = a.limit.find('=');
  if (eq == std::string::npos) throw InputError("--limit expects symbol=value");
  std::string sym = a.limit.substr(0, eq);
  sym.erase(std::remove_if(sym.begin(), sym.end(), ::isspace), sym.end());
  const FieldElement v = parse_scalar(a.limit.substr(eq + 1), f);
  if (!params.find(sym)) throw InputError("unknown limit symbol '" + sym + "'");
  std::vector<RationalFunction> lim;
  Json poles = Json::array();
  const SymbolList& all = out.coeff(0).symbols();
  const auto s = RationalFunction::variable(f, all, sym) - RationalFunction(MultiPoly::constant(f, all, v));
  for (int k = 0; k <= out.degree(); ++k) {
    const auto res = limit_at(out.coeff(k), sym, v);
    if (const auto* p = std::get_if<Pole>(&res)) {
      // Leading coefficient of the Laurent expansion: zero exactly when the pole cancels.
      auto lead = out.coeff(k);
      for (int i = 0; i < -p->order; ++i) lead = lead * s;
      const auto l = std::get<RationalFunction>(limit_at(lead, sym, v));
      poles.push_back({{"index", k}, {"order", p->order}, {"finite_iff", l.to_string() + " = 0"}});
      lim.push_back(out.coeff(k).zero_like());
    } else {
      lim.push_back(std::get<RationalFunction>(res));
    }
  }
  Json lj;
  lj["at"] = sym + " = " + v.to_string();
  lj["exists"] = poles.empty();
  if (poles.empty())
    lj["limit"] = "X ↦ " + RPoly(lim, out.coeff(0).one_like()).to_string();
  else
    lj["poles"] = poles;
  r.results["limit"] = lj;
  return r;
}

}  // namespace

Report run_aut(const AutArgs& a, Exec exec) {
  if (!a.iso.empty()) return run_conjugate(a);
  Report r{"aut", {{"field", a.field}, {"poly", a.poly}, {"brute_force", a.brute_force}}, Json::object(), {}};
  if (a.poly.empty()) throw InputError("--poly is required");
  const Field f = Field::parse(a.field);
  const auto p = parse_unipoly(a.poly, f);
  const MonogenicAlgebra<FieldElement> A(p);
  r.results["algebra"] = "k[X]/(" + p.to_string() + ")";
  r.results["dimension"] = A.dim();

  const auto split = split_over_field(p);
  r.results["splits"] = split.has_value();
  if (split) {
    Json roots = Json::array();
    std::vector<int> mults;
    for (const auto& [z, m] : *split) {
      roots.push_back({{"root", z.to_string()}, {"multiplicity", m}});
      mults.push_back(m);
    }
    r.results["roots"] = roots;
    const auto d = fpa_decompose_multiplicities(mults);
    const auto desc = aut_description(d);
    r.results["decomposition"] = d.to_string();
    r.results["permutation_part"] = desc.permutation_string();
    Json factors = Json::array();
    for (const auto& x : desc.factors)
      factors.push_back({{"multiplicity", x.multiplicity},
                         {"count", x.count},
                         {"dimension", x.dimension},
                         {"description", x.description}});
    r.results["factors"] = factors;
    r.results["finite_order"] = desc.finite_order ? Json(*desc.finite_order) : Json(nullptr);
    if (f.is_finite()) r.results["order_over_field"] = desc.order_over_finite_field(f.size());
  } else {
    r.warnings.push_back("the polynomial has no complete set of roots in " + f.spec() +
                         "; no decomposition into fat points is given");
  }

  if (f.is_finite()) {
    const std::uint64_t budget = a.brute_force ? 100000000 : 1000000;
    std::vector<UniPoly<FieldElement>> auts;
    try {
      auts = brute_force_automorphisms(A, exec, budget);
    } catch (const InputError& e) {
      r.warnings.push_back(std::string("brute force skipped: ") + e.what());
      return r;
    }
    Json bf;
    bf["count"] = auts.size();
    if (split && r.results["order_over_field"].get<std::uint64_t>() != auts.size())
      throw InconsistencyError("brute force count differs from the structure formula");
    if (!closed_under_composition(A, auts)) throw InconsistencyError("automorphisms not closed under composition");
    bf["closed_under_composition"] = true;
    Json prof = Json::object();
    for (const auto& [k, n] : order_profile(A, auts)) prof[std::to_string(k)] = n;
    bf["order_profile"] = prof;
    if (auts.size() <= 60) {
      Json list = Json::array();
      for (const auto& g : auts) list.push_back("X ↦ " + g.to_string());
      bf["automorphisms"] = list;
    }
    r.results["brute_force"] = bf;
  }
  return r;
}

Report run_idem(const IdemArgs& a) {
  Report r{"idem", {{"field", a.field}}, Json::object(), {}};
  const Field f = Field::parse(a.field);
  std::vector<FieldElement> roots;
  if (!a.roots.empty()) {
    r.inputs["roots"] = a.roots;
    roots = parse_values(a.roots, f);
  } else if (!a.poly.empty()) {
    r.inputs["poly"] = a.poly;
    const auto split = split_over_field(parse_unipoly(a.poly, f));
    if (!split) throw InputError("the polynomial does not split over " + f.spec());
    for (const auto& [z, m] : *split) {
      if (m > 1) throw InputError("repeated root " + z.to_string() + ": no idempotent basis");
      roots.push_back(z);
    }
  } else {
    throw InputError("give --roots or --poly");
  }
  require_distinct(roots);
  const auto A = make_algebra(poly_from_roots(roots, f.one()));
  const auto e = idempotents(A, roots);
  const auto one = AlgebraElement<FieldElement>::one(A), x = AlgebraElement<FieldElement>::basis(A, 1);
  const auto zero = one * f.zero();
  auto sum = zero;
  for (std::size_t i = 0; i < e.size(); ++i) {
    sum = sum + e[i];
    if (!(x * e[i] == e[i] * roots[i])) throw InconsistencyError("X e_i != z_i e_i");
    for (std::size_t j = 0; j < e.size(); ++j)
      if (!(e[i] * e[j] == (i == j ? e[i] : zero))) throw InconsistencyError("idempotents are not orthogonal");
  }
  if (!(sum == one)) throw InconsistencyError("idempotents do not sum to 1");

  r.results["algebra"] = "k[X]/(" + A->modulus().to_string() + ")";
  Json list = Json::array();
  for (std::size_t i = 0; i < e.size(); ++i) list.push_back({{"root", roots[i].to_string()}, {"e", e[i].to_string()}});
  r.results["idempotents"] = list;
  r.results["checks"] = {{"orthogonal", true}, {"sum_is_one", true}, {"x_times_e", true}};
  const auto [m, inv] = vandermonde_pair(roots);
  if (!(m * inv).is_identity()) throw InconsistencyError("M * M^-1 != I");
  Json rows = Json::array();
  for (std::size_t i = 0; i < inv.rows(); ++i) {
    std::vector<FieldElement> row;
    for (std::size_t j = 0; j < inv.cols(); ++j) row.push_back(inv(i, j));
    rows.push_back(strings(row));
  }
  r.results["vandermonde_inverse"] = rows;
  return r;
}

Report run_family(const FamilyArgs& a) {
  Report r{"family", {{"field", a.field}, {"roots", a.roots}, {"param", a.param}}, Json::object(), {}};
  if (!a.at.empty()) r.inputs["at"] = a.at;
  r.inputs["perms"] = a.perms;
  const Field f = Field::parse(a.field);
  const RootFamily fam = RootFamily::parse(a.roots, f, SymbolList{a.param}, a.param);
  const int n = fam.size();
  if (n > 5) throw InputError("families with more than 5 roots are not supported");
  std::vector<std::string> rs;
  for (const auto& x : fam.roots()) rs.push_back(x.to_string());
  r.results["roots"] = rs;
  r.results["modulus"] = fam.modulus().to_string();
  const auto crit = critical_values(fam);
  r.results["critical_values"] = strings(crit);

  std::vector<FieldElement> points;
  for (const auto& s : a.at) points.push_back(parse_scalar(s, f));
  if (a.at.empty()) {
    points = crit;
    if (crit.empty()) r.warnings.push_back("no critical values found; nothing to analyse");
  }

  std::vector<Perm> perms;
  const bool all = a.perms == "all";
  if (all)
    perms = all_perms(n);
  else
    for (const auto& s : split_top_level(a.perms)) perms.push_back(parse_cycles(s, n));

  Json maps = Json::array();
  for (const auto& s : perms)
    maps.push_back({{"perm", to_cycles(s)}, {"map", perm_coeff_vector(fam, s).to_string()}});
  r.results["generic_maps"] = maps;

  Json analyses = Json::array();
  for (const auto& t0 : points) {
    Json at;
    at[a.param] = t0.to_string();
    std::vector<Analysis> entries;
    if (all) {
      const auto rep = surviving_subgroup(fam, t0);
      entries = rep.entries;
      std::vector<std::string> surv;
      for (const auto& s : rep.surviving) surv.push_back(to_cycles(s));
      at["surviving"] = surv;
      at["surviving_order"] = rep.surviving.size();
      at["effective_order"] = rep.effective_order;
    } else {
      for (const auto& s : perms) entries.push_back(analyze_at(fam, s, t0));
    }
    Json list = Json::array();
    for (const auto& e : entries) {
      Json x;
      x["perm"] = to_cycles(e.sigma);
      if (e.survives) {
        x["status"] = "survives";
        x["limit"] = "X ↦ " + e.limit->to_string();
        x["verified"] = e.verified;
      } else {
        x["status"] = "pole";
        Json poles = Json::array();
        for (const auto& p : e.poles) poles.push_back({{"index", p.index}, {"order", p.order}});
        x["poles"] = poles;
      }
      list.push_back(x);
    }
    at["permutations"] = list;
    analyses.push_back(at);
  }
  r.results["analyses"] = analyses;
  return r;
}

Report run_survival(const SurvivalArgs& a) {
  Report r{"survival", {{"perm", a.perm}, {"size", a.size}, {"field", a.field}}, Json::object(), {}};
  if (!a.x.empty()) r.inputs["x"] = a.x;
  if (a.size < 2 || a.size > 5) throw InputError("--size must be between 2 and 5");
  const Field f = Field::parse(a.field);
  const Perm sigma = parse_cycles(a.perm, a.size);
  const auto c = survival_condition(a.size, sigma, f);
  r.results["roots"] = "t*x1, ..., t*x" + std::to_string(a.size);
  r.results["condition"] = c.condition.to_string() + " = 0";
  r.results["pole_index"] = c.pole_index;
  r.results["pole_order"] = c.pole_order;
  std::vector<std::size_t> ren;
  for (int v : sigma) ren.push_back(v);
  ren.push_back(a.size);
  const auto moved = c.condition.rename(ren);
  r.results["invariant_under_perm"] =
      moved * c.condition.leading_coefficient() == c.condition * moved.leading_coefficient();

  if (!a.x.empty()) {
    const auto xs = parse_values(a.x, f);
    if (static_cast<int>(xs.size()) != a.size) throw InputError("--x needs " + std::to_string(a.size) + " values");
    auto point = xs;
    point.push_back(f.zero());
    Json w;
    w["condition_value"] = c.condition.evaluate(point).to_string();
    const auto an = analyze_at(RootFamily::scaled(xs), sigma, f.zero());
    w["survives"] = an.survives;
    if (an.survives) w["limit"] = "X ↦ " + an.limit->to_string();
    r.results["witness"] = w;
  }
  return r;
}

Report run_chi(const ChiArgs& a, Exec exec) {
  Report r{"chi", {{"field", a.field}}, Json::object(), {}};
  const Field f = Field::parse(a.field);
  const auto oc = order_class(f);
  r.warnings = oc.warnings;
  r.results["group"] = "Aut(k[X]/(X^3)) = {chi(a, b): X ↦ aX + bX^2, a != 0}";
  r.results["order2_case"] = oc.order2_case;
  r.results["order2"] = oc.order2_description;
  r.results["order3_case"] = oc.order3_case;
  r.results["order3"] = oc.order3_description;
  r.results["zeta3"] = oc.zeta3 ? Json(oc.zeta3->to_string()) : Json(nullptr);
  if (!f.is_finite()) return r;
  auto names = [](const std::vector<FChi>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
  };
  r.results["group_order"] = (f.size() - 1) * f.size();
  r.results["order2_count"] = oc.order2->size();
  r.results["order2_elements"] = names(*oc.order2);
  r.results["order3_count"] = oc.order3->size();
  r.results["order3_elements"] = names(*oc.order3);
  const auto ns = no_s3_check(f, exec);
  Json s3;
  s3["holds"] = ns.holds;
  s3["involutions"] = ns.involutions;
  s3["pairs_checked"] = ns.pairs_checked;
  if (ns.counterexample) {
    const auto& [u, v] = *ns.counterexample;
    s3["counterexample"] = {u.to_string(), v.to_string(), chi_compose(u, v).to_string()};
    r.warnings.push_back("two involutions multiply to an element of order 3: " + u.to_string() + " o " +
                         v.to_string() + " = " + chi_compose(u, v).to_string() + "; G contains S3 here");
  }
  r.results["no_s3"] = s3;
  return r;
}

Report run_talg(const TalgArgs& a, Exec exec) {
  Report r{"talg", {{"field", a.field}}, Json::object(), {}};
  const Field f = Field::parse(a.field);
  std::vector<std::string> names{"1", "e2'", "e3'"};
  std::optional<FStructAlgebra> A;
  std::optional<FieldElement> t;
  if (!a.table_json.empty()) {
    r.inputs["table"] = "given";
    A = parse_struct_algebra(a.table_json);
    if (!(A->proto().field() == f)) throw InputError("--field does not match the field of the table");
    names = {"1"};
    for (std::size_t i = 1; i < A->dim(); ++i) names.push_back("e" + std::to_string(i + 1));
  } else {
    r.inputs["t"] = a.t;
    t = parse_scalar(a.t, f);
    A = build_T(*t);
  }
  r.inputs["brute_force"] = a.brute_force;
  const std::size_t n = A->dim();
  r.results["dimension"] = n;
  r.results["basis"] = names;
  Json tab = Json::object();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) tab[names[i] + "*" + names[j]] = vec_string(A->table()[i][j], names);
  r.results["products"] = tab;
  r.results["commutative"] = A->is_commutative();

  if (t) {
    // Transport of the T_1 pair (b, b') to T_t, symbolically, and its t -> 0 limit.
    const SymbolList s{"t", "b", "bp"};
    const auto tt = RationalFunction::variable(f, s, "t");
    const TPair<RationalFunction> p{RationalFunction::variable(f, s, "b"), RationalFunction::variable(f, s, "bp")};
    const auto m = transport_aut_T(tt, p).m;
    auto image = [&](const Matrix<RationalFunction>& mm, std::size_t j) {
      std::vector<RationalFunction> col;
      for (std::size_t i = 0; i < 3; ++i) col.push_back(mm(i, j));
      return vec_string(col, {"1", "e2'", "e3'"});
    };
    const auto lim = limit_matrix(m, "t", f.zero());
    if (!lim) throw InconsistencyError("transported automorphism has a pole at t = 0");
    r.results["transport"] = {{"e2'", image(m, 1)}, {"e3'", image(m, 2)}};
    r.results["transport_limit_t0"] = {{"e2'", image(*lim, 1)}, {"e3'", image(*lim, 2)}};
  }

  if (a.brute_force) {
    if (!f.is_finite()) throw InputError("--brute-force needs a finite field");
    const auto auts = brute_force_algebra_automorphisms(*A, exec);
    Json bf;
    bf["count"] = auts.size();
    std::set<std::vector<std::uint64_t>> keys;
    auto key = [](const Matrix<FieldElement>& mm) {
      std::vector<std::uint64_t> k;
      for (std::size_t i = 0; i < mm.rows(); ++i)
        for (std::size_t j = 0; j < mm.cols(); ++j) k.push_back(mm(i, j).index());
      return k;
    };
    for (const auto& mm : auts) keys.insert(key(mm));
    for (const auto& x : auts)
      for (const auto& y : auts)
        if (!keys.count(key(x * y))) throw InconsistencyError("automorphisms not closed under composition");
    bf["closed_under_composition"] = true;
    if (t && t->is_one()) {
      for (const auto& x : auts)
        for (const auto& y : auts) {
          const TPair<FieldElement> px{x(2, 1), x(2, 2)}, py{y(2, 1), y(2, 2)};
          if (!(pair_matrix(px) == x) || !(pair_matrix(compose_pair(px, py)) == x * y))
            throw InconsistencyError("automorphism of T_1 does not follow the (b, b') law");
        }
      bf["pair_model"] = "every automorphism is e2' ↦ e2' + b*e3', e3' ↦ b'*e3' with b' != 0";
      bf["composition_law_pairs_checked"] = auts.size() * auts.size();
    }
    if (t && t->is_zero()) {
      const std::uint64_t q = f.size();
      bf["gl2_order"] = (q * q - 1) * (q * q - q);
    }
    if (auts.size() <= 60) {
      Json list = Json::array();
      for (const auto& mm : auts) {
        Json img = Json::object();
        for (std::size_t j = 1; j < n; ++j) {
          std::vector<FieldElement> col;
          for (std::size_t i = 0; i < n; ++i) col.push_back(mm(i, j));
          img[names[j]] = vec_string(col, names);
        }
        list.push_back(img);
      }
      bf["automorphisms"] = list;
    }
    r.results["brute_force"] = bf;
  }
  return r;
}

Report run_lines(const LinesArgs& a) {
  Report r{"lines", Json::object(), Json::object(), {}};
  if (!(a.tol > 0)) throw InputError("--tol must be positive");
  if (!a.config.empty()) {
    Json rows = Json::array();
    std::istringstream in(a.config);
    for (std::string line; std::getline(in, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) rows.push_back(line);
    r.inputs["config"] = rows;
    r.inputs["tol"] = a.tol;
    const Config4 c = parse_config(a.config);
    std::vector<std::string> ls;
    for (const auto& l : c) ls.push_back(l.to_string());
    r.results["lines"] = ls;
    Json rel = Json::object();
    std::vector<std::pair<int, int>> parallel;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const auto pr = pair_relation(c[i], c[j]);
        rel[std::to_string(i + 1) + "-" + std::to_string(j + 1)] = relation_name(pr);
        if (pr == PairRelation::parallel_distinct) parallel.emplace_back(i, j);
      }
    r.results["relations"] = rel;
    const auto g = generic_symmetry(c);
    std::vector<std::string> gs;
    for (const auto& s : g.group) gs.push_back(to_cycles(s));
    r.results["generic_order"] = g.group.size();
    r.results["generic_group"] = gs;
    r.results["stabilizer_order"] = g.stabilizer.size();
    const auto d = design_isometries(c, a.tol);
    Json dj;
    dj["infinite"] = d.infinite;
    if (!d.infinite) {
      std::vector<std::string> is;
      for (const auto& x : d.isometries) is.push_back(x.describe());
      dj["order"] = d.isometries.size();
      dj["isometries"] = is;
      dj["klein_four"] = is_klein_four(d.isometries, a.tol);
    }
    r.results["design"] = dj;
    if (parallel.size() == 2 && parallel[0].first != parallel[1].first && parallel[0].second != parallel[1].second &&
        parallel[0].first != parallel[1].second && parallel[0].second != parallel[1].first)
      r.warnings.push_back(
          "two pairs of parallel lines: the intersection pattern is preserved by 8 permutations, including the "
          "swap of the two pairs, not only by the Klein four group fixing each pair");
    return r;
  }

  // "paper" is accepted as an alias.
  if (a.family != "standard" && a.family != "paper")
    throw InputError("unknown family '" + a.family + "' (only 'standard')");
  r.inputs["family"] = "standard";
  std::vector<mpq_class> grid;
  if (!a.grid.empty()) {
    r.inputs["grid"] = a.grid;
    for (const auto& s : split_top_level(a.grid)) grid.push_back(parse_rational(s));
  } else {
    r.inputs["from"] = a.from;
    r.inputs["to"] = a.to;
    r.inputs["steps"] = a.steps;
    if (a.steps < 1) throw InputError("--steps must be at least 1");
    const mpq_class lo = parse_rational(a.from), hi = parse_rational(a.to);
    for (int i = 0; i < a.steps; ++i)
      grid.push_back(a.steps == 1 ? lo : mpq_class(lo + (hi - lo) * i / (a.steps - 1)));
  }
  r.inputs["tol"] = a.tol;
  const auto rows = sweep(standard_family, grid, a.tol);
  Json out = Json::array();
  std::vector<std::string> flagged;
  for (const auto& row : rows) {
    out.push_back({{"t", row.t.get_str()},
                   {"generic_order", row.generic_order},
                   {"design_order", row.design_order < 0 ? Json("infinite") : Json(row.design_order)},
                   {"transition", row.transition}});
    if (row.transition) flagged.push_back(row.t.get_str());
  }
  r.results["rows"] = out;
  r.results["transitions"] = flagged;
  const auto last = design_isometries(standard_family(grid.back()), a.tol);
  if (grid.back() == 1) r.results["design_group_at_1_is_klein_four"] = is_klein_four(last.isometries, a.tol);
  return r;
}

}  // namespace symlab
