#include "symlab/fourlines.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "symlab/error.hpp"

namespace symlab {

namespace {

std::string num(double x) {
  if (std::abs(x) < 5e-10) x = 0;
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

// Exact form when the denominator is small, otherwise a rounded decimal.
std::string num(const mpq_class& q) {
  if (abs(q.get_den()) < 1000000) return q.get_str();
  return num(q.get_d());
}

}  // namespace

Line::Line(mpq_class a, mpq_class b, mpq_class c) {
  if (a == 0 && b == 0) throw InputError("a line needs (a, b) != (0, 0)");
  const mpq_class lead = a != 0 ? a : b;
  a_ = a / lead;
  b_ = b / lead;
  c_ = c / lead;
  const double da = a_.get_d(), db = b_.get_d(), dc = c_.get_d();
  const double norm = std::hypot(da, db);
  double nx = da / norm, ny = db / norm, off = dc / norm;
  // Normal angle in [0, pi).
  if (ny < 0 || (ny == 0 && nx < 0)) {
    nx = -nx;
    ny = -ny;
    off = -off;
  }
  angle_ = std::atan2(ny, nx);
  if (angle_ >= std::numbers::pi) angle_ -= std::numbers::pi;
  offset_ = off;
}

Line Line::from_doubles(double a, double b, double c) { return Line(mpq_class(a), mpq_class(b), mpq_class(c)); }

std::string Line::to_string() const {
  if (b_ == 0) return "x = " + num(c_);
  if (a_ == 0) return "y = " + num(c_);
  std::string out = "x";
  const mpq_class ab = abs(b_);
  out += b_ < 0 ? " - " : " + ";
  if (ab != 1) out += num(ab) + "*";
  return out + "y = " + num(c_);
}

PairRelation pair_relation(const Line& l1, const Line& l2) {
  if (l1.a() * l2.b() - l2.a() * l1.b() != 0) return PairRelation::intersecting;
  // Normalized, so parallel lines have equal (a, b).
  return l1.c() == l2.c() ? PairRelation::coincident : PairRelation::parallel_distinct;
}

std::string relation_name(PairRelation r) {
  switch (r) {
    case PairRelation::intersecting:
      return "intersecting";
    case PairRelation::parallel_distinct:
      return "parallel-distinct";
    case PairRelation::coincident:
      return "coincident";
  }
  return "?";
}

GenericSymmetry generic_symmetry(const Config4& c) {
  PairRelation rel[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rel[i][j] = pair_relation(c[i], c[j]);
  auto meet = [&](int i, int j) { return rel[i][j] != PairRelation::parallel_distinct; };
  GenericSymmetry out;
  for (const auto& s : all_perms(4)) {
    bool binary = true, full = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        binary = binary && meet(i, j) == meet(s[i], s[j]);
        full = full && rel[i][j] == rel[s[i]][s[j]];
      }
    if (binary) out.group.push_back(s);
    if (full) out.stabilizer.push_back(s);
  }
  if (!is_subgroup(out.group) || !is_subgroup(out.stabilizer))
    throw InconsistencyError("line symmetries do not form a group");
  return out;
}

std::array<double, 2> Isometry::apply(const std::array<double, 2>& p) const {
  return {o[0][0] * p[0] + o[0][1] * p[1] + v[0], o[1][0] * p[0] + o[1][1] * p[1] + v[1]};
}

Isometry Isometry::then(const Isometry& g) const {
  Isometry r{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r.o[i][j] = g.o[i][0] * o[0][j] + g.o[i][1] * o[1][j];
    r.v[i] = g.o[i][0] * v[0] + g.o[i][1] * v[1] + g.v[i];
  }
  r.reflection = reflection != g.reflection;
  return r;
}

bool Isometry::near(const Isometry& g, double tol) const {
  const double scale = 1 + std::max(std::hypot(v[0], v[1]), std::hypot(g.v[0], g.v[1]));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j)
      if (std::abs(o[i][j] - g.o[i][j]) > tol * 100) return false;
    if (std::abs(v[i] - g.v[i]) > tol * 100 * scale) return false;
  }
  return reflection == g.reflection;
}

bool Isometry::is_identity(double tol) const { return near(Isometry{{{{1, 0}, {0, 1}}}, {0, 0}, false}, tol); }

std::string Isometry::describe() const {
  if (!reflection) {
    const double theta = std::atan2(o[1][0], o[0][0]);
    if (std::abs(theta) < 1e-9) {
      if (std::hypot(v[0], v[1]) < 1e-9) return "identity";
      return "translation by (" + num(v[0]) + ", " + num(v[1]) + ")";
    }
    // Centre p = O p + v.
    const double a = 1 - o[0][0], b = -o[0][1], c = -o[1][0], d = 1 - o[1][1];
    const double det = a * d - b * c;
    const double px = (d * v[0] - b * v[1]) / det, py = (-c * v[0] + a * v[1]) / det;
    return "rotation by " + num(theta / std::numbers::pi) + "*pi about (" + num(px) + ", " + num(py) + ")";
  }
  // Axis direction u with O u = u; the glide part is the component of v along u.
  const double beta = std::atan2(o[1][0], o[0][0]) / 2;
  const double ux = std::cos(beta), uy = std::sin(beta);
  const double glide = v[0] * ux + v[1] * uy;
  const double px = (v[0] - glide * ux) / 2, py = (v[1] - glide * uy) / 2;
  std::string axis;
  if (std::abs(ux) < 1e-9)
    axis = "x = " + num(px);
  else if (std::abs(uy) < 1e-9)
    axis = "y = " + num(py);
  else
    axis = "the line through (" + num(px) + ", " + num(py) + ") at angle " + num(beta / std::numbers::pi) + "*pi";
  if (std::abs(glide) > 1e-9) return "glide reflection along " + axis + " by " + num(glide);
  return "reflection in " + axis;
}

DesignSymmetry design_isometries(const Config4& c, double tol) {
  if (!(tol > 0)) throw InputError("tolerance must be positive");
  std::array<std::array<double, 2>, 4> n;
  std::array<double, 4> off, phi;
  for (int i = 0; i < 4; ++i) {
    phi[i] = c[i].angle();
    n[i] = {std::cos(phi[i]), std::sin(phi[i])};
    off[i] = c[i].offset();
  }
  auto cross = [](const std::array<double, 2>& x, const std::array<double, 2>& y) { return x[0] * y[1] - x[1] * y[0]; };
  DesignSymmetry out;
  bool all_parallel = true;
  for (int i = 1; i < 4; ++i) all_parallel = all_parallel && std::abs(cross(n[0], n[i])) < tol;
  if (all_parallel) {
    out.infinite = true;
    return out;
  }

  std::vector<Isometry> linear;
  auto rotation = [](double a) { return Isometry{{{{std::cos(a), -std::sin(a)}, {std::sin(a), std::cos(a)}}}, {0, 0}, false}; };
  auto reflection = [](double b) {
    return Isometry{{{{std::cos(2 * b), std::sin(2 * b)}, {std::sin(2 * b), -std::cos(2 * b)}}}, {0, 0}, true};
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double d = phi[j] - phi[i], s = (phi[i] + phi[j]) / 2;
      linear.push_back(rotation(d));
      linear.push_back(rotation(d + std::numbers::pi));
      linear.push_back(reflection(s));
      linear.push_back(reflection(s + std::numbers::pi / 2));
    }

  const double scale = 1 + std::abs(*std::max_element(off.begin(), off.end(), [](double x, double y) {
                         return std::abs(x) < std::abs(y);
                       }));
  for (const Isometry& g : linear) {
    // For each line: m = O n_i and the lines j it can land on, with sign.
    std::array<std::array<double, 2>, 4> m;
    std::array<std::vector<std::pair<int, double>>, 4> targets;
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      m[i] = {g.o[0][0] * n[i][0] + g.o[0][1] * n[i][1], g.o[1][0] * n[i][0] + g.o[1][1] * n[i][1]};
      for (int j = 0; j < 4; ++j)
        if (std::abs(cross(m[i], n[j])) < tol) {
          const double s = m[i][0] * n[j][0] + m[i][1] * n[j][1] > 0 ? 1.0 : -1.0;
          targets[i].push_back({j, s * off[j] - off[i]});  // m_i . v = rhs
        }
      ok = !targets[i].empty();
    }
    if (!ok) continue;
    // Two lines with independent normals fix v.
    int p = 0, q = 1;
    while (std::abs(cross(m[p], m[q])) < tol) {
      if (++q == 4) q = ++p + 1;
    }
    const double det = cross(m[p], m[q]);
    for (const auto& tp : targets[p])
      for (const auto& tq : targets[q]) {
        Isometry h = g;
        h.v = {(tp.second * m[q][1] - tq.second * m[p][1]) / det, (m[p][0] * tq.second - m[q][0] * tp.second) / det};
        bool fits = true;
        for (int i = 0; i < 4 && fits; ++i) {
          const double lhs = m[i][0] * h.v[0] + m[i][1] * h.v[1];
          fits = std::any_of(targets[i].begin(), targets[i].end(),
                             [&](const auto& t) { return std::abs(lhs - t.second) < tol * scale; });
        }
        if (!fits) continue;
        if (std::none_of(out.isometries.begin(), out.isometries.end(), [&](const Isometry& x) { return x.near(h, tol); }))
          out.isometries.push_back(h);
      }
  }
  std::stable_sort(out.isometries.begin(), out.isometries.end(), [&](const Isometry& x, const Isometry& y) {
    if (x.is_identity(tol) != y.is_identity(tol)) return x.is_identity(tol);
    if (x.reflection != y.reflection) return !x.reflection;
    return x.describe() < y.describe();
  });
  return out;
}

bool is_klein_four(const std::vector<Isometry>& g, double tol) {
  if (g.size() != 4) return false;
  auto member = [&](const Isometry& h) {
    return std::any_of(g.begin(), g.end(), [&](const Isometry& x) { return x.near(h, tol); });
  };
  int involutions = 0, identities = 0;
  for (const auto& x : g) {
    if (x.is_identity(tol)) {
      ++identities;
      continue;
    }
    if (x.then(x).is_identity(tol)) ++involutions;
  }
  if (identities != 1 || involutions != 3) return false;
  for (const auto& x : g)
    for (const auto& y : g)
      if (!member(x.then(y))) return false;
  return true;
}

Config4 standard_family(const mpq_class& t) {
  if (t < mpq_class(1, 2) || t > 1) throw InputError("the family is defined for 1/2 <= t <= 1");
  const double theta = (1 - t.get_d()) * std::numbers::pi / 4;
  const double c = std::cos(theta), s = std::sin(theta);
  return {Line::from_doubles(c, s, 2 * c + 4 * s), Line(0, 1, 0), Line(1, 0, 0), Line::from_doubles(-s, c, 4 * c)};
}

std::vector<SweepRow> sweep(const std::function<Config4(const mpq_class&)>& family, const std::vector<mpq_class>& grid,
                            double tol) {
  if (grid.empty()) throw InputError("empty grid");
  std::vector<SweepRow> rows;
  for (const auto& t : grid) {
    const Config4 c = family(t);
    const auto d = design_isometries(c, tol);
    rows.push_back({t, static_cast<int>(generic_symmetry(c).group.size()),
                    d.infinite ? -1 : static_cast<int>(d.isometries.size()), false});
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto differs = [&](std::size_t j) {
      return rows[j].generic_order != rows[i].generic_order || rows[j].design_order != rows[i].design_order;
    };
    rows[i].transition = (i > 0 && differs(i - 1)) || (i + 1 < rows.size() && differs(i + 1));
  }
  return rows;
}

mpq_class parse_rational(const std::string& s) {
  std::string x = s;
  x.erase(std::remove_if(x.begin(), x.end(), [](unsigned char ch) { return std::isspace(ch); }), x.end());
  std::size_t i = 0;
  bool neg = false;
  if (i < x.size() && (x[i] == '-' || x[i] == '+')) neg = x[i++] == '-';
  const std::size_t start = i;
  while (i < x.size() && std::isdigit(static_cast<unsigned char>(x[i]))) ++i;
  if (i == start) throw InputError("not a number: '" + s + "'");
  mpz_class whole(x.substr(start, i - start));
  mpq_class out;
  if (i == x.size()) {
    out = whole;
  } else if (x[i] == '/') {
    const std::string den = x.substr(i + 1);
    if (den.empty() || !std::all_of(den.begin(), den.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw InputError("not a number: '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw DivisionByZero();
    out = mpq_class(whole, d);
    out.canonicalize();
  } else if (x[i] == '.') {
    const std::string frac = x.substr(i + 1);
    if (frac.empty() || !std::all_of(frac.begin(), frac.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw InputError("not a number: '" + s + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    out = mpq_class(whole * scale + mpz_class(frac), scale);
    out.canonicalize();
  } else {
    throw InputError("not a number: '" + s + "'");
  }
  return neg ? mpq_class(-out) : out;
}

Config4 parse_config(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string row;
  while (std::getline(in, row)) {
    const auto hash = row.find('#');
    if (hash != std::string::npos) row.erase(hash);
    std::istringstream rs(row);
    std::vector<std::string> tok;
    for (std::string t; rs >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 3) throw InputError("expected 'a b c' on each line, got: " + row);
    lines.emplace_back(parse_rational(tok[0]), parse_rational(tok[1]), parse_rational(tok[2]));
  }
  if (lines.size() != 4) throw InputError("expected exactly 4 lines, got " + std::to_string(lines.size()));
  return {lines[0], lines[1], lines[2], lines[3]};
}

}  // namespace symlab
