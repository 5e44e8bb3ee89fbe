#pragma once

// Configurations of four lines in the plane: the permutations of the lines
// that respect which pairs meet (exact), and the Euclidean isometries that map
// the set of lines to itself (floating point, with a tolerance).

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "symlab/perm.hpp"

namespace symlab {

/// a x + b y = c, scaled so that the first nonzero of (a, b) is 1.
class Line {
 public:
  Line(mpq_class a, mpq_class b, mpq_class c);
  /// Exact binary value of the doubles.
  static Line from_doubles(double a, double b, double c);

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  const mpq_class& c() const { return c_; }
  /// Unit normal angle in [0, pi) and signed offset along that normal.
  double angle() const { return angle_; }
  double offset() const { return offset_; }
  std::string to_string() const;

  friend bool operator==(const Line& x, const Line& y) { return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_; }

 private:
  mpq_class a_, b_, c_;
  double angle_, offset_;
};

using Config4 = std::array<Line, 4>;

enum class PairRelation { intersecting, parallel_distinct, coincident };

PairRelation pair_relation(const Line& l1, const Line& l2);
std::string relation_name(PairRelation r);

struct GenericSymmetry {
  /// Permutations preserving "intersect or coincide".
  std::vector<Perm> group;
  /// Permutations preserving the full three-valued relation.
  std::vector<Perm> stabilizer;
};

GenericSymmetry generic_symmetry(const Config4& c);

/// x -> O x + v.
struct Isometry {
  std::array<std::array<double, 2>, 2> o;
  std::array<double, 2> v;
  bool reflection;

  std::array<double, 2> apply(const std::array<double, 2>& p) const;
  Isometry then(const Isometry& g) const;  // g o this
  bool near(const Isometry& g, double tol) const;
  bool is_identity(double tol) const;
  std::string describe() const;
};

struct DesignSymmetry {
  bool infinite = false;  // all lines parallel: translations along them
  std::vector<Isometry> isometries;
};

/// Isometries mapping the set of lines to itself, within tol.
DesignSymmetry design_isometries(const Config4& c, double tol = 1e-9);

/// Three involutions whose pairwise products stay in the set.
bool is_klein_four(const std::vector<Isometry>& g, double tol = 1e-9);

/// Line 1 through (2, 4) turned clockwise from vertical by (1 - t) pi / 4,
/// line 2 the x-axis, line 3 the y-axis, line 4 through (0, 4) turned up from
/// horizontal by the same angle. 1/2 <= t <= 1.
Config4 standard_family(const mpq_class& t);

struct SweepRow {
  mpq_class t;
  int generic_order;
  int design_order;  // -1 when infinite
  bool transition;   // differs from a neighbour in either order
};

std::vector<SweepRow> sweep(const std::function<Config4(const mpq_class&)>& family, const std::vector<mpq_class>& grid,
                            double tol = 1e-9);

/// Reads "a b c" per line; four non-empty lines.
Config4 parse_config(const std::string& text);

/// Exact decimal or fraction such as "0.75", "-3/4", "1".
mpq_class parse_rational(const std::string& s);

}  // namespace symlab
