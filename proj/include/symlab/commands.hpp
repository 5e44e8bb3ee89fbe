#pragma once

// One function per CLI subcommand. Each validates its arguments, runs the
// analysis and returns a Report; errors surface as InputError (bad input) or
// InconsistencyError (a computed result failed its own check).

#include <string>
#include <vector>

#include "symlab/kernels.hpp"
#include "symlab/report.hpp"

namespace symlab {

struct AutArgs {
  std::string field = "Q";
  std::string poly;
  bool brute_force = false;
  // Conjugation mode: poly and model may involve the params; the automorphism
  // alpha of k[X]/(model) is carried to k[X]/(poly) through X ↦ iso.
  std::string params;  // comma separated symbols, e.g. "t,a"
  std::string model, iso, alpha;
  std::string limit;  // "t=0": limit of the conjugated map
};
Report run_aut(const AutArgs& a, Exec exec = Exec::parallel);

struct IdemArgs {
  std::string field = "Q";
  std::string roots;  // comma separated
  std::string poly;   // alternative to roots
};
Report run_idem(const IdemArgs& a);

struct FamilyArgs {
  std::string field = "Q";
  std::string roots;
  std::string param = "t";
  std::vector<std::string> at;  // empty: the critical values
  std::string perms = "all";
};
Report run_family(const FamilyArgs& a);

struct SurvivalArgs {
  std::string perm;
  int size = 3;
  std::string field = "Q";
  std::string x;  // optional witness values, comma separated
};
Report run_survival(const SurvivalArgs& a);

struct ChiArgs {
  std::string field;
};
Report run_chi(const ChiArgs& a, Exec exec = Exec::parallel);

struct TalgArgs {
  std::string t = "1";
  std::string field = "Q";
  bool brute_force = false;
  std::string table_json;  // when set, replaces T_t
};
Report run_talg(const TalgArgs& a, Exec exec = Exec::parallel);

struct LinesArgs {
  std::string family = "standard";
  std::string config;  // "a b c" rows; replaces the family when set
  std::string from = "0.5", to = "1";
  int steps = 5;
  std::string grid;  // explicit comma separated grid, overrides from/to/steps
  double tol = 1e-9;
};
Report run_lines(const LinesArgs& a);

}  // namespace symlab
