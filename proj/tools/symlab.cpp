// symlab: command-line front end. Exit codes: 0 ok, 1 bad input, 2 internal
// inconsistency.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symlab/commands.hpp"
#include "symlab/error.hpp"
#include "symlab/parse.hpp"

using namespace symlab;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symlab: automorphisms of finite algebras and their degenerations"};
  app.require_subcommand(1);
  bool json = false;
  bool serial = false;
  app.add_flag("--json", json, "print the report as JSON");
  app.add_flag("--serial", serial, "run search kernels on one thread");

  AutArgs aut;
  auto* c_aut = app.add_subcommand("aut", "automorphisms of k[X]/(f)");
  c_aut->add_option("--field", aut.field, "Q, Qzeta3, Fp(p) or F(p,k)")->capture_default_str();
  c_aut->add_option("--poly", aut.poly, "monic f in X")->required();
  c_aut->add_flag("--brute-force", aut.brute_force, "allow exhaustive search up to 1e8 candidates");
  c_aut->add_option("--params", aut.params, "symbols allowed in the polynomials, e.g. t,a");
  auto* o_iso = c_aut->add_option("--iso", aut.iso, "isomorphism X ↦ iso from k[X]/(poly) to k[X]/(model)");
  c_aut->add_option("--model", aut.model, "modulus of the model algebra")->needs(o_iso);
  c_aut->add_option("--alpha", aut.alpha, "automorphism of the model, image of X")->needs(o_iso);
  c_aut->add_option("--limit", aut.limit, "symbol=value: limit of the conjugated map")->needs(o_iso);

  IdemArgs idem;
  auto* c_idem = app.add_subcommand("idem", "idempotent basis of k[X]/(prod (X - z_i))");
  c_idem->add_option("--field", idem.field)->capture_default_str();
  auto* o_roots = c_idem->add_option("--roots", idem.roots, "comma separated distinct roots");
  c_idem->add_option("--poly", idem.poly, "split separable f")->excludes(o_roots);

  FamilyArgs fam;
  std::string at;
  auto* c_fam = app.add_subcommand("family", "permutation automorphisms along a root family");
  c_fam->add_option("--field", fam.field)->capture_default_str();
  c_fam->add_option("--roots", fam.roots, "roots as rational functions of the parameter")->required();
  c_fam->add_option("--param", fam.param)->capture_default_str();
  c_fam->add_option("--at", at, "comma separated parameter values (default: critical values)");
  c_fam->add_option("--perms", fam.perms, "'all' or comma separated cycles, e.g. (12),(123)")->capture_default_str();

  SurvivalArgs surv;
  auto* c_surv = app.add_subcommand("survival", "condition for a permutation to survive t*x_i -> 0");
  c_surv->add_option("--perm", surv.perm, "cycle notation, 1-based")->required();
  c_surv->add_option("--size", surv.size)->capture_default_str();
  c_surv->add_option("--field", surv.field)->capture_default_str();
  c_surv->add_option("--x", surv.x, "comma separated witness x_1..x_n");

  ChiArgs chi;
  auto* c_chi = app.add_subcommand("chi", "elements of order 2 and 3 in Aut(k[X]/(X^3))");
  c_chi->add_option("--field", chi.field)->required();

  TalgArgs talg;
  std::string table_file;
  auto* c_talg = app.add_subcommand("talg", "the algebra T_t and its automorphisms");
  c_talg->add_option("--t", talg.t)->capture_default_str();
  c_talg->add_option("--field", talg.field)->capture_default_str();
  c_talg->add_flag("--brute-force", talg.brute_force, "enumerate automorphisms (finite fields)");
  c_talg->add_option("--table", table_file, "JSON structure constants file ('-' for stdin)");

  LinesArgs lines;
  std::string config_file;
  auto* c_lines = app.add_subcommand("lines", "symmetries of four lines in the plane");
  c_lines->add_option("--family", lines.family)->capture_default_str();
  c_lines->add_option("--config", config_file, "file with four 'a b c' rows ('-' for stdin)");
  c_lines->add_option("--from", lines.from)->capture_default_str();
  c_lines->add_option("--to", lines.to)->capture_default_str();
  c_lines->add_option("--steps", lines.steps, "number of grid points")->capture_default_str();
  c_lines->add_option("--grid", lines.grid, "explicit comma separated grid");
  c_lines->add_option("--tol", lines.tol)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const Exec exec = serial ? Exec::serial : Exec::parallel;
  const OutputMode mode = json ? OutputMode::json : OutputMode::text;
  try {
    Report r;
    if (*c_aut) {
      r = run_aut(aut, exec);
    } else if (*c_idem) {
      r = run_idem(idem);
    } else if (*c_fam) {
      if (!at.empty()) fam.at = split_top_level(at);
      r = run_family(fam);
    } else if (*c_surv) {
      r = run_survival(surv);
    } else if (*c_chi) {
      r = run_chi(chi, exec);
    } else if (*c_talg) {
      if (!table_file.empty()) talg.table_json = slurp(table_file);
      r = run_talg(talg, exec);
    } else {
      if (!config_file.empty()) lines.config = slurp(config_file);
      r = run_lines(lines);
    }
    std::cout << emit_report(r, mode);
    return 0;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
