#pragma once

// One-parameter families A_t = k[X]/(prod (X - r_i(t))): the automorphism
// induced by permuting idempotents, its behaviour at critical parameter
// values, and survival conditions for families with roots t*x_i.
//
// Permutation convention: sigma acts on the coordinate vector (r_1, ..., r_n)
// of X in the idempotent basis, and entry i of the result is r_{sigma(i)}.
// With this convention the image polynomials satisfy
//   compose_maps(g_sigma, g_tau) = g_{sigma o tau}.

#include <optional>
#include <string>
#include <vector>

#include "symlab/multipoly.hpp"
#include "symlab/perm.hpp"
#include "symlab/quotalg.hpp"
#include "symlab/ratfunc.hpp"

namespace symlab {

using RPoly = UniPoly<RationalFunction>;

class RootFamily {
 public:
  /// Roots must share field and symbols, the parameter must be one of the
  /// symbols, and the roots must be pairwise distinct as rational functions.
  RootFamily(std::vector<RationalFunction> roots, std::string param = "t");

  /// Parses comma-separated root expressions such as "0, t, t^2".
  static RootFamily parse(const std::string& roots, const Field& field, const SymbolList& symbols,
                          std::string param = "t");
  /// Roots (t*x_1, ..., t*x_n) with symbolic x_i over symbols {x1, ..., xn, t}.
  static RootFamily symbolic_scaled(int n, const Field& field = Field::rationals());
  /// Roots (t*x_1, ..., t*x_n) for concrete values x_i over symbols {t}.
  static RootFamily scaled(const std::vector<FieldElement>& xs);

  int size() const { return static_cast<int>(roots_.size()); }
  const std::vector<RationalFunction>& roots() const { return roots_; }
  const std::string& param() const { return param_; }
  const Field& field() const { return roots_.front().field(); }
  const SymbolList& symbols() const { return roots_.front().symbols(); }

  /// prod (X - r_i).
  RPoly modulus() const;
  /// Replaces a non-parameter symbol by a value.
  RootFamily specialize(const std::string& symbol, const FieldElement& value) const;
  /// Roots at param = t0; throws when a root has a pole there.
  std::vector<RationalFunction> roots_at(const FieldElement& t0) const;

 private:
  std::vector<RationalFunction> roots_;
  std::string param_;
};

/// The automorphism X -> sum c_k X^k of A_t that sends the coordinate vector of
/// X to its sigma-permuted version.
struct PermAutomorphism {
  Perm sigma;
  std::vector<RationalFunction> coeffs;
  RPoly image() const;
  std::string to_string() const;
};

PermAutomorphism perm_coeff_vector(const RootFamily& fam, const Perm& sigma);

struct CoeffPole {
  int index;  // k in c_k X^k
  int order;  // negative
};

struct Analysis {
  Perm sigma;
  bool survives = false;
  /// Limit map on A_{t0}, when every coefficient has a finite limit.
  std::optional<RPoly> limit;
  /// Every coefficient with a pole at t0, by increasing index.
  std::vector<CoeffPole> poles;
  /// The limit map passed is_automorphism on A_{t0}.
  bool verified = false;
};

/// Limits the coefficients of perm_coeff_vector(fam, sigma) at param = t0. A
/// finite limit map must be an automorphism of A_{t0}; otherwise this throws
/// InconsistencyError.
Analysis analyze_at(const RootFamily& fam, const Perm& sigma, const FieldElement& t0);

struct SurvivalReport {
  FieldElement t0;
  std::vector<Analysis> entries;  // every permutation, lexicographic
  std::vector<Perm> surviving;
  /// Number of distinct limit maps among the survivors.
  int effective_order = 0;
};

/// analyze_at for all n! permutations (n <= 5). The survivors are checked to
/// form a subgroup.
SurvivalReport surviving_subgroup(const RootFamily& fam, const FieldElement& t0);

struct SurvivalCondition {
  Perm sigma;
  /// Numerator of the pole-carrying coefficient, before cancellation against
  /// the Vandermonde determinant.
  MultiPoly condition;
  int pole_index;
  int pole_order;
};

/// For roots (t*x_1, ..., t*x_n): the polynomial in x whose vanishing lets sigma
/// survive t -> 0. Throws for the identity, which always survives.
SurvivalCondition survival_condition(int x_count, const Perm& sigma, const Field& field = Field::rationals());

/// Translates and rescales so that x_1 = 0 and x_2 = 1.
std::vector<FieldElement> normalize_roots(const std::vector<FieldElement>& xs);

/// Parameter values where two roots meet, i.e. roots of the numerators of
/// r_i - r_j. Over Q only rational values are found (rational root test);
/// over Q(zeta3) the rational roots are found and a linear factor left after
/// dividing them out contributes its root; over finite fields the search is
/// exhaustive. The family may involve no
/// symbol other than the parameter.
std::vector<FieldElement> critical_values(const RootFamily& fam);

/// Distinct roots in the base field, sorted, with the same search as
/// critical_values.
std::vector<FieldElement> roots_in_field(const UniPoly<FieldElement>& p);
/// Roots with multiplicities when p splits into linear factors over its field
/// (as far as roots_in_field can see), otherwise nullopt.
std::optional<std::vector<std::pair<FieldElement, int>>> split_over_field(const UniPoly<FieldElement>& p);

/// iso^{-1} o alpha o iso as algebra maps, for an isomorphism iso: A -> B given
/// by X_A -> iso_g and an automorphism alpha of B given by X_B -> alpha_g.
template <Scalar S>
UniPoly<S> conjugate_through_iso(const MonogenicAlgebra<S>& A, const MonogenicAlgebra<S>& B,
                                 const UniPoly<S>& iso_g, const UniPoly<S>& alpha_g) {
  if (!is_automorphism(B, alpha_g)) throw InputError("alpha is not an automorphism");
  const UniPoly<S> h = invert_isomorphism(A, B, iso_g);
  // X_A -> iso_g(X_B) -> iso_g(alpha_g(X_B)) -> iso_g(alpha_g(h(X_A))).
  const UniPoly<S> out = A.reduce(iso_g.compose(alpha_g).compose(h));
  if (!is_automorphism(A, out)) throw InconsistencyError("conjugated map is not an automorphism");
  return out;
}

}  // namespace symlab
