#include "symlab/quotalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symlab {

std::string FpaDecomposition::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) out << " x ";
    first = false;
    out << "FPA(" << f.multiplicity << ")";
    if (f.count > 1) out << "^" << f.count;
  }
  return out.str();
}

FpaDecomposition fpa_decompose_multiplicities(const std::vector<int>& multiplicities) {
  std::map<int, int> counts;
  FpaDecomposition d;
  for (int m : multiplicities) {
    if (m < 1) throw InputError("root multiplicity must be >= 1");
    ++counts[m];
    d.total += m;
  }
  for (const auto& [m, r] : counts) d.factors.push_back({m, r});
  return d;
}

std::string AutDescription::permutation_string() const {
  if (std::all_of(permutation_part.begin(), permutation_part.end(), [](int r) { return r == 1; }))
    return "trivial";
  std::string out;
  for (std::size_t i = 0; i < permutation_part.size(); ++i) {
    if (i) out += " x ";
    out += "S" + std::to_string(permutation_part[i]);
  }
  return out;
}

std::uint64_t AutDescription::order_over_finite_field(std::uint64_t q) const {
  std::uint64_t order = 1;
  for (const auto& f : factors) {
    for (int k = 2; k <= f.count; ++k) order *= static_cast<std::uint64_t>(k);
    if (f.multiplicity >= 2) {
      std::uint64_t per = q - 1;
      for (int k = 0; k < f.multiplicity - 2; ++k) per *= q;
      for (int k = 0; k < f.count; ++k) order *= per;
    }
  }
  return order;
}

AutDescription aut_description(const FpaDecomposition& d) {
  AutDescription out;
  bool all_reduced = true;
  std::uint64_t order = 1;
  for (const auto& f : d.factors) {
    out.permutation_part.push_back(f.count);
    for (int k = 2; k <= f.count; ++k) order *= static_cast<std::uint64_t>(k);
    FpaAutFactor a{f.multiplicity, f.count, FpaAutKind::trivial, f.multiplicity - 1, ""};
    if (f.multiplicity == 1) {
      a.description = "trivial";
    } else if (f.multiplicity == 2) {
      a.kind = FpaAutKind::multiplicative;
      a.description = "multiplicative group G_m (X -> bX, b != 0)";
      all_reduced = false;
    } else {
      a.kind = FpaAutKind::extended;
      const int ext = f.multiplicity - 2;
      a.description = "multiplicative group G_m extended " +
                      (ext == 1 ? std::string("once") : std::to_string(ext) + " times") +
                      " by the additive group G_a (dimension " + std::to_string(f.multiplicity - 1) + ")";
      all_reduced = false;
    }
    out.factors.push_back(a);
  }
  if (all_reduced) out.finite_order = order;
  return out;
}

std::optional<std::vector<std::pair<FieldElement, int>>> split_roots(const UniPoly<FieldElement>& f) {
  if (f.is_zero()) throw InputError("the zero polynomial has no roots");
  const Field field = f.leading().field();
  if (!field.is_finite()) throw InputError("exhaustive root extraction needs a finite field");
  std::vector<std::pair<FieldElement, int>> roots;
  UniPoly<FieldElement> rest = f;
  for (const auto& z : field.elements()) {
    UniPoly<FieldElement> lin({-z, field.one()}, field.zero());
    int m = 0;
    while (rest.degree() >= 1) {
      auto [q, r] = rest.divmod(lin);
      if (!r.is_zero()) break;
      rest = q;
      ++m;
    }
    if (m > 0) roots.emplace_back(z, m);
  }
  if (rest.degree() != 0) return std::nullopt;
  return roots;
}

std::vector<UniPoly<FieldElement>> brute_force_automorphisms(const MonogenicAlgebra<FieldElement>& A,
                                                             Exec exec, std::uint64_t budget) {
  const Field field = A.proto().field();
  if (!field.is_finite()) throw InputError("brute force needs a finite field");
  const std::uint64_t q = field.size();
  const int n = A.dim();
  const std::uint64_t count = checked_power(q, n, budget);
  auto candidate = [&](std::uint64_t i) {
    std::vector<FieldElement> c;
    for (auto d : digits(i, q, n)) c.push_back(field.element(d));
    return UniPoly<FieldElement>(std::move(c), field.zero());
  };
  std::vector<UniPoly<FieldElement>> out;
  for (auto i : filter_indices(count, [&](std::uint64_t i) { return is_automorphism(A, candidate(i)); }, exec))
    out.push_back(candidate(i));
  return out;
}

std::map<int, int> order_profile(const MonogenicAlgebra<FieldElement>& A,
                                 const std::vector<UniPoly<FieldElement>>& automorphisms) {
  std::map<int, int> profile;
  const int bound = static_cast<int>(automorphisms.size());
  for (const auto& g : automorphisms) {
    auto k = map_order(A, g, bound);
    if (!k) throw InconsistencyError("automorphism order exceeds group size");
    ++profile[*k];
  }
  return profile;
}

bool closed_under_composition(const MonogenicAlgebra<FieldElement>& A,
                              const std::vector<UniPoly<FieldElement>>& automorphisms) {
  auto key = [](const UniPoly<FieldElement>& g) {
    std::vector<std::uint64_t> k;
    for (const auto& c : g.coeffs()) k.push_back(c.index());
    return k;
  };
  std::set<std::vector<std::uint64_t>> set;
  for (const auto& g : automorphisms) set.insert(key(g));
  for (const auto& a : automorphisms)
    for (const auto& b : automorphisms)
      if (!set.count(key(compose_maps(A, a, b)))) return false;
  return true;
}

}  // namespace symlab
