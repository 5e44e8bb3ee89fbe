#include "symlab/chigroup.hpp"

namespace symlab {

namespace {

void require_small_finite(const Field& f) {
  if (!f.is_finite()) throw InputError("explicit enumeration needs a finite field");
  if (f.size() > 49) throw InputError("field " + f.spec() + " is too large for exhaustive checks (limit 49)");
}

FChi chi_at(const Field& f, std::uint64_t i) {
  const std::uint64_t q = f.size();
  return FChi(f.element(1 + i / q), f.element(i % q));
}

}  // namespace

std::vector<FChi> chi_elements(const Field& f) {
  require_small_finite(f);
  std::vector<FChi> out;
  const std::uint64_t q = f.size();
  for (std::uint64_t i = 0; i < (q - 1) * q; ++i) out.push_back(chi_at(f, i));
  return out;
}

std::vector<FChi> chi_elements_of_order(const Field& f, int k, Exec exec) {
  require_small_finite(f);
  const std::uint64_t q = f.size();
  auto hit = [&](std::uint64_t i) {
    const FChi x = chi_at(f, i);
    if (!chi_power(x, k).is_identity()) return false;
    for (int d = 1; d < k; ++d)
      if (chi_power(x, d).is_identity()) return false;
    return true;
  };
  std::vector<FChi> out;
  for (auto i : filter_indices((q - 1) * q, hit, exec)) out.push_back(chi_at(f, i));
  return out;
}

std::string order2_case_label(std::int64_t characteristic) {
  return characteristic == 2 ? "char2" : "char-not-2";
}

std::string order3_case_label(std::int64_t characteristic, bool has_zeta3) {
  if (characteristic == 2) return has_zeta3 ? "char2-with-zeta3" : "char2-no-zeta3";
  if (characteristic == 3) return has_zeta3 ? "char3-with-zeta3-unreachable" : "char3";
  return has_zeta3 ? "char-not-2-3-with-zeta3" : "char-not-2-3-no-zeta3";
}

OrderClassReport order_class(const Field& f) {
  OrderClassReport r{f, {}, {}, {}, {}, primitive_cube_root(f), {}, {}, {}};
  const std::int64_t p = f.characteristic();
  r.order2_case = order2_case_label(p);
  r.order3_case = order3_case_label(p, r.zeta3.has_value());

  if (p == 2)
    r.order2_description = "{chi(1, b) : b != 0}";
  else
    r.order2_description = "{chi(-1, b) : b in k}";

  if (r.order3_case == "char3-with-zeta3-unreachable")
    throw InconsistencyError("a field of characteristic 3 cannot contain a primitive cube root of unity");
  if (r.order3_case == "char3")
    r.order3_description = "{chi(1, b) : b != 0}";
  else if (r.zeta3)
    r.order3_description = "{chi(a, b) : a in {zeta3, zeta3^2}, b in k}";
  else
    r.order3_description = "empty";
  if (p == 3)
    r.warnings.push_back(
        "in characteristic 3, X^3 - 1 = (X - 1)^3, so the case with a primitive cube root of unity is unreachable");

  if (!f.is_finite()) return r;
  require_small_finite(f);

  const auto els = f.elements();
  std::vector<FChi> g2, g3;
  for (const auto& b : els) {
    if (p == 2) {
      if (!b.is_zero()) g2.emplace_back(f.one(), b);
    } else {
      g2.emplace_back(-f.one(), b);
    }
  }
  if (p == 3) {
    for (const auto& b : els)
      if (!b.is_zero()) g3.emplace_back(f.one(), b);
  } else if (r.zeta3) {
    std::vector<FieldElement> as{*r.zeta3, *r.zeta3 * *r.zeta3};
    if (as[1] < as[0]) std::swap(as[0], as[1]);
    for (const auto& a : as)
      for (const auto& b : els) g3.emplace_back(a, b);
  }
  for (const auto& x : g2)
    if (chi_order(x, 2) != 2) throw InconsistencyError(x.to_string() + " does not have order 2");
  for (const auto& x : g3)
    if (chi_order(x, 3) != 3) throw InconsistencyError(x.to_string() + " does not have order 3");
  r.order2 = std::move(g2);
  r.order3 = std::move(g3);
  return r;
}

NoS3Report no_s3_check(const Field& f, Exec exec) {
  require_small_finite(f);
  NoS3Report r;
  const std::uint64_t q = f.size();
  r.group_size = (q - 1) * q;
  const auto inv = chi_elements_of_order(f, 2, exec);
  r.involutions = inv.size();
  const std::uint64_t m = inv.size();
  // Pair index i*m + j with i < j.
  auto bad = [&](std::uint64_t k) {
    const std::uint64_t i = k / m, j = k % m;
    if (i >= j) return false;
    return chi_order(chi_compose(inv[i], inv[j]), 3) == 3;
  };
  const auto hits = filter_indices(m * m, bad, exec);
  r.pairs_checked = m * (m - 1) / 2;
  if (!hits.empty()) {
    r.holds = false;
    r.counterexample.emplace(inv[hits.front() / m], inv[hits.front() % m]);
  }
  return r;
}

}  // namespace symlab
