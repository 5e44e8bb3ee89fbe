#pragma once

// The group G = Aut(k[X]/(X^3)) = { chi_{a,b} : X -> aX + bX^2, a != 0 } in
// closed form, with its order-2 and order-3 elements by characteristic.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symlab/error.hpp"
#include "symlab/field.hpp"
#include "symlab/kernels.hpp"
#include "symlab/scalar.hpp"
#include "symlab/unipoly.hpp"

namespace symlab {

template <Scalar S>
struct Chi {
  S a, b;

  Chi(S a_, S b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.is_zero()) throw InputError("chi_{a,b} needs a != 0");
  }
  static Chi identity(const S& proto) { return Chi(proto.one_like(), proto.zero_like()); }

  bool is_identity() const { return a.is_one() && b.is_zero(); }
  /// aX + bX^2.
  UniPoly<S> image() const { return UniPoly<S>({a.zero_like(), a, b}, a); }
  std::string to_string() const { return "chi(" + a.to_string() + ", " + b.to_string() + ")"; }

  friend bool operator==(const Chi& x, const Chi& y) { return x.a == y.a && x.b == y.b; }
};

/// chi_{a,b} o chi_{a',b'} = chi_{aa', ab' + a'^2 b}.
template <Scalar S>
Chi<S> chi_compose(const Chi<S>& p, const Chi<S>& q) {
  return Chi<S>(p.a * q.a, p.a * q.b + q.a * q.a * p.b);
}

/// chi^n = chi_{a^n, (a^{n-1} + ... + a^{2n-2}) b} for n >= 1.
template <Scalar S>
Chi<S> chi_power(const Chi<S>& p, int n) {
  if (n < 1) throw InputError("chi_power needs n >= 1");
  S an = p.a.one_like();
  for (int i = 0; i < n; ++i) an = an * p.a;
  S sum = p.a.zero_like();
  S term = an * (p.a.one_like() / p.a);  // a^{n-1}
  for (int k = n - 1; k <= 2 * n - 2; ++k) {
    sum = sum + term;
    term = term * p.a;
  }
  return Chi<S>(an, sum * p.b);
}

template <Scalar S>
Chi<S> chi_inverse(const Chi<S>& p) {
  const S ai = p.a.one_like() / p.a;
  return Chi<S>(ai, -(p.b * ai * ai * ai));
}

/// Smallest k <= max_order with chi^k = id.
template <Scalar S>
std::optional<int> chi_order(const Chi<S>& p, int max_order) {
  Chi<S> acc = p;
  for (int k = 1; k <= max_order; ++k) {
    if (acc.is_identity()) return k;
    acc = chi_compose(acc, p);
  }
  return std::nullopt;
}

using FChi = Chi<FieldElement>;

/// All elements of G over a finite field, ordered by (index(a), index(b)).
std::vector<FChi> chi_elements(const Field& f);

/// Elements of exact order k found by exhaustive search with chi_power.
std::vector<FChi> chi_elements_of_order(const Field& f, int k, Exec exec = Exec::parallel);

std::string order2_case_label(std::int64_t characteristic);
/// One of char2-no-zeta3, char2-with-zeta3, char3, char3-with-zeta3-unreachable,
/// char-not-2-3-no-zeta3, char-not-2-3-with-zeta3.
std::string order3_case_label(std::int64_t characteristic, bool has_zeta3);

struct OrderClassReport {
  Field field;
  std::string order2_case;
  std::string order2_description;
  std::string order3_case;
  std::string order3_description;
  std::optional<FieldElement> zeta3;
  /// Explicit element lists, finite fields only.
  std::optional<std::vector<FChi>> order2;
  std::optional<std::vector<FChi>> order3;
  std::vector<std::string> warnings;
};

OrderClassReport order_class(const Field& f);

struct NoS3Report {
  bool holds = true;
  std::uint64_t group_size = 0;
  std::uint64_t involutions = 0;
  std::uint64_t pairs_checked = 0;
  std::optional<std::pair<FChi, FChi>> counterexample;
};

/// Checks that no two distinct involutions of G have a product of order 3.
NoS3Report no_s3_check(const Field& f, Exec exec = Exec::parallel);

}  // namespace symlab
