#pragma once

// Small hand-rolled generators for property tests. Seeds are fixed so failures
// reproduce.

#include <random>
#include <vector>

#include "symlab/field.hpp"
#include "symlab/multipoly.hpp"
#include "symlab/ratfunc.hpp"
#include "symlab/unipoly.hpp"

namespace gen {

using namespace symlab;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return integer(0, 1) == 1; }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }

  mpq_class rational(long bound = 9) {
    mpq_class q(integer(-bound, bound), integer(1, bound));
    q.canonicalize();
    return q;
  }

  FieldElement element(const Field& f) {
    if (f.is_finite()) return f.element(static_cast<std::uint64_t>(integer(0, static_cast<long>(f.size()) - 1)));
    FieldElement acc = f.from_rational(rational());
    if (f.kind() == FieldKind::extension) {
      FieldElement g = f.generator(), p = g;
      for (int k = 1; k < f.degree(); ++k, p = p * g) acc += f.from_rational(rational()) * p;
    }
    return acc;
  }

  FieldElement nonzero(const Field& f) {
    for (;;) {
      FieldElement x = element(f);
      if (!x.is_zero()) return x;
    }
  }

  UniPoly<FieldElement> unipoly(const Field& f, int max_degree) {
    std::vector<FieldElement> c;
    const int d = static_cast<int>(integer(0, max_degree));
    for (int k = 0; k <= d; ++k) c.push_back(element(f));
    return UniPoly<FieldElement>(std::move(c), f.zero());
  }

  /// Sparse polynomial with small integer coefficients in the given symbols.
  MultiPoly multipoly(const Field& f, const SymbolList& s, int terms, int max_exp) {
    MultiPoly p(f, s);
    for (int i = 0; i < terms; ++i) {
      Exponent e(s.size());
      for (auto& x : e) x = static_cast<int>(integer(0, max_exp));
      p.add_term(e, f.from_int(integer(-4, 4)));
    }
    return p;
  }

  MultiPoly nonzero_multipoly(const Field& f, const SymbolList& s, int terms, int max_exp) {
    for (;;) {
      MultiPoly p = multipoly(f, s, terms, max_exp);
      if (!p.is_zero()) return p;
    }
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gen
