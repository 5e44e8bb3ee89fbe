#pragma once

// Monogenic algebras k[X]/(f): element arithmetic, substitution maps
// X -> g(X), automorphism tests, idempotent bases and fat-point decompositions.
//
// Composition convention: compose_maps(outer, inner) is the map whose image
// polynomial is outer(inner(X)). For the closed-form group of k[X]/(X^3) this
// reproduces chi_{a,b} o chi_{a',b'} = chi_{aa', ab' + a'^2 b}.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symlab/error.hpp"
#include "symlab/field.hpp"
#include "symlab/kernels.hpp"
#include "symlab/matrix.hpp"
#include "symlab/unipoly.hpp"

namespace symlab {

template <Scalar S>
class MonogenicAlgebra {
 public:
  explicit MonogenicAlgebra(UniPoly<S> f) : f_(std::move(f)) {
    if (f_.degree() < 1) throw InputError("modulus must have degree >= 1");
    if (!f_.is_monic()) throw InputError("modulus must be monic");
  }

  const UniPoly<S>& modulus() const { return f_; }
  int dim() const { return f_.degree(); }
  const S& proto() const { return f_.zero_scalar(); }

  UniPoly<S> reduce(const UniPoly<S>& p) const { return p.mod(f_); }

  /// Coordinates in the basis 1, X, ..., X^{n-1}.
  std::vector<S> coords(const UniPoly<S>& p) const {
    UniPoly<S> r = reduce(p);
    std::vector<S> c;
    c.reserve(dim());
    for (int k = 0; k < dim(); ++k) c.push_back(r.coeff(k));
    return c;
  }

  UniPoly<S> from_coords(std::vector<S> c) const {
    if (static_cast<int>(c.size()) != dim()) throw InputError("coordinate vector has wrong length");
    return UniPoly<S>(std::move(c), proto());
  }

  UniPoly<S> x() const { return UniPoly<S>::x(proto()); }

 private:
  UniPoly<S> f_;
};

template <Scalar S>
using AlgebraRef = std::shared_ptr<const MonogenicAlgebra<S>>;

template <Scalar S>
AlgebraRef<S> make_algebra(UniPoly<S> f) {
  return std::make_shared<const MonogenicAlgebra<S>>(std::move(f));
}

template <Scalar S>
class AlgebraElement {
 public:
  AlgebraElement(AlgebraRef<S> owner, const UniPoly<S>& p) : A_(std::move(owner)), p_(A_->reduce(p)) {}

  static AlgebraElement basis(AlgebraRef<S> A, int k) {
    return AlgebraElement(A, UniPoly<S>::monomial(A->proto().one_like(), k));
  }
  static AlgebraElement one(AlgebraRef<S> A) { return basis(A, 0); }

  const AlgebraRef<S>& owner() const { return A_; }
  const UniPoly<S>& poly() const { return p_; }
  std::vector<S> coords() const { return A_->coords(p_); }

  AlgebraElement operator+(const AlgebraElement& o) const {
    check(o);
    return AlgebraElement(A_, p_ + o.p_);
  }
  AlgebraElement operator-(const AlgebraElement& o) const {
    check(o);
    return AlgebraElement(A_, p_ - o.p_);
  }
  AlgebraElement operator*(const AlgebraElement& o) const {
    check(o);
    return AlgebraElement(A_, p_ * o.p_);
  }
  AlgebraElement operator*(const S& s) const { return AlgebraElement(A_, p_ * s); }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.same_owner(b) && a.p_ == b.p_;
  }

  std::string to_string() const { return p_.to_string(); }

 private:
  bool same_owner(const AlgebraElement& o) const {
    return A_ == o.A_ || A_->modulus() == o.A_->modulus();
  }
  void check(const AlgebraElement& o) const {
    if (!same_owner(o)) throw InputError("algebra elements have different owners");
  }
  AlgebraRef<S> A_;
  UniPoly<S> p_;
};

/// Algebra endomorphism of k[X]/(f) given by the image g of X.
template <Scalar S>
class SubstitutionMap {
 public:
  SubstitutionMap(AlgebraRef<S> A, UniPoly<S> g) : A_(std::move(A)), g_(std::move(g)) {
    if (g_.degree() >= A_->dim()) throw InputError("image of X must have degree < deg f");
  }
  const AlgebraRef<S>& algebra() const { return A_; }
  const UniPoly<S>& image() const { return g_; }

  AlgebraElement<S> apply(const AlgebraElement<S>& u) const {
    if (!(u.owner() == A_ || u.owner()->modulus() == A_->modulus()))
      throw InputError("element does not belong to the map's algebra");
    return AlgebraElement<S>(A_, u.poly().compose(g_));
  }

  std::string to_string() const { return "X ↦ " + g_.to_string(); }

 private:
  AlgebraRef<S> A_;
  UniPoly<S> g_;
};

/// Image polynomial of the composite whose value on X is outer(inner(X)).
template <Scalar S>
UniPoly<S> compose_maps(const MonogenicAlgebra<S>& A, const UniPoly<S>& outer, const UniPoly<S>& inner) {
  return A.reduce(outer.compose(inner));
}

template <Scalar S>
SubstitutionMap<S> compose(const SubstitutionMap<S>& outer, const SubstitutionMap<S>& inner) {
  return SubstitutionMap<S>(outer.algebra(), compose_maps(*outer.algebra(), outer.image(), inner.image()));
}

/// X_A -> g (g in B) extends to an algebra map A -> B iff f_A(g) = 0 in B.
template <Scalar S>
bool is_homomorphism(const MonogenicAlgebra<S>& A, const MonogenicAlgebra<S>& B, const UniPoly<S>& g) {
  return B.reduce(A.modulus().compose(g)).is_zero();
}

template <Scalar S>
bool is_endomorphism(const MonogenicAlgebra<S>& A, const UniPoly<S>& g) {
  if (g.degree() >= A.dim()) throw InputError("image of X must have degree < deg f");
  return is_homomorphism(A, A, g);
}

/// Matrix whose k-th column holds the B-coordinates of g^k.
template <Scalar S>
Matrix<S> induced_matrix(const MonogenicAlgebra<S>& A, const MonogenicAlgebra<S>& B, const UniPoly<S>& g) {
  const int n = A.dim();
  Matrix<S> m(B.dim(), n, A.proto());
  UniPoly<S> power = UniPoly<S>::constant(A.proto().one_like());
  for (int k = 0; k < n; ++k) {
    auto c = B.coords(power);
    for (int i = 0; i < B.dim(); ++i) m(i, k) = c[i];
    power = B.reduce(power * g);
  }
  return m;
}

template <Scalar S>
bool is_isomorphism(const MonogenicAlgebra<S>& A, const MonogenicAlgebra<S>& B, const UniPoly<S>& g) {
  if (A.dim() != B.dim()) return false;
  if (!is_homomorphism(A, B, g)) return false;
  return !induced_matrix(A, B, g).determinant().is_zero();
}

template <Scalar S>
bool is_automorphism(const MonogenicAlgebra<S>& A, const UniPoly<S>& g) {
  if (!is_endomorphism(A, g)) return false;
  return !induced_matrix(A, A, g).determinant().is_zero();
}

/// For an isomorphism A -> B given by X_A -> g, the image h in A of X_B under
/// the inverse isomorphism (h(g) = X_B in B).
template <Scalar S>
UniPoly<S> invert_isomorphism(const MonogenicAlgebra<S>& A, const MonogenicAlgebra<S>& B, const UniPoly<S>& g) {
  if (!is_isomorphism(A, B, g)) throw InputError("map is not an isomorphism");
  auto inv = induced_matrix(A, B, g).inverse();
  if (!inv) throw InconsistencyError("induced matrix of an isomorphism is singular");
  auto h = A.from_coords(*inv * B.coords(B.x()));
  if (!(B.reduce(h.compose(g)) == B.reduce(B.x())))
    throw InconsistencyError("inverse substitution does not round-trip");
  return h;
}

template <Scalar S>
UniPoly<S> invert_substitution(const MonogenicAlgebra<S>& A, const UniPoly<S>& g) {
  if (!is_automorphism(A, g)) throw InputError("substitution is not an automorphism");
  auto h = invert_isomorphism(A, A, g);
  if (!(A.reduce(g.compose(h)) == A.reduce(A.x())))
    throw InconsistencyError("inverse substitution does not round-trip");
  return h;
}

/// Smallest k <= max_order with g composed k times equal to X.
template <Scalar S>
std::optional<int> map_order(const MonogenicAlgebra<S>& A, const UniPoly<S>& g, int max_order) {
  if (!is_automorphism(A, g)) throw InputError("substitution is not an automorphism");
  const UniPoly<S> x = A.reduce(A.x());
  UniPoly<S> power = A.reduce(g);
  for (int k = 1; k <= max_order; ++k) {
    if (power == x) return k;
    power = compose_maps(A, power, g);
  }
  return std::nullopt;
}

/// Product of (X - z) over the given roots.
template <Scalar S>
UniPoly<S> poly_from_roots(const std::vector<S>& roots, const S& proto) {
  UniPoly<S> f = UniPoly<S>::constant(proto.one_like());
  for (const auto& z : roots) f = f * UniPoly<S>({-z, proto.one_like()}, proto);
  return f;
}

template <Scalar S>
void require_distinct(const std::vector<S>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j])
        throw InputError("repeated root " + roots[i].to_string());
}

/// Lagrange idempotents e_i = prod_{j != i} (X - z_j)/(z_i - z_j).
template <Scalar S>
std::vector<AlgebraElement<S>> idempotents(const AlgebraRef<S>& A, const std::vector<S>& roots) {
  require_distinct(roots);
  if (!(poly_from_roots(roots, A->proto()) == A->modulus()))
    throw InputError("roots do not multiply out to the modulus");
  std::vector<AlgebraElement<S>> out;
  const S one = A->proto().one_like();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    UniPoly<S> e = UniPoly<S>::constant(one);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i == j) continue;
      const S inv = one / (roots[i] - roots[j]);
      e = e * UniPoly<S>({-roots[j] * inv, inv}, one);
    }
    out.emplace_back(A, e);
  }
  return out;
}

/// Vandermonde matrix M (rows 1, z_i, ..., z_i^{n-1}) and its exact inverse,
/// computed as adj(M)/det(M).
template <Scalar S>
std::pair<Matrix<S>, Matrix<S>> vandermonde_pair(const std::vector<S>& roots) {
  if (roots.empty()) throw InputError("vandermonde_pair needs at least one root");
  require_distinct(roots);
  const std::size_t n = roots.size();
  Matrix<S> m(n, n, roots.front());
  for (std::size_t i = 0; i < n; ++i) {
    S p = roots.front().one_like();
    for (std::size_t k = 0; k < n; ++k) {
      m(i, k) = p;
      p = p * roots[i];
    }
  }
  S det = m.determinant();
  if (det.is_zero()) throw InputError("Vandermonde matrix is singular (repeated roots)");
  Matrix<S> inv = m.adjugate() * (det.one_like() / det);
  return {m, inv};
}

// ---- fat point algebras ---------------------------------------------------

struct FpaFactor {
  int multiplicity;  // m_i
  int count;         // r_i
  friend bool operator==(const FpaFactor&, const FpaFactor&) = default;
};

/// k[X]/(f) = FPA(m_1)^{r_1} x ... x FPA(m_s)^{r_s}; factors sorted by multiplicity.
struct FpaDecomposition {
  std::vector<FpaFactor> factors;
  int total = 0;
  std::string to_string() const;
};

FpaDecomposition fpa_decompose_multiplicities(const std::vector<int>& multiplicities);

template <Scalar S>
FpaDecomposition fpa_decompose(const std::vector<std::pair<S, int>>& root_multiplicities) {
  std::vector<S> roots;
  std::vector<int> mults;
  for (const auto& [z, m] : root_multiplicities) {
    roots.push_back(z);
    mults.push_back(m);
  }
  require_distinct(roots);
  return fpa_decompose_multiplicities(mults);
}

enum class FpaAutKind {
  trivial,         // FPA(1) = k
  multiplicative,  // FPA(2): X -> bX
  extended,        // FPA(m), m >= 3: G_m extended m-2 times by G_a
};

struct FpaAutFactor {
  int multiplicity;
  int count;
  FpaAutKind kind;
  int dimension;  // m - 1
  std::string description;
};

struct AutDescription {
  std::vector<int> permutation_part;  // r_i, one symmetric group S_{r_i} each
  std::vector<FpaAutFactor> factors;
  /// prod r_i!, present only when every factor is FPA(1).
  std::optional<std::uint64_t> finite_order;

  /// e.g. "S1 x S2"; "trivial" when every r_i = 1 and there is a single factor.
  std::string permutation_string() const;
  /// |Aut| over F_q: prod r_i! * prod ((q-1) q^{m_i-2})^{r_i} over factors with m_i >= 2.
  std::uint64_t order_over_finite_field(std::uint64_t q) const;
};

AutDescription aut_description(const FpaDecomposition& d);

// ---- finite-field helpers -------------------------------------------------

/// Roots with multiplicities of f over a finite field, found exhaustively;
/// nullopt when f does not split into linear factors.
std::optional<std::vector<std::pair<FieldElement, int>>> split_roots(const UniPoly<FieldElement>& f);

/// Every g of degree < n with X -> g an automorphism, by exhaustive search over
/// q^n candidates (at most `budget`). Sorted by coefficient indices.
std::vector<UniPoly<FieldElement>> brute_force_automorphisms(const MonogenicAlgebra<FieldElement>& A,
                                                             Exec exec = Exec::parallel,
                                                             std::uint64_t budget = 100000000);

/// Multiset of element orders, e.g. {1:1, 2:3, 3:2} for S3.
std::map<int, int> order_profile(const MonogenicAlgebra<FieldElement>& A,
                                 const std::vector<UniPoly<FieldElement>>& automorphisms);

/// True when the list is closed under compose_maps.
bool closed_under_composition(const MonogenicAlgebra<FieldElement>& A,
                              const std::vector<UniPoly<FieldElement>>& automorphisms);

}  // namespace symlab
