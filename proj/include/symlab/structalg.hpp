#pragma once

// Finite-dimensional associative unital algebras given by structure
// constants, and the three-dimensional family T_t with basis {1, e2', e3'}:
//   (e2')^2 = t^2, (e3')^2 = 0, e2' e3' = t e3', e3' e2' = -t e3'.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symlab/kernels.hpp"
#include "symlab/matrix.hpp"
#include "symlab/ratfunc.hpp"

namespace symlab {

template <Scalar S>
class StructAlgebra {
 public:
  using Vec = std::vector<S>;

  /// table[i][j] is e_i e_j expanded in the basis. Checks the unit and
  /// associativity on all basis triples.
  StructAlgebra(std::vector<std::vector<Vec>> table, Vec unit) : table_(std::move(table)), unit_(std::move(unit)) {
    const std::size_t n = table_.size();
    if (n == 0) throw InputError("algebra of dimension 0");
    if (unit_.size() != n) throw InputError("unit vector has the wrong length");
    for (const auto& row : table_) {
      if (row.size() != n) throw InputError("multiplication table is not square");
      for (const auto& v : row)
        if (v.size() != n) throw InputError("product vector has the wrong length");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Vec e = basis(i);
      if (!(mul(unit_, e) == e) || !(mul(e, unit_) == e))
        throw InputError("unit axiom fails for basis element " + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!(mul(table_[i][j], basis(k)) == mul(basis(i), table_[j][k])))
            throw InputError("not associative: (e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) + ") e" +
                             std::to_string(k + 1) + " differs from e" + std::to_string(i + 1) + " (e" +
                             std::to_string(j + 1) + " e" + std::to_string(k + 1) + ")");
  }

  std::size_t dim() const { return table_.size(); }
  const Vec& unit() const { return unit_; }
  const std::vector<std::vector<Vec>>& table() const { return table_; }
  const S& proto() const { return unit_.front(); }

  Vec basis(std::size_t i) const {
    Vec v(dim(), proto().zero_like());
    v[i] = proto().one_like();
    return v;
  }

  Vec mul(const Vec& u, const Vec& v) const {
    Vec out(dim(), proto().zero_like());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (v[j].is_zero()) continue;
        const S c = u[i] * v[j];
        for (std::size_t k = 0; k < dim(); ++k) out[k] = out[k] + c * table_[i][j][k];
      }
    }
    return out;
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (!(table_[i][j] == table_[j][i])) return false;
    return true;
  }

 private:
  std::vector<std::vector<Vec>> table_;
  Vec unit_;
};

/// Linear map between algebras of equal dimension; column j of the matrix is
/// the image of basis element j.
template <Scalar S>
struct LinearAlgebraMap {
  std::shared_ptr<const StructAlgebra<S>> source;
  std::shared_ptr<const StructAlgebra<S>> target;
  Matrix<S> m;

  LinearAlgebraMap(std::shared_ptr<const StructAlgebra<S>> src, std::shared_ptr<const StructAlgebra<S>> tgt,
                   Matrix<S> matrix)
      : source(std::move(src)), target(std::move(tgt)), m(std::move(matrix)) {
    if (source->dim() != target->dim()) throw InputError("source and target dimensions differ");
    if (m.rows() != source->dim() || m.cols() != source->dim()) throw InputError("matrix size does not match");
  }

  std::vector<S> apply(const std::vector<S>& v) const { return m * v; }
};

/// phi(1) = 1 and phi(e_i e_j) = phi(e_i) phi(e_j) for all basis pairs.
template <Scalar S>
bool is_algebra_morphism(const LinearAlgebraMap<S>& phi) {
  const auto& A = *phi.source;
  const auto& B = *phi.target;
  if (!(A.proto().field() == B.proto().field())) throw InputError("algebras over different fields");
  if (!(phi.apply(A.unit()) == B.unit())) return false;
  std::vector<std::vector<S>> img;
  for (std::size_t i = 0; i < A.dim(); ++i) img.push_back(phi.apply(A.basis(i)));
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (!(phi.apply(A.table()[i][j]) == B.mul(img[i], img[j]))) return false;
  return true;
}

/// T_t with basis {1, e2', e3'}.
template <Scalar S>
StructAlgebra<S> build_T(const S& t) {
  const S z = t.zero_like(), o = t.one_like();
  using V = std::vector<S>;
  std::vector<std::vector<V>> tab{
      {V{o, z, z}, V{z, o, z}, V{z, z, o}},
      {V{z, o, z}, V{t * t, z, z}, V{z, z, t}},
      {V{z, z, o}, V{z, z, -t}, V{z, z, z}},
  };
  return StructAlgebra<S>(std::move(tab), V{o, z, z});
}

/// An automorphism of T_1: e2 -> e2 + b e3, e3 -> b' e3 with b' != 0.
template <Scalar S>
struct TPair {
  S b, bp;
  friend bool operator==(const TPair& x, const TPair& y) { return x.b == y.b && x.bp == y.bp; }
};

/// (b2, b2')(b1, b1') = (b2 + b1 b2', b1' b2'): first p1, then p2.
template <Scalar S>
TPair<S> compose_pair(const TPair<S>& p2, const TPair<S>& p1) {
  if (p1.bp.is_zero() || p2.bp.is_zero()) throw InputError("b' must be nonzero");
  return {p2.b + p1.b * p2.bp, p1.bp * p2.bp};
}

/// Matrix of the pair automorphism on T_t after transport through
/// e2' = t e2, e3' = e3: e2' -> e2' + t b e3', e3' -> b' e3'.
template <Scalar S>
Matrix<S> transport_matrix(const S& t, const TPair<S>& p) {
  if (p.bp.is_zero()) throw InputError("b' must be nonzero");
  Matrix<S> m = Matrix<S>::identity(3, t);
  m(2, 1) = t * p.b;
  m(2, 2) = p.bp;
  return m;
}

/// The pair automorphism on T_1.
template <Scalar S>
Matrix<S> pair_matrix(const TPair<S>& p) {
  return transport_matrix(p.b.one_like(), p);
}

/// The automorphism of T_t for a pair, as a checked algebra map. t must be
/// nonzero.
template <Scalar S>
LinearAlgebraMap<S> transport_aut_T(const S& t, const TPair<S>& p) {
  if (t.is_zero()) throw InputError("transport needs t != 0");
  auto T = std::make_shared<const StructAlgebra<S>>(build_T(t));
  LinearAlgebraMap<S> phi(T, T, transport_matrix(t, p));
  if (!is_algebra_morphism(phi)) throw InconsistencyError("transported map is not an algebra morphism");
  return phi;
}

/// The isomorphism T_t -> T_1, e2' -> t e2, e3' -> e3 (t != 0), and its inverse.
template <Scalar S>
Matrix<S> iso_T_to_T1(const S& t) {
  if (t.is_zero()) throw InputError("T_0 is not isomorphic to T_1");
  Matrix<S> m = Matrix<S>::identity(3, t);
  m(1, 1) = t;
  return m;
}

template <Scalar S>
Matrix<S> iso_T1_to_T(const S& t) {
  if (t.is_zero()) throw InputError("T_0 is not isomorphic to T_1");
  Matrix<S> m = Matrix<S>::identity(3, t);
  m(1, 1) = t.one_like() / t;
  return m;
}

/// Entrywise limit at symbol = value; nullopt when some entry has a pole.
std::optional<Matrix<RationalFunction>> limit_matrix(const Matrix<RationalFunction>& m, const std::string& symbol,
                                                     const FieldElement& value);

using FStructAlgebra = StructAlgebra<FieldElement>;
using FMap = LinearAlgebraMap<FieldElement>;

/// k^n with componentwise product, in the basis {1, u_2, ..., u_n} where u_i
/// is the unit of the i-th factor.
FStructAlgebra product_algebra(const Field& f, int copies);

/// Every unital automorphism of A over a finite field. The unit must be e_1;
/// the images of the other n - 1 basis vectors are enumerated, q^{n(n-1)}
/// candidates at most `budget`. Sorted by candidate index.
std::vector<Matrix<FieldElement>> brute_force_algebra_automorphisms(const FStructAlgebra& A,
                                                                    Exec exec = Exec::parallel,
                                                                    std::uint64_t budget = 100000000);

/// Reads {"field": spec, "table": n x n x n rational constants, "unit": [...]}.
/// The unit defaults to e_1.
FStructAlgebra parse_struct_algebra(const std::string& json_text);

}  // namespace symlab
