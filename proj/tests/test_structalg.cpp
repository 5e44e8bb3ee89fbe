#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "symlab/parse.hpp"
#include "symlab/structalg.hpp"

using namespace symlab;

namespace {

const Field Q = Field::rationals();

using FPair = TPair<FieldElement>;
using RMat = Matrix<RationalFunction>;

std::shared_ptr<const FStructAlgebra> shared(FStructAlgebra a) { return std::make_shared<const FStructAlgebra>(a); }

std::vector<std::uint64_t> key(const Matrix<FieldElement>& m) {
  std::vector<std::uint64_t> k;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j).index());
  return k;
}

}  // namespace

TEST_CASE("T_t relations") {
  const Field f7 = Field::prime(7);
  const auto T1 = build_T(f7.one());
  const auto e2 = T1.basis(1), e3 = T1.basis(2), one = T1.basis(0);
  auto neg = [&](std::vector<FieldElement> v) {
    for (auto& x : v) x = -x;
    return v;
  };
  CHECK(T1.mul(e2, e2) == one);
  CHECK(T1.mul(e3, e3) == std::vector<FieldElement>(3, f7.zero()));
  CHECK(T1.mul(e2, e3) == e3);
  CHECK(T1.mul(e3, e2) == neg(e3));
  CHECK_FALSE(T1.is_commutative());

  // T_0 is k[X,Y]/(X^2, Y^2, XY): every product of non-unit basis vectors vanishes.
  const auto T0 = build_T(f7.zero());
  CHECK(T0.is_commutative());
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t j = 1; j < 3; ++j) CHECK(T0.mul(T0.basis(i), T0.basis(j)) == std::vector<FieldElement>(3, f7.zero()));

  // Symbolic t: the constructor checks all 27 triples over Q(t).
  const SymbolList s{"t"};
  const auto Tt = build_T(RationalFunction::variable(Q, s, "t"));
  CHECK(Tt.mul(Tt.basis(1), Tt.basis(1))[0] == parse_ratfunc("t^2", Q, s));
}

TEST_CASE("associativity check rejects a corrupted table") {
  const Field f5 = Field::prime(5);
  auto tab = build_T(f5.one()).table();
  const auto unit = build_T(f5.one()).unit();
  CHECK_NOTHROW(FStructAlgebra(tab, unit));
  tab[1][2][2] = f5.from_int(2);  // e2 e3 = 2 e3
  CHECK_THROWS_AS(FStructAlgebra(tab, unit), InputError);

  auto tab2 = build_T(f5.one()).table();
  tab2[0][1][1] = f5.zero();  // 1 * e2 = 0
  CHECK_THROWS_AS(FStructAlgebra(tab2, unit), InputError);

  // Random single-entry mutations are almost always caught.
  gen::Rng rng(71);
  int caught = 0;
  for (int i = 0; i < 50; ++i) {
    auto t = build_T(f5.one()).table();
    auto& x = t[rng.integer(1, 2)][rng.integer(1, 2)][rng.integer(0, 2)];
    x = x + f5.from_int(rng.integer(1, 4));
    try {
      FStructAlgebra bad(t, unit);
    } catch (const InputError&) {
      ++caught;
    }
  }
  CHECK(caught >= 45);
}

TEST_CASE("algebra morphism examples on T_1") {
  const Field f7 = Field::prime(7);
  const auto T = shared(build_T(f7.one()));
  CHECK(is_algebra_morphism(FMap(T, T, pair_matrix(FPair{f7.from_int(5), f7.from_int(2)}))));
  CHECK(is_algebra_morphism(FMap(T, T, Matrix<FieldElement>::identity(3, f7.one()))));
  Matrix<FieldElement> swap(3, 3, f7.zero());
  swap(0, 0) = f7.one();
  swap(2, 1) = f7.one();
  swap(1, 2) = f7.one();
  CHECK_FALSE(is_algebra_morphism(FMap(T, T, swap)));
  CHECK_THROWS_AS(FMap(T, shared(product_algebra(f7, 2)), swap), InputError);
}

TEST_CASE("automorphisms of T_1 over F5") {
  const Field f5 = Field::prime(5);
  const auto T1 = build_T(f5.one());
  const auto auts = brute_force_algebra_automorphisms(T1, Exec::serial);
  REQUIRE(auts.size() == 20);
  CHECK(brute_force_algebra_automorphisms(T1, Exec::parallel) == auts);

  // Every one is a (b, b') map.
  std::map<std::vector<std::uint64_t>, FPair> pairs;
  for (const auto& m : auts) {
    const FPair p{m(2, 1), m(2, 2)};
    REQUIRE_FALSE(p.bp.is_zero());
    REQUIRE(pair_matrix(p) == m);
    pairs.emplace(key(m), p);
  }
  CHECK(pairs.size() == 20);

  // Composition of maps matches the pair law on all 400 ordered pairs.
  int checked = 0;
  for (const auto& m2 : auts)
    for (const auto& m1 : auts) {
      const auto prod = m2 * m1;
      REQUIRE(pairs.count(key(prod)));
      REQUIRE(pairs.at(key(prod)) == compose_pair(pairs.at(key(m2)), pairs.at(key(m1))));
      ++checked;
    }
  CHECK(checked == 400);
}

TEST_CASE("automorphisms of T_0 over F3 are GL2") {
  const Field f3 = Field::prime(3);
  const auto auts = brute_force_algebra_automorphisms(build_T(f3.zero()));
  CHECK(auts.size() == 48);
  for (const auto& m : auts) {
    // No constant part in the images, and the lower 2x2 block is invertible.
    CHECK(m(0, 1).is_zero());
    CHECK(m(0, 2).is_zero());
    CHECK_FALSE((m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)).is_zero());
  }
}

TEST_CASE("automorphisms of k x k") {
  const Field f3 = Field::prime(3);
  const auto A = product_algebra(f3, 2);
  CHECK(A.is_commutative());
  const auto auts = brute_force_algebra_automorphisms(A);
  REQUIRE(auts.size() == 2);
  CHECK(auts[0].is_identity() != auts[1].is_identity());
  // k^3 has S3.
  CHECK(brute_force_algebra_automorphisms(product_algebra(f3, 3), Exec::serial).size() == 6);
  CHECK_THROWS_AS(brute_force_algebra_automorphisms(build_T(Field::prime(47).one()), Exec::serial, 1000),
                  InputError);
}

TEST_CASE("pair composition") {
  const Field f5 = Field::prime(5);
  auto p = [&](long b, long bp) { return FPair{f5.from_int(b), f5.from_int(bp)}; };
  CHECK(compose_pair(p(1, 2), p(3, 4)) == p(2, 3));
  CHECK(compose_pair(p(0, 1), p(3, 4)) == p(3, 4));
  CHECK(compose_pair(p(3, 4), p(0, 1)) == p(3, 4));
  CHECK_THROWS_AS(compose_pair(p(1, 0), p(1, 1)), InputError);

  const SymbolList s{"b1", "c1", "b2", "c2"};
  auto r = [&](const char* e) { return parse_ratfunc(e, Q, s); };
  const TPair<RationalFunction> p1{r("b1"), r("c1")}, p2{r("b2"), r("c2")};
  const auto c = compose_pair(p2, p1);
  CHECK(c.b == r("b2 + b1*c2"));
  CHECK(c.bp == r("c1*c2"));
  // Same as the matrix model [[1, b], [0, b']] multiplied in the same order.
  CHECK(pair_matrix(p2) * pair_matrix(p1) == pair_matrix(c));
}

TEST_CASE("T_t is isomorphic to T_1 for t != 0") {
  const Field f7 = Field::prime(7);
  const auto T1 = shared(build_T(f7.one()));
  for (long t = 1; t < 7; ++t) {
    const auto tt = f7.from_int(t);
    const auto Tt = shared(build_T(tt));
    CHECK(is_algebra_morphism(FMap(Tt, T1, iso_T_to_T1(tt))));
    CHECK(is_algebra_morphism(FMap(T1, Tt, iso_T1_to_T(tt))));
    CHECK((iso_T_to_T1(tt) * iso_T1_to_T(tt)).is_identity());
  }
  CHECK_THROWS_AS(iso_T_to_T1(f7.zero()), InputError);
  CHECK_FALSE(is_algebra_morphism(FMap(shared(build_T(f7.zero())), T1, Matrix<FieldElement>::identity(3, f7.one()))));
}

TEST_CASE("transport to T_t and the limit at t = 0") {
  const SymbolList s{"t", "b", "c"};
  auto r = [&](const char* e) { return parse_ratfunc(e, Q, s); };
  const RationalFunction t = r("t");
  const TPair<RationalFunction> p{r("b"), r("c")};
  const auto phi = transport_aut_T(t, p);
  RMat expect = RMat::identity(3, t);
  expect(2, 1) = r("t*b");
  expect(2, 2) = r("c");
  CHECK(phi.m == expect);

  // The transported map is the conjugate of the T_1 map through the isomorphism.
  CHECK(iso_T1_to_T(t) * pair_matrix(p) * iso_T_to_T1(t) == phi.m);

  const auto lim = limit_matrix(phi.m, "t", Q.zero());
  REQUIRE(lim);
  RMat diag = RMat::identity(3, t);
  diag(2, 2) = r("c");
  CHECK(*lim == diag);
  CHECK_FALSE((*lim)(2, 1).numerator().used_variables().size());

  const auto T0 = std::make_shared<const StructAlgebra<RationalFunction>>(build_T(t.zero_like()));
  CHECK(is_algebra_morphism(LinearAlgebraMap<RationalFunction>(T0, T0, *lim)));

  // At t = 1 this is the T_1 map.
  CHECK(transport_matrix(t.one_like(), p) == pair_matrix(p));
  CHECK_THROWS_AS(transport_aut_T(t.zero_like(), p), InputError);
}

TEST_CASE("the limit is a homomorphism with kernel N") {
  const Field f5 = Field::prime(5);
  const SymbolList s{"t"};
  const RationalFunction t = RationalFunction::variable(f5, s, "t");
  auto lift = [&](const FieldElement& x) { return RationalFunction::constant(f5, s, x); };
  auto limit_of = [&](const FPair& p) {
    return *limit_matrix(transport_matrix(t, TPair<RationalFunction>{lift(p.b), lift(p.bp)}), "t", f5.zero());
  };
  std::vector<FPair> all;
  for (const auto& b : f5.elements())
    for (const auto& bp : f5.elements())
      if (!bp.is_zero()) all.push_back({b, bp});
  int kernel = 0;
  for (const auto& p : all) {
    const auto l = limit_of(p);
    if (l.is_identity()) {
      ++kernel;
      CHECK(p.bp.is_one());
    }
    for (const auto& q : all) REQUIRE(limit_of(compose_pair(p, q)) == l * limit_of(q));
  }
  CHECK(kernel == 5);
}

TEST_CASE("algebra from JSON") {
  const auto A = parse_struct_algebra(R"j({"field": "Fp(5)",
      "table": [[[1,0,0],[0,1,0],[0,0,1]], [[0,1,0],[1,0,0],[0,0,1]], [[0,0,1],[0,0,-1],[0,0,0]]]})j");
  CHECK(A.dim() == 3);
  CHECK(brute_force_algebra_automorphisms(A).size() == 20);
  CHECK_THROWS_AS(parse_struct_algebra("{"), InputError);
  CHECK_THROWS_AS(parse_struct_algebra(R"({"table": [[[1,0],[0,0]], [[0,1],[0,2]]], "field": "Q"})"),
                  InputError);
  CHECK_THROWS_AS(parse_struct_algebra(R"({"field": "Q"})"), InputError);
}
