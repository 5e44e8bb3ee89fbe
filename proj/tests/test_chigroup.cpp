#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "symlab/chigroup.hpp"
#include "symlab/parse.hpp"
#include "symlab/quotalg.hpp"

using namespace symlab;

namespace {

const Field Q = Field::rationals();

std::vector<Field> small_fields() {
  return {Field::prime(2), Field::prime(3), Field::finite(2, 2), Field::prime(5), Field::prime(7),
          Field::finite(2, 3), Field::finite(3, 2)};
}

FChi random_chi(gen::Rng& rng, const Field& f) { return FChi(rng.nonzero(f), rng.element(f)); }

// Orders found by brute-force iteration of the substitution polynomial mod X^3.
std::set<std::pair<std::uint64_t, std::uint64_t>> oracle_of_order(const Field& f, int k) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  MonogenicAlgebra<FieldElement> A(UniPoly<FieldElement>::monomial(f.one(), 3));
  for (const auto& a : f.elements()) {
    if (a.is_zero()) continue;
    for (const auto& b : f.elements()) {
      const UniPoly<FieldElement> g({f.zero(), a, b}, f.zero());
      if (map_order(A, g, k) == k) out.insert({a.index(), b.index()});
    }
  }
  return out;
}

std::set<std::pair<std::uint64_t, std::uint64_t>> keys(const std::vector<FChi>& v) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& x : v) out.insert({x.a.index(), x.b.index()});
  return out;
}

}  // namespace

TEST_CASE("composition examples") {
  const SymbolList s{"a", "b", "a1", "b1"};
  auto r = [&](const char* e) { return parse_ratfunc(e, Q, s); };
  const Chi<RationalFunction> x(r("a"), r("b")), y(r("a1"), r("b1"));
  const auto xy = chi_compose(x, y);
  CHECK(xy.a == r("a*a1"));
  CHECK(xy.b == r("a*b1 + a1^2*b"));

  const auto id = Chi<RationalFunction>::identity(r("0"));
  CHECK(chi_compose(id, x) == x);
  CHECK(chi_compose(x, id) == x);

  const Field f7 = Field::prime(7);
  const FChi p(f7.from_int(2), f7.one()), q(f7.from_int(3), f7.from_int(4));
  CHECK(chi_compose(p, q) == FChi(f7.from_int(6), f7.from_int(3)));
  // Same thing through substitution polynomials mod X^3.
  MonogenicAlgebra<FieldElement> A(UniPoly<FieldElement>::monomial(f7.one(), 3));
  const auto g = compose_maps(A, p.image(), q.image());
  CHECK(g.coeff(1) == f7.from_int(6));
  CHECK(g.coeff(2) == f7.from_int(3));
}

TEST_CASE("power examples") {
  const SymbolList s{"a", "b"};
  auto r = [&](const char* e) { return parse_ratfunc(e, Q, s); };
  const Chi<RationalFunction> x(r("a"), r("b"));
  CHECK(chi_power(x, 2) == Chi<RationalFunction>(r("a^2"), r("(a + a^2)*b")));
  CHECK(chi_power(x, 3) == Chi<RationalFunction>(r("a^3"), r("(a^2 + a^3 + a^4)*b")));
  CHECK(chi_power(x, 1) == x);
  CHECK_THROWS_AS(chi_power(x, 0), InputError);
  CHECK_THROWS_AS(Chi<RationalFunction>(r("0"), r("b")), InputError);
}

TEST_CASE("group laws on random elements") {
  gen::Rng rng(41);
  std::vector<Field> fields = small_fields();
  fields.push_back(Q);
  fields.push_back(Field::qzeta3());
  for (const Field& f : fields) {
    CAPTURE(f.spec());
    const FChi id = FChi::identity(f.one());
    for (int i = 0; i < 200; ++i) {
      const FChi x = random_chi(rng, f), y = random_chi(rng, f), z = random_chi(rng, f);
      REQUIRE(chi_compose(chi_compose(x, y), z) == chi_compose(x, chi_compose(y, z)));
      REQUIRE(chi_compose(id, x) == x);
      REQUIRE(chi_compose(x, chi_inverse(x)) == id);
      REQUIRE(chi_compose(chi_inverse(x), x) == id);

      // N = {chi(1, b)} is normal.
      const FChi n(f.one(), rng.element(f));
      REQUIRE(chi_compose(chi_compose(x, n), chi_inverse(x)).a.is_one());

      // Conjugating psi_b by phi_a gives psi_{ab}. Read as maps applied
      // right to left this is phi_a psi_b phi_a^{-1}.
      const FieldElement a = rng.nonzero(f), b = rng.element(f);
      const FChi phi(a, f.zero()), psi(f.one(), b);
      REQUIRE(chi_compose(chi_compose(chi_inverse(phi), psi), phi) == FChi(f.one(), a * b));
    }
  }
}

TEST_CASE("closed-form power equals iterated composition") {
  gen::Rng rng(42);
  std::vector<Field> fields = small_fields();
  fields.push_back(Q);
  fields.push_back(Field::qzeta3());
  for (const Field& f : fields) {
    for (int i = 0; i < 20; ++i) {
      const FChi x = random_chi(rng, f);
      FChi acc = x;
      for (int n = 1; n <= 12; ++n) {
        REQUIRE(chi_power(x, n) == acc);
        acc = chi_compose(acc, x);
      }
    }
  }
}

TEST_CASE("chi composition agrees with substitution composition") {
  gen::Rng rng(43);
  for (const Field& f : {Q, Field::prime(5), Field::finite(2, 2)}) {
    MonogenicAlgebra<FieldElement> A(UniPoly<FieldElement>::monomial(f.one(), 3));
    for (int i = 0; i < 100; ++i) {
      const FChi x = random_chi(rng, f), y = random_chi(rng, f);
      REQUIRE(compose_maps(A, x.image(), y.image()) == chi_compose(x, y).image());
    }
  }
}

TEST_CASE("order classes match brute force") {
  for (const Field& f : small_fields()) {
    CAPTURE(f.spec());
    const auto rep = order_class(f);
    REQUIRE(rep.order2);
    REQUIRE(rep.order3);
    const auto o2 = oracle_of_order(f, 2), o3 = oracle_of_order(f, 3);
    CHECK(keys(*rep.order2) == o2);
    CHECK(keys(*rep.order3) == o3);
    for (Exec e : {Exec::serial, Exec::parallel}) {
      CHECK(keys(chi_elements_of_order(f, 2, e)) == o2);
      CHECK(keys(chi_elements_of_order(f, 3, e)) == o3);
    }
  }
}

TEST_CASE("order class examples") {
  const auto f5 = order_class(Field::prime(5));
  CHECK(f5.order2_case == "char-not-2");
  CHECK(f5.order2->size() == 5);
  for (const auto& x : *f5.order2) CHECK(x.a == Field::prime(5).from_int(-1));
  CHECK(f5.order3->empty());
  CHECK(f5.order3_case == "char-not-2-3-no-zeta3");

  const Field f4 = Field::finite(2, 2);
  const auto r4 = order_class(f4);
  CHECK(r4.order3_case == "char2-with-zeta3");
  CHECK(r4.order3->size() == 8);
  CHECK(r4.order2_case == "char2");
  CHECK(r4.order2->size() == 3);

  const auto r3 = order_class(Field::prime(3));
  CHECK(r3.order3_case == "char3");
  CHECK(r3.order3->size() == 2);
  CHECK_FALSE(r3.warnings.empty());

  CHECK(order_class(Field::prime(7)).order3->size() == 14);
  CHECK(order_class(Field::prime(7)).order3_case == "char-not-2-3-with-zeta3");
  CHECK(order_class(Field::prime(2)).order3_case == "char2-no-zeta3");
  CHECK(order_class(Field::prime(2)).order2->size() == 1);

  const auto rq = order_class(Q);
  CHECK_FALSE(rq.order2);
  CHECK(rq.order3_description == "empty");
  CHECK(order_class(Field::qzeta3()).order3_case == "char-not-2-3-with-zeta3");

  CHECK(order3_case_label(3, true) == "char3-with-zeta3-unreachable");
}

TEST_CASE("G3 over F4 is a union of two cosets of N") {
  const Field f4 = Field::finite(2, 2);
  const auto g3 = *order_class(f4).order3;
  std::set<std::uint64_t> as;
  for (const auto& x : g3) as.insert(x.a.index());
  CHECK(as.size() == 2);
  // Each coset chi N = {chi(a, b') : b' in k} has 4 elements.
  for (auto a : as) {
    int n = 0;
    for (const auto& x : g3) n += x.a.index() == a;
    CHECK(n == 4);
  }
}

TEST_CASE("no S3 inside G away from characteristic 3") {
  for (const Field& f : {Field::prime(2), Field::finite(2, 2), Field::prime(5), Field::prime(7), Field::prime(47),
                         Field::finite(7, 2)}) {
    CAPTURE(f.spec());
    const auto r = no_s3_check(f);
    CHECK(r.holds);
    CHECK_FALSE(r.counterexample);
    CHECK(r.group_size == (f.size() - 1) * f.size());
  }
  CHECK(no_s3_check(Field::prime(7)).group_size == 42);
  CHECK(no_s3_check(Field::prime(2)).pairs_checked == 0);
  CHECK_THROWS_AS(no_s3_check(Field::prime(53)), InputError);
  CHECK_THROWS_AS(no_s3_check(Q), InputError);
}

TEST_CASE("in characteristic 3 two involutions can multiply to order 3") {
  for (const Field& f : {Field::prime(3), Field::finite(3, 2)}) {
    const auto r = no_s3_check(f);
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.counterexample);
    const auto [u, v] = *r.counterexample;
    MonogenicAlgebra<FieldElement> A(UniPoly<FieldElement>::monomial(f.one(), 3));
    CHECK(map_order(A, u.image(), 2) == 2);
    CHECK(map_order(A, v.image(), 2) == 2);
    CHECK(map_order(A, compose_maps(A, u.image(), v.image()), 3) == 3);
  }
  // Over F3 the whole group has order 6 and is non-abelian, so it is S3.
  const Field f3 = Field::prime(3);
  const auto g = chi_elements(f3);
  CHECK(g.size() == 6);
  bool abelian = true;
  for (const auto& x : g)
    for (const auto& y : g) abelian = abelian && chi_compose(x, y) == chi_compose(y, x);
  CHECK_FALSE(abelian);
}
