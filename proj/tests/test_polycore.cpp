#include "doctest.h"
#include "gen.hpp"
#include "symlab/error.hpp"
#include "symlab/parse.hpp"
#include "symlab/ratfunc.hpp"
#include "symlab/unipoly.hpp"

using namespace symlab;

namespace {

const Field Q = Field::rationals();

UniPoly<FieldElement> up(const Field& f, std::vector<long> c) {
  std::vector<FieldElement> v;
  for (long x : c) v.push_back(f.from_int(x));
  return UniPoly<FieldElement>(std::move(v), f.zero());
}

RationalFunction rf(const std::string& s, const SymbolList& syms = SymbolList{"t"}) {
  return parse_ratfunc(s, Q, syms);
}

}  // namespace

TEST_CASE("divmod examples") {
  auto [q1, r1] = up(Q, {0, 0, 0, 1}).divmod(up(Q, {-1, 1}));
  CHECK(q1 == up(Q, {1, 1, 1}));
  CHECK(r1 == up(Q, {1}));

  auto [q2, r2] = up(Q, {0, 0, -1, 1}).divmod(up(Q, {0, 0, -1, 1}));
  CHECK(q2 == up(Q, {1}));
  CHECK(r2.is_zero());

  const Field f5 = Field::prime(5);
  const auto f = up(f5, {0, 1}) * up(f5, {-1, 1}) * up(f5, {-2, 1});
  auto [q3, r3] = f.divmod(up(f5, {-1, 1}));
  CHECK(r3.is_zero());
  CHECK(q3 * up(f5, {-1, 1}) == f);
  CHECK(q3 == up(f5, {0, -2, 1}));

  CHECK_THROWS_AS(f.divmod(UniPoly<FieldElement>(f5.zero())), DivisionByZero);
}

TEST_CASE("divmod round trip on random polynomials") {
  gen::Rng rng(21);
  for (const Field& f : {Q, Field::prime(5), Field::finite(2, 2), Field::qzeta3()}) {
    for (int i = 0; i < 500; ++i) {
      const auto a = rng.unipoly(f, 7);
      auto b = rng.unipoly(f, 4);
      if (b.is_zero()) continue;
      auto [q, r] = a.divmod(b);
      REQUIRE(q * b + r == a);
      REQUIRE(r.degree() < b.degree());
    }
  }
}

TEST_CASE("order at zero") {
  CHECK(order_at_zero(rf("(2-t)/(1-t)"), "t") == 0);
  CHECK(order_at_zero(rf("(1-t-t^2)/(t*(t-1))"), "t") == -1);
  CHECK(order_at_zero(rf("t^3/t"), "t") == 2);
  CHECK_THROWS_AS(order_at_zero(rf("0"), "t"), InputError);
}

TEST_CASE("limits") {
  auto l0 = limit_at(rf("(t^2-t-1)/(1-t)"), "t", Q.zero());
  REQUIRE(std::holds_alternative<RationalFunction>(l0));
  CHECK(std::get<RationalFunction>(l0) == rf("-1"));

  auto l1 = limit_at(rf("(2-t)/(1-t)"), "t", Q.one());
  REQUIRE(std::holds_alternative<Pole>(l1));
  CHECK(std::get<Pole>(l1).order == -1);

  auto l2 = limit_at(rf("(t^2-1)/(t-1)"), "t", Q.one());
  REQUIRE(std::holds_alternative<RationalFunction>(l2));
  CHECK(std::get<RationalFunction>(l2) == rf("2"));

  // Multivariate: the limit is a function of the remaining symbols.
  const SymbolList s{"x1", "x2", "t"};
  auto l3 = limit_at(rf("(t*x1 + x2)/(1 + t*x2)", s), "t", Q.zero());
  REQUIRE(std::holds_alternative<RationalFunction>(l3));
  CHECK(std::get<RationalFunction>(l3) == rf("x2", s));
}

TEST_CASE("rational function equality by cross multiplication") {
  CHECK(rf("(t^2-1)/(t-1)") == rf("t+1"));
  CHECK(rf("t") == rf("t^2/t"));
  CHECK_FALSE(rf("(t^2-t-1)/(1-t)") == rf("(t^2-t-1)/(t-1)"));
  CHECK_THROWS_AS((void)ratfunc_equal(rf("t"), rf("t", SymbolList{"t", "a"})), InputError);
}

TEST_CASE("limit agrees with substitution away from poles") {
  gen::Rng rng(22);
  const SymbolList s{"t"};
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const MultiPoly n = rng.multipoly(Q, s, 3, 3);
    const MultiPoly d = rng.nonzero_multipoly(Q, s, 3, 3);
    const RationalFunction r(n, d);
    const FieldElement t0 = Q.from_int(rng.integer(-3, 3));
    const FieldElement dv = d.evaluate({t0});
    if (dv.is_zero()) continue;
    auto lim = limit_at(r, "t", t0);
    REQUIRE(std::holds_alternative<RationalFunction>(lim));
    CHECK(std::get<RationalFunction>(lim).constant_value() == n.evaluate({t0}) / dv);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("order is additive") {
  gen::Rng rng(23);
  const SymbolList s{"x1", "t"};
  for (int i = 0; i < 200; ++i) {
    const RationalFunction r(rng.nonzero_multipoly(Q, s, 3, 3), rng.nonzero_multipoly(Q, s, 3, 3));
    const RationalFunction u(rng.nonzero_multipoly(Q, s, 3, 3), rng.nonzero_multipoly(Q, s, 3, 3));
    REQUIRE(order_at_zero(r * u, "t") == order_at_zero(r, "t") + order_at_zero(u, "t"));
  }
}

TEST_CASE("field operations on rational functions") {
  gen::Rng rng(24);
  const SymbolList s{"a", "t"};
  for (int i = 0; i < 100; ++i) {
    const RationalFunction x(rng.multipoly(Q, s, 3, 2), rng.nonzero_multipoly(Q, s, 2, 2));
    const RationalFunction y(rng.multipoly(Q, s, 3, 2), rng.nonzero_multipoly(Q, s, 2, 2));
    const RationalFunction z(rng.multipoly(Q, s, 2, 2), rng.nonzero_multipoly(Q, s, 2, 2));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE((x - y) + y == x);
    if (!y.is_zero()) REQUIRE((x / y) * y == x);
  }
}

TEST_CASE("printing") {
  CHECK(rf("(t^2 - t - 1)/(1 - t)").to_string() == "(-t^2 + t + 1)/(t - 1)");
  CHECK(rf("(2-t)/(1-t)").to_string() == "(t - 2)/(t - 1)");
  CHECK(rf("t/2").to_string() == "t/2");
  CHECK(rf("-1").to_string() == "-1");
  const SymbolList s{"x1", "x2", "x3"};
  CHECK(rf("x1 + x2 - 2*x3", s).to_string() == "x1 + x2 - 2*x3");
}

TEST_CASE("parser") {
  CHECK(rf("t^2") == rf("t*t"));
  CHECK(rf("3t") == rf("3*t"));
  CHECK(rf("-(t-1)") == rf("1-t"));
  CHECK(rf("1/2") == RationalFunction::constant(Q, SymbolList{"t"}, Q.from_rational(mpq_class(1, 2))));
  CHECK_THROWS_AS(rf("t +"), ParseError);
  CHECK_THROWS_AS(rf("y"), ParseError);
  CHECK_THROWS_AS(rf("1/(t-t)"), InputError);
  try {
    rf("t\n  + $");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  const Field z = Field::qzeta3();
  CHECK(parse_scalar("zeta3^3", z).is_one());
  CHECK_THROWS_AS(parse_scalar("zeta3", Q), ParseError);
  CHECK(parse_unipoly("factored:(X)(X-1)(X-2)", Field::prime(5)) == up(Field::prime(5), {0, 2, 2, 1}));
}
