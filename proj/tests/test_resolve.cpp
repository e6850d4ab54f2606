#include "doctest.h"

#include "germ/corpus.hpp"
#include "germ/errors.hpp"
#include "germ/resolve.hpp"

#include "oracles.hpp"

#include <random>

using namespace germ;

namespace {

Poly2 P(const char* s) { return parse_poly(s); }
GermDivisor D(const Rational& c, const char* s) { return GermDivisor::single(c, P(s)); }

}  // namespace

TEST_CASE("cusp resolution data") {
  ResolutionTree t = log_resolution({P("x^2+y^3")});
  REQUIRE(t.exceptionals.size() == 3);
  CHECK(t.exceptionals[0].k == 1);
  CHECK(t.exceptionals[1].k == 2);
  CHECK(t.exceptionals[2].k == 4);
  CHECK(t.exceptionals[0].ord[0] == 2);
  CHECK(t.exceptionals[1].ord[0] == 3);
  CHECK(t.exceptionals[2].ord[0] == 6);
}

TEST_CASE("lct by resolution") {
  LctResult cusp = lct_exact(GermDivisor(), D(1, "x^2+y^3"));
  CHECK(cusp.value == rat(5, 6));
  CHECK(cusp.kind == ResultKind::Exact);
  CHECK(cusp.witness.node == 3);
  CHECK(cusp.witness.k == 4);
  CHECK(lct_exact(GermDivisor(), D(1, "x")).value == 1);
  CHECK(lct_exact(D(rat(1, 2), "x^2+y^3"), D(1, "y")).value == 1);
  CHECK(lct_exact(GermDivisor(), D(1, "x^2+y^2")).value == 1);
  CHECK(lct_exact(GermDivisor(), D(1, "y^2-x^4")).value == rat(3, 4));
  CHECK(lct_exact(GermDivisor(), D(1, "x*y*(x-y)")).value == rat(2, 3));
  CHECK(lct_exact(GermDivisor(), D(1, "x^2*y^3")).value == rat(1, 3));
  CHECK(lct_exact(GermDivisor(), D(1, "x^2+y^5")).value == rat(7, 10));
  CHECK_THROWS_AS(lct_exact(D(2, "x"), D(1, "y")), NotLcError);
}

TEST_CASE("mld of germ pairs") {
  CHECK(mld_germ(GermDivisor()).value == 2);
  // components of B through the point count alongside exceptional curves
  for (const Rational& c : {rat(1, 3), rat(1, 2), rat(1)}) {
    CHECK(mld_germ(D(c, "x")).value == 1 - c);
  }
  CHECK(mld_germ(D(rat(5, 6), "x^2+y^3")).value == 0);
  CHECK(mld_germ(D(rat(1, 2), "x*y")).value == rat(1, 2));
  CHECK(mld_germ(D(rat(1, 5), "x^2+y^3")).value == rat(4, 5));
}

TEST_CASE("relative lct and mld over a curve germ") {
  for (const Rational& s : {rat(0), rat(1, 5), rat(1, 2)}) {
    GermDivisor b({DivisorPart{1, P("x-y^2")}, DivisorPart{-s, P("x")}});
    FiberResult l = lct_relative_fiber({b});
    CHECK(l.value == rat(1, 2) + s);
    CHECK(l.witness.node == 2);
    CHECK(mld_relative_fiber({b}).value == 1 + s);
  }
  GermDivisor b({DivisorPart{1, P("x^2+y^3")}, DivisorPart{-1, P("y")}});
  FiberResult r = lct_relative_fiber({b});
  CHECK(r.value == rat(1, 3));
  CHECK(r.witness.node == 3);
  // several fiber points: minimum over them
  FiberResult two = lct_relative_fiber({D(1, "x-y^2"), GermDivisor()});
  CHECK(two.value == rat(1, 2));
  CHECK(two.point == 0);
}

TEST_CASE("intersection multiplicity and branches") {
  CHECK(intersection_multiplicity(P("x"), P("y")) == 1);
  CHECK(intersection_multiplicity(P("x"), P("x^2+y^3")) == 3);
  CHECK(intersection_multiplicity(P("x^2+y^3"), P("x^2-y^3")) == 6);
  CHECK(intersection_multiplicity(P("x^2+y^2"), P("x^2-2*y^2")) == 4);
  CHECK_THROWS_AS(intersection_multiplicity(P("x+1"), P("y")), InputError);
  CHECK_THROWS_AS(intersection_multiplicity(P("x*y"), P("x")), InputError);
  CHECK(branch_count(P("x^2+y^3")) == 1);
  CHECK(branch_count(P("x^2-y^4")) == 2);
  CHECK(branch_count(P("x^2+y^2")) == 2);
  CHECK(branch_count(P("y^3-x^3")) == 3);
  CHECK(branch_count(P("x")) == 1);
}

TEST_CASE("first Puiseux pairs") {
  CHECK(to_string(first_puiseux_pair(P("x^2+y^3"))) == "(2, 3)");
  CHECK(to_string(first_puiseux_pair(P("x+y^2"))) == "(1, inf)");
  CHECK(to_string(first_puiseux_pair(P("(x-y^2)^2-y^5"))) == "(2, 5)");
  CHECK(to_string(first_puiseux_pair(P("y^3-x^7"))) == "(3, 7)");
  CHECK_THROWS_AS(first_puiseux_pair(P("x*y")), InputError);
}

TEST_CASE("property: intersection multiplicity matches the local quotient dimension") {
  std::mt19937_64 rng(2024);
  std::vector<Poly2> polys;
  while (polys.size() < 24) {
    Poly2 f = random_germ(rng, 4);
    if (f.total_degree() <= 6) polys.push_back(f);
  }
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (gcd(polys[i], polys[j]).vanishes_at_origin()) continue;
      long expected = oracle::quotient_dimension(polys[i], polys[j]);
      REQUIRE(expected >= 0);
      CHECK(intersection_multiplicity(polys[i], polys[j]) == expected);
    }
  }
}

TEST_CASE("property: values do not depend on extra blow-ups") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 25; ++i) {
    GermDivisor c = GermDivisor::single(1, random_germ(rng) * random_germ(rng));
    LctResult base = lct_exact(GermDivisor(), c);
    MldResult mbase = mld_germ(c.scaled(base.value));
    for (int extra = 1; extra <= 3; ++extra) {
      ResolveOptions o;
      o.extra_blowups = extra;
      o.seed = static_cast<std::uint64_t>(i * 10 + extra);
      CHECK(lct_exact(GermDivisor(), c, o).value == base.value);
      CHECK(mld_germ(c.scaled(base.value), o).value == mbase.value);
    }
  }
}
