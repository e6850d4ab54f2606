#include "doctest.h"

#include "germ/errors.hpp"
#include "germ/formulas.hpp"

using namespace germ;

namespace {

Poly2 P(const char* s) { return parse_poly(s); }

GermDivisor two(const Rational& a, const char* f, const Rational& b, const char* g) {
  return GermDivisor({DivisorPart{a, P(f)}, DivisorPart{b, P(g)}});
}

}  // namespace

TEST_CASE("monomial times binomial") {
  CHECK(prop33_lct(1, 1, 1, 1) == 1);
  CHECK(prop33_lct(1, 1, 2, 3) == rat(5, 9));
  CHECK(prop33_lct(2, 1, 2, 3) == rat(5, 12));
  CHECK(lct_exact(GermDivisor(), two(1, "x", 1, "x^2+y^3")).value == rat(5, 9));
  CHECK(lct_exact(GermDivisor(), two(2, "x", 1, "x^2+y^3")).value == rat(5, 12));
  CHECK_THROWS_AS(prop33_lct(0, 1, 1, 1), InputError);
}

TEST_CASE("sB + tC") {
  CHECK(prop35_lct(PuiseuxPair{2, 3}, 3, 1, 1) == rat(5, 9));
  CHECK(prop35_lct(PuiseuxPair{1, std::nullopt}, 1, 1, 1) == 1);
  CHECK(prop35_lct(PuiseuxPair{2, 3}, 2, 1, 1) == rat(5, 8));
  CHECK(lct_exact(GermDivisor(), two(1, "x^2+y^3", 1, "y")).value == rat(5, 8));
  try {
    prop35_lct(PuiseuxPair{2, 5}, 3, 1, 1);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.code() == "inadmissible_I");
  }
}

TEST_CASE("admissible intersection numbers") {
  CHECK(*admissible_I(PuiseuxPair{2, 5}) == std::vector<long>{2, 4, 5});
  CHECK(*admissible_I(PuiseuxPair{2, 3}) == std::vector<long>{2, 3});
  CHECK(*admissible_I(PuiseuxPair{3, 7}) == std::vector<long>{3, 6, 7});
  CHECK_FALSE(admissible_I(PuiseuxPair{1, std::nullopt}).has_value());
  CHECK_THROWS_AS(admissible_I(PuiseuxPair{2, 4}), InputError);
}

TEST_CASE("bounds") {
  BoundResult a = cor38_bound(PuiseuxPair{2, 3}, 3, rat(1, 2));
  CHECK(a.value == rat(2, 3));
  CHECK(a.hypothesis == "a");
  CHECK(cor38_bound(PuiseuxPair{1, std::nullopt}, 1, 1).value == 1);
  CHECK(cor38_bound(PuiseuxPair{2, 5}, 5, rat(1, 2)).value == rat(2, 5));
  CHECK(thm18_bound(1, 2) == rat(1, 2));
  CHECK(thm18_bound(1, 1) == 1);
  CHECK(thm18_bound(rat(2, 3), 2) == rat(2, 3));
  CHECK_THROWS_AS(thm18_bound(rat(3, 2), 2), InputError);
  CHECK(thmA2_bound(1, 2) == rat(1, 2));
  CHECK(thmA2_bound(rat(1, 2), 4) == rat(5, 8));
  CHECK_THROWS_AS(thmA2_bound(1, 3), InputError);
  CHECK(example39_family(1, 2, 1) == rat(1, 2));
  CHECK(example39_family(2, 3, rat(1, 2)) == rat(2, 3));
  CHECK(example39_family(2, 5, rat(1, 2)) == rat(2, 5));
  CHECK_THROWS_AS(example39_family(2, 4, rat(1, 2)), InputError);
}

TEST_CASE("property: bound is monotone") {
  std::vector<Rational> ms{rat(1, 7), rat(1, 3), rat(1, 2), rat(2, 3), rat(9, 10), rat(1)};
  std::vector<Rational> Is{rat(1), rat(5, 4), rat(3, 2), rat(2), rat(3), rat(7), rat(20)};
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = 0; j < Is.size(); ++j) {
      if (j + 1 < Is.size()) CHECK(thm18_bound(ms[i], Is[j + 1]) <= thm18_bound(ms[i], Is[j]));
      if (i + 1 < ms.size()) CHECK(thm18_bound(ms[i + 1], Is[j]) <= thm18_bound(ms[i], Is[j]));
    }
  }
}

TEST_CASE("weight search") {
  VarchenkoResult a = varchenko_upper_bound(GermDivisor::single(1, P("x^2+y^3")), 6, {});
  CHECK(a.result.value == rat(5, 6));
  CHECK(a.result.kind == ResultKind::Exact);
  CHECK(a.weight.a1 == 3);
  CHECK(a.weight.a2 == 2);
  VarchenkoResult b = varchenko_upper_bound(GermDivisor::single(1, P("(x+y)^2+y^3")), 6,
                                            {CoordinateChange{P("x-y"), P("y")}});
  CHECK(b.result.value == rat(5, 6));
  CHECK(b.change == 1);
  VarchenkoResult c = varchenko_upper_bound(GermDivisor::single(1, P("x^2+y^2")), 4, {});
  CHECK(c.result.value == 1);
  CHECK(c.weight.a1 == 1);
  CHECK(c.weight.a2 == 1);
  VarchenkoResult d = varchenko_upper_bound(GermDivisor::single(1, P("(x+y)^2+y^3")), 6, {}, false);
  CHECK(d.result.kind == ResultKind::Upper);
  CHECK(d.result.value == 1);
  CHECK_THROWS_AS(varchenko_upper_bound(GermDivisor::single(1, P("x")), 1, {}), InputError);
}

TEST_CASE("cyclic quotient mld") {
  for (long m = 1; m <= 5; ++m) {
    CHECK(cyclic_quotient_mld(CyclicQuotient{4 * m, {1, 2 * m - 1}}) == rat(1, 2));
    CHECK(cyclic_quotient_mld(CyclicQuotient{2 * m + 1, {1, 1, m}}) == rat(m + 2, 2 * m + 1));
  }
  CHECK(cyclic_quotient_mld(CyclicQuotient{1, {0, 0}}) == 2);
  CHECK(cyclic_quotient_mld(CyclicQuotient{4, {1, 1}}) == rat(1, 2));
  CHECK(cyclic_quotient_mld(CyclicQuotient{5, {1, 2}}) == rat(3, 5));
  CHECK_THROWS_AS(cyclic_quotient_mld(CyclicQuotient{4, {1}}), InputError);
}

TEST_CASE("branch profile") {
  BranchProfile p = branch_profile(P("x^2+y^3"), P("x"));
  CHECK(p.m == 2);
  CHECK(p.I == 3);
  REQUIRE(p.pair.has_value());
  CHECK(to_string(*p.pair) == "(2, 3)");
}
