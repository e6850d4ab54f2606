#include "doctest.h"

#include "germ/divisor.hpp"
#include "germ/errors.hpp"
#include "germ/field.hpp"
#include "germ/poly2.hpp"
#include "germ/rational.hpp"

#include <map>
#include <random>

using namespace germ;

namespace {

Poly2 P(const char* s) { return parse_poly(s); }

Poly2 random_poly(std::mt19937_64& rng, int max_terms = 5, int max_exp = 4) {
  Poly2 f;
  int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int t = 0; t < terms; ++t) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 3);
    f.add_term(rat(num, den), static_cast<int>(rng() % static_cast<unsigned>(max_exp + 1)),
               static_cast<int>(rng() % static_cast<unsigned>(max_exp + 1)));
  }
  return f;
}

}  // namespace

TEST_CASE("rationals print as a/b") {
  CHECK(to_string(rat(3)) == "3/1");
  CHECK(to_string(rat(-4, 6)) == "-2/3");
  CHECK(parse_rational("10/4") == rat(5, 2));
  CHECK(parse_rational("-7") == rat(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK(floor_of(rat(-1, 2)) == -1);
  CHECK(frac(rat(7, 3)) == rat(1, 3));
  CHECK(rational_gcd(rat(2), rat(3)) == 1);
  CHECK(rational_gcd(rat(4, 3), rat(2)) == rat(2, 3));
}

TEST_CASE("polynomial parser") {
  Poly2 f = P("x^2 + y^3");
  CHECK(f.coeff(2, 0) == 1);
  CHECK(f.coeff(0, 3) == 1);
  CHECK(f.size() == 2);
  Poly2 g = P("(x - y^2)^2 - y^5");
  CHECK(g.coeff(2, 0) == 1);
  CHECK(g.coeff(1, 2) == -2);
  CHECK(g.coeff(0, 4) == 1);
  CHECK(g.coeff(0, 5) == -1);
  CHECK(g.size() == 4);
  Poly2 h = P("1/2*x*y");
  CHECK(h.coeff(1, 1) == rat(1, 2));
  CHECK(h.size() == 1);
  CHECK(P(" - x ") == -Poly2::x());
  CHECK(P("2^3*x") == Poly2::monomial(8, 1, 0));
}

TEST_CASE("parser errors carry offsets") {
  try {
    P("2x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
    CHECK(e.code() == "syntax");
  }
  CHECK_THROWS_AS(P("x^-1"), ParseError);
  CHECK_THROWS_AS(P("z"), ParseError);
  CHECK_THROWS_AS(P("(x+y"), ParseError);
  CHECK_THROWS_AS(P("x/0"), ParseError);
  CHECK_THROWS_AS(P("x+"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(parse_poly(std::string(5000, '(') + "x" + std::string(5000, ')')), ParseError);
  CHECK_THROWS_AS(parse_poly(std::string(5000, '-') + "x"), ParseError);
  CHECK(parse_poly(std::string(50, '(') + "x" + std::string(50, ')')) == Poly2::x());
}

TEST_CASE("multiplicities and leading forms") {
  CHECK(multiplicity_at_origin(P("x^2+y^3")) == 2);
  CHECK(multiplicity_at_origin(P("x*y")) == 2);
  CHECK(multiplicity_at_origin(P("x^2*y^3")) == 5);
  CHECK(weighted_multiplicity(P("x^2+y^3"), WeightVector(3, 2)) == 6);
  CHECK(weighted_multiplicity(P("x"), WeightVector(5, 7)) == 5);
  CHECK(weighted_multiplicity(P("x^2+y^3"), WeightVector(1, 1)) == 2);
  CHECK(weighted_leading_term(P("x^2+y^3+y^4"), WeightVector(3, 2)) == P("x^2+y^3"));
  CHECK(weighted_leading_term(P("x^2+y^3"), WeightVector(1, 1)) == P("x^2"));
  CHECK(weighted_leading_term(P("x*y"), WeightVector(2, 5)) == P("x*y"));
  CHECK(tangent_cone(P("y^2-x^2+x^3")) == P("y^2-x^2"));
  CHECK_THROWS_AS(WeightVector(2, 4), InputError);
  CHECK_THROWS_AS(WeightVector(0, 1), InputError);
}

TEST_CASE("substitution") {
  CHECK(substitute(P("x^2+y^3"), P("x+y^2"), P("y")) == P("x^2+2*x*y^2+y^4+y^3"));
  CHECK(substitute(P("y^2-x^3"), P("x"), P("x*y")) == P("x^2*y^2-x^3"));
  CHECK(swap_xy(P("x")) == P("y"));
  CHECK(derivative_x(P("x^3*y+y")) == P("3*x^2*y"));
  CHECK(derivative_y(P("x^3*y+y^2")) == P("x^3+2*y"));
}

TEST_CASE("degree guard") {
  CHECK_NOTHROW(check_degree(P("x^10"), 10));
  try {
    check_degree(P("x^11"), 10);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.code() == "guard");
  }
}

TEST_CASE("gcd and squarefree decomposition over Q") {
  CHECK(gcd(P("(x-y)*(x+y^2)"), P("(x-y)*(x-y^2)")) == normalize_associate(P("x-y")));
  CHECK(gcd(P("x"), P("y")) == Poly2(1));
  auto sq = squarefree_decomposition(P("x^2*(x-1)"));
  REQUIRE(sq.size() == 2);
  std::map<std::string, int> got;
  for (const auto& [f, e] : sq) got[f.to_string()] = e;
  CHECK(got[normalize_associate(P("x")).to_string()] == 2);
  CHECK(got[normalize_associate(P("x-1")).to_string()] == 1);
  auto sq2 = squarefree_decomposition(P("x^2+1"));
  REQUIRE(sq2.size() == 1);
  CHECK(sq2[0].second == 1);
  auto sq3 = squarefree_decomposition(P("(x-2)^3"));
  REQUIRE(sq3.size() == 1);
  CHECK(sq3[0].second == 3);
  CHECK(divide_exact(P("x^2-y^2"), P("x-y")) == P("x+y"));
  CHECK_FALSE(divide_exact(P("x^2+y^2"), P("x-y")).has_value());
}

TEST_CASE("univariate squarefree decomposition in a tower") {
  Field q;
  // z^2 (z - 1)
  UPoly p = q.poly({q.zero(), q.zero(), q.from(-1), q.one()});
  auto sq = squarefree_decomposition(q, p);
  REQUIRE(sq.size() == 2);
  std::map<int, std::string> by_exp;
  for (const auto& [u, e] : sq) by_exp[e] = q.format(u);
  CHECK(by_exp[2] == q.format(q.poly({q.zero(), q.one()})));
  CHECK(by_exp[1] == q.format(q.poly({q.from(-1), q.one()})));
  // z^2 + 1 stays whole
  auto sq2 = squarefree_decomposition(q, q.poly({q.one(), q.zero(), q.one()}));
  REQUIRE(sq2.size() == 1);
  CHECK(sq2[0].first.degree() == 2);
}

TEST_CASE("algebraic extensions and splitting") {
  Field q;
  auto t = Tower::extend(Tower::rationals(), q.poly({q.from(-2), q.zero(), q.one()}), "a");
  Field k = Field::top(t);
  Num a = k.generator();
  CHECK(k.equal(k.mul(a, a), k.from(2)));
  Num inv = k.inv(k.add(a, k.one()));  // 1/(1+a) = a-1
  CHECK(k.equal(inv, k.sub(a, k.one())));
  CHECK(k.conjugates() == 2);

  auto t2 = Tower::extend(Tower::rationals(), q.poly({q.from(-1), q.zero(), q.one()}), "b");
  Field k2 = Field::top(t2);
  Num b = k2.generator();
  bool split = false;
  try {
    k2.inv(k2.sub(b, k2.one()));
  } catch (const Split& s) {
    split = true;
    CHECK(s.first.degree() == 1);
    CHECK(s.second.degree() == 1);
    Specialisation sp(t2, 0, s.first);
    Field k3 = Field::top(sp.target());
    CHECK(k3.conjugates() == 1);
    Num b3 = sp.map(b, 1);
    CHECK(k3.equal(k3.mul(b3, b3), k3.one()));
  }
  CHECK(split);
}

TEST_CASE("germ divisors normalise") {
  GermDivisor d({DivisorPart{1, P("x*(x+y)")}, DivisorPart{rat(1, 2), P("x")}});
  CHECK(d.parts().size() == 2);
  CHECK(d.coefficient_of(P("x")) == rat(3, 2));
  CHECK(d.coefficient_of(P("x+y")) == 1);
  CHECK(d.multiplicity() == rat(5, 2));
  CHECK(d.effective());
  GermDivisor e({DivisorPart{1, P("x^2")}});
  CHECK(e.coefficient_of(P("x")) == 2);
  // unit factors are dropped
  GermDivisor u({DivisorPart{1, P("x*(1+y)")}});
  CHECK(u.parts().size() == 1);
  CHECK(u.multiplicity() == 1);
  CHECK_THROWS_AS(GermDivisor({DivisorPart{1, P("1+x")}}), InputError);
  CHECK_THROWS_AS(GermDivisor({DivisorPart{1, Poly2()}}), InputError);
  CHECK_THROWS_AS(GermDivisor({DivisorPart{1, P("x^70")}}), InputError);
  GermDivisor z({DivisorPart{0, P("x")}, DivisorPart{1, P("y")}});
  CHECK(z.parts().size() == 1);
  GermDivisor zk({DivisorPart{0, P("x")}, DivisorPart{1, P("y")}}, kDefaultDegreeCap, true);
  CHECK(zk.parts().size() == 2);
  CHECK((d + d.scaled(-1)).empty());
}

TEST_CASE("property: print and parse round trip") {
  std::mt19937_64 rng(20261017);
  for (int i = 0; i < 300; ++i) {
    Poly2 f = random_poly(rng);
    CHECK(parse_poly(f.to_string()) == f);
  }
}

TEST_CASE("property: substitution composes") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    Poly2 f = random_poly(rng, 4, 3), a = random_poly(rng, 2, 2), b = random_poly(rng, 2, 2);
    Poly2 c = random_poly(rng, 2, 2), d = random_poly(rng, 2, 2);
    Poly2 lhs = substitute(substitute(f, a, b), c, d);
    Poly2 rhs = substitute(f, substitute(a, c, d), substitute(b, c, d));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("property: gcd divides and squarefree product recovers") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    Poly2 a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    Poly2 g = gcd(a * c, b * c);
    CHECK(divide_exact(a * c, g).has_value());
    CHECK(divide_exact(b * c, g).has_value());
    CHECK(divide_exact(g, normalize_associate(c)).has_value());
    Poly2 f = a * a * c;
    Poly2 prod(1);
    for (const auto& [h, e] : squarefree_decomposition(f)) prod = prod * h.pow(static_cast<unsigned>(e));
    CHECK(normalize_associate(prod) == normalize_associate(f));
  }
}
