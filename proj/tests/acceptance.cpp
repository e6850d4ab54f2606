// One PASS/FAIL line per acceptance criterion. Exit status is non-zero when
// any criterion fails.

#include "germ/corpus.hpp"
#include "germ/errors.hpp"
#include "germ/formulas.hpp"
#include "germ/lctpoly.hpp"
#include "germ/newton.hpp"
#include "germ/resolve.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace germ;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream notes;
  long checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) notes << "first failure: " << what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Poly2 P(const std::string& s) { return parse_poly(s); }

const std::uint64_t kCorpusSeed = 20260101;

const std::vector<CorpusCase>& corpus() {
  static const std::vector<CorpusCase> c = multiplicity_one_corpus(kCorpusSeed, 200);
  return c;
}

void fiber_tangency(Outcome& o) {
  auto t0 = Clock::now();
  for (const Rational& s : {rat(0), rat(1, 5), rat(1, 2)}) {
    GermDivisor b({DivisorPart{1, P("x-y^2")}, DivisorPart{-s, P("x")}});
    Rational l = lct_relative_fiber({b}).value;
    Rational m = mld_relative_fiber({b}).value;
    o.expect(l == rat(1, 2) + s, "lct at s=" + to_string(s) + " is " + to_string(l));
    o.expect(m == 1 + s, "mld at s=" + to_string(s) + " is " + to_string(m));
  }
  double t = seconds_since(t0);
  o.expect(t < 1.0, "runtime " + std::to_string(t) + " s");
}

void fiber_cusp(Outcome& o) {
  auto t0 = Clock::now();
  GermDivisor b({DivisorPart{1, P("x^2+y^3")}, DivisorPart{-1, P("y")}});
  Rational l = lct_relative_fiber({b}).value;
  o.expect(l == rat(1, 3), "value " + to_string(l));
  double t = seconds_since(t0);
  o.expect(t < 1.0, "runtime " + std::to_string(t) + " s");
}

void sharpness(Outcome& o) {
  for (auto [m, I] : std::vector<std::pair<long, long>>{{1, 2}, {2, 3}, {2, 5}, {3, 4}, {3, 5}}) {
    Poly2 f = Poly2::x().pow(static_cast<unsigned>(m)) + Poly2::y().pow(static_cast<unsigned>(I));
    // admissible lambda: lambda*m <= 1 <= lambda*I
    for (long j = 0; j <= 6; ++j) {
      Rational lambda = rat(1, I) + (rat(1, m) - rat(1, I)) * rat(j, 6);
      Rational oracle = lct_exact(GermDivisor::single(lambda, f), GermDivisor::single(1, Poly2::x())).value;
      Rational expected = 1 + rat(m, I) - lambda * m;
      std::string tag = "(m,I)=(" + std::to_string(m) + "," + std::to_string(I) + ") lambda=" + to_string(lambda);
      o.expect(oracle == expected, tag + " oracle " + to_string(oracle));
      o.expect(example39_family(m, I, lambda) == oracle, tag + " family formula");
    }
  }
  // lambda = 1 is admissible only for (1, 2); there the bound is attained.
  Rational at_one = lct_exact(GermDivisor::single(1, P("x+y^2")), GermDivisor::single(1, Poly2::x())).value;
  o.expect(at_one == thm18_bound(1, 2), "bound at lambda=1 is " + to_string(thm18_bound(1, 2)) + ", oracle " + to_string(at_one));
  o.expect(at_one == rat(1, 2), "value at lambda=1");
}

void monomial_binomial_grid(Outcome& o) {
  auto t0 = Clock::now();
  long cases = 0;
  for (long n = 1; n <= 3; ++n)
    for (long k = 1; k <= 3; ++k)
      for (long m1 = 1; m1 <= 4; ++m1)
        for (long m2 = 1; m2 <= 4; ++m2) {
          Poly2 g = Poly2::x().pow(static_cast<unsigned>(m1)) + Poly2::y().pow(static_cast<unsigned>(m2));
          Rational oracle = lct_exact(GermDivisor(), GermDivisor({DivisorPart{n, Poly2::x()}, DivisorPart{k, g}})).value;
          Rational formula = prop33_lct(n, k, m1, m2);
          o.expect(formula == oracle, "(n,k,m1,m2)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                          std::to_string(m1) + "," + std::to_string(m2) + ")");
          ++cases;
        }
  o.expect(cases == 144, "case count");
  double t = seconds_since(t0);
  o.expect(t < 120.0, "runtime " + std::to_string(t) + " s");
}

void pair_grid(Outcome& o) {
  const std::vector<Rational> values{rat(1, 2), rat(1), rat(2)};
  for (long n = 3; n <= 7; ++n) {
    for (long m = 2; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      Poly2 b = Poly2::x().pow(static_cast<unsigned>(m)) + Poly2::y().pow(static_cast<unsigned>(n));
      std::vector<Poly2> curves{Poly2::x(), Poly2::y()};
      for (long p = 1; p * m <= n; ++p) curves.push_back(Poly2::x() - Poly2::y().pow(static_cast<unsigned>(p)));
      for (const Poly2& c : curves) {
        long I = oracle::quotient_dimension(b, c);
        for (const auto& s : values) {
          for (const auto& t : values) {
            Rational oracle = lct_exact(GermDivisor(), GermDivisor({DivisorPart{s, b}, DivisorPart{t, c}})).value;
            Rational formula = prop35_lct(PuiseuxPair{m, n}, I, s, t);
            o.expect(formula == oracle, "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ") C=" + c.to_string() +
                                            " s=" + to_string(s) + " t=" + to_string(t));
          }
        }
      }
    }
  }
}

// m and I recomputed from the parts with the quotient-dimension oracle.
std::pair<Rational, Rational> m_and_I(const CorpusCase& cs) {
  Rational m = 0, I = 0;
  for (const auto& p : cs.b.parts()) {
    m += p.coeff * multiplicity_at_origin(p.poly);
    I += p.coeff * oracle::quotient_dimension(p.poly, cs.c);
  }
  return {m, I};
}

void multiplicity_one_bound(Outcome& o) {
  o.expect(corpus().size() >= 200, "corpus size");
  for (const auto& cs : corpus()) {
    auto [m, I] = m_and_I(cs);
    std::string tag = "seed " + std::to_string(cs.seed);
    o.expect(m > 0 && m <= 1, tag + " multiplicity " + to_string(m));
    o.expect(multiplicity_at_origin(cs.c) == 1, tag + " C smooth");
    o.expect(cs.b.effective(), tag + " effective");
    Rational oracle = lct_exact(cs.b, GermDivisor::single(1, cs.c)).value;
    Rational bound = min(Rational(1), 1 + m / I - m);
    o.expect(oracle >= bound, tag + " oracle " + to_string(oracle) + " < " + to_string(bound));
    if (I <= 2) o.expect(oracle >= rat(1, 2), tag + " I<=2 but oracle " + to_string(oracle));
  }
}

void newton_suite(Outcome& o) {
  for (const auto& cs : corpus()) {
    for (const GermDivisor& d : {cs.b, cs.b + GermDivisor::single(1, cs.c)}) {
      NewtonData n = newton_data(d);
      Rational oracle = lct_exact(GermDivisor(), d).value;
      Rational lower = min(1 / n.nm, n.nd);
      std::string tag = "seed " + std::to_string(cs.seed) + " " + d.to_string();
      o.expect(lower <= oracle, tag + " lower");
      o.expect(oracle <= n.nd, tag + " upper");
      o.expect(n.nd * n.nm <= 2, tag + " nd*nm");
      if (n.nd * n.nm <= 1) o.expect(oracle == n.nd, tag + " exactness");
      LctBounds b = lct_newton_bounds(n);
      o.expect(b.lower == lower && b.upper == n.nd && b.exact == (n.nd * n.nm <= 1), tag + " reported bounds");
    }
  }
}

void toric(Outcome& o) {
  for (long m = 1; m <= 5; ++m) {
    o.expect(cyclic_quotient_mld(CyclicQuotient{4 * m, {1, 2 * m - 1}}) == rat(1, 2), "1/4m(1,2m-1) m=" + std::to_string(m));
    o.expect(cyclic_quotient_mld(CyclicQuotient{2 * m + 1, {1, 1, m}}) == rat(m + 2, 2 * m + 1),
             "1/(2m+1)(1,1,m) m=" + std::to_string(m));
  }
}

struct BranchData {
  std::string pair;
  Rational coeff;
  long I = 0;
};

// Component invariants: first pairs, coefficients, intersections with C and
// pairwise intersections. nullopt when some component is not a single branch.
std::optional<std::vector<std::string>> invariants(const GermDivisor& b, const Poly2& c) {
  std::vector<std::string> out;
  const auto& parts = b.parts();
  for (const auto& p : parts) {
    if (branch_count(p.poly) != 1) return std::nullopt;
    out.push_back(to_string(first_puiseux_pair(p.poly)) + "|" + to_string(p.coeff) + "|" +
                  std::to_string(oracle::quotient_dimension(p.poly, c)));
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      out.push_back(std::to_string(oracle::quotient_dimension(parts[i].poly, parts[j].poly)));
  return out;
}

void convexity_and_invariance(Outcome& o) {
  const auto& cs = corpus();
  long blends = 0;
  for (std::size_t i = 0; i + 1 < cs.size(); i += 2) {
    const GermDivisor& b1 = cs[i].b;
    const GermDivisor& b2 = cs[i + 1].b;
    GermDivisor c = GermDivisor::single(1, cs[i].c);
    bool shared = false;
    for (const auto& p : b2.parts()) shared = shared || gcd(p.poly, cs[i].c).vanishes_at_origin();
    if (shared) continue;
    Rational l1 = lct_exact(b1, c).value, l2 = lct_exact(b2, c).value;
    for (const Rational& lambda : {rat(1, 4), rat(1, 2), rat(3, 4)}) {
      GermDivisor blend = b1.scaled(lambda) + b2.scaled(1 - lambda);
      Rational lb = lct_exact(blend, c).value;
      o.expect(lb >= lambda * l1 + (1 - lambda) * l2, "blend of seeds " + std::to_string(cs[i].seed) + ", " +
                                                          std::to_string(cs[i + 1].seed) + " lambda=" + to_string(lambda));
      o.expect(convexity_bound({{b1, lambda}, {b2, 1 - lambda}}, c) <= lb, "convexity_bound soundness");
      ++blends;
    }
  }
  // curated blends
  GermDivisor cusp = GermDivisor::single(rat(1, 2), P("x^2+y^3"));
  GermDivisor line = GermDivisor::single(rat(1, 2), P("x"));
  for (const Rational& lambda : {rat(1, 4), rat(1, 2), rat(3, 4)}) {
    GermDivisor c = GermDivisor::single(1, P("y"));
    Rational lb = lct_exact(cusp.scaled(lambda) + line.scaled(1 - lambda), c).value;
    o.expect(lb >= lambda * lct_exact(cusp, c).value + (1 - lambda) * lct_exact(line, c).value, "curated blend");
    ++blends;
  }
  o.expect(blends >= 100, "blend count " + std::to_string(blends));

  // curated equisingular pairs
  const std::vector<std::tuple<std::string, std::string, std::string>> curated{
      {"x^2+y^3", "x^2+y^3+x*y^2", "x"},
      {"x^2+y^3", "x^2+y^3+y^4", "y"},
      {"(x-y^2)^2-y^5", "(x-y^2)^2-y^5+x^3*y", "x"},
      {"y^3-x^7", "y^3-x^7+x^5*y", "x-y^3"},
  };
  long compared = 0;
  for (const auto& [f, g, c] : curated) {
    GermDivisor bf = GermDivisor::single(rat(1, 3), P(f)), bg = GermDivisor::single(rat(1, 3), P(g));
    auto inv_f = invariants(bf, P(c)), inv_g = invariants(bg, P(c));
    o.expect(inv_f && inv_g && *inv_f == *inv_g, "curated invariants " + f + " / " + g);
    o.expect(lct_exact(bf, GermDivisor::single(1, P(c))).value == lct_exact(bg, GermDivisor::single(1, P(c))).value,
             "curated lct " + f + " / " + g);
    ++compared;
  }
  // random perturbations by high-order terms
  std::mt19937_64 rng(kCorpusSeed + 9);
  for (const auto& k : cs) {
    std::vector<DivisorPart> raw;
    for (const auto& p : k.b.parts()) {
      long d = 10 + static_cast<long>(rng() % 3);
      long a = static_cast<long>(rng() % static_cast<std::uint64_t>(d + 1));
      raw.push_back(DivisorPart{p.coeff, p.poly + Poly2::monomial(rat(1 + static_cast<long>(rng() % 3)), static_cast<int>(a),
                                                                   static_cast<int>(d - a))});
    }
    GermDivisor perturbed(raw);
    if (perturbed.parts().size() != k.b.parts().size()) continue;
    auto inv_a = invariants(k.b, k.c), inv_b = invariants(perturbed, k.c);
    if (!inv_a || !inv_b || *inv_a != *inv_b) continue;
    Rational la = lct_exact(k.b, GermDivisor::single(1, k.c)).value;
    Rational lb = lct_exact(perturbed, GermDivisor::single(1, k.c)).value;
    o.expect(la == lb, "perturbed seed " + std::to_string(k.seed) + ": " + to_string(la) + " vs " + to_string(lb));
    ++compared;
  }
  o.expect(compared >= 50, "invariance comparisons " + std::to_string(compared));
}

std::size_t nonzeros(const RVector& v) {
  std::size_t n = 0;
  for (const auto& x : v) n += x != 0;
  return n;
}

void certifier(Outcome& o) {
  for (std::uint64_t s = kCorpusSeed; s < kCorpusSeed + 50; ++s) {
    std::mt19937_64 rng(s);
    LctPolytopeInstance inst = random_polytope_instance(rng);
    GermDivisor b = realize_instance(inst);
    std::string tag = "instance seed " + std::to_string(s);
    Rational m = 0, I = 0;
    for (const auto& p : b.parts()) {
      m += p.coeff * multiplicity_at_origin(p.poly);
      I += p.coeff * oracle::quotient_dimension(p.poly, Poly2::x());
    }
    o.expect(m == inst.m() && I == inst.I(), tag + " realization");
    Certificate cert = thm18_certify(inst);
    Rational oracle = lct_exact(b, GermDivisor::single(1, Poly2::x())).value;
    o.expect(cert.value >= thm18_bound(m, I), tag + " certificate below bound");
    o.expect(cert.value <= oracle, tag + " certificate " + to_string(cert.value) + " above oracle " + to_string(oracle));
    for (const auto& v : cert.vertices) o.expect(nonzeros(v.point) <= 2, tag + " vertex support");
  }
  std::mt19937_64 rng(kCorpusSeed + 1);
  for (int i = 0; i < 500; ++i) {
    std::size_t n = 1 + rng() % 6;
    RVector n1, n2;
    for (std::size_t k = 0; k < n; ++k) {
      n1.push_back(rat(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 3)));
      n2.push_back(rat(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 3)));
    }
    Rational b1 = rat(static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 2));
    Rational b2 = rat(static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 2));
    auto got = vertex_enumeration(n1, n2, b1, b2);
    o.expect(got == oracle::brute_vertices({n1, n2}, {b1, b2}), "enumeration " + std::to_string(i) + " vs basic solutions");
    for (const auto& v : got) o.expect(nonzeros(v) <= 2, "enumeration support");
  }
}

void self_consistency(Outcome& o) {
  const auto& cs = corpus();
  for (std::size_t i = 0; i < cs.size(); i += 4) {
    const auto& k = cs[i];
    GermDivisor c = GermDivisor::single(1, k.c);
    Rational base = lct_exact(k.b, c).value;
    Rational mbase = mld_germ(k.b).value;
    for (int extra = 1; extra <= 3; ++extra) {
      ResolveOptions opts;
      opts.extra_blowups = extra;
      opts.seed = k.seed * 7 + static_cast<std::uint64_t>(extra);
      std::string tag = "seed " + std::to_string(k.seed) + " extra " + std::to_string(extra);
      o.expect(lct_exact(k.b, c, opts).value == base, tag + " lct");
      o.expect(mld_germ(k.b, opts).value == mbase, tag + " mld");
    }
  }
  GermDivisor fb({DivisorPart{1, P("x^2+y^3")}, DivisorPart{-1, P("y")}});
  for (int extra = 1; extra <= 3; ++extra) {
    ResolveOptions opts;
    opts.extra_blowups = extra;
    opts.seed = static_cast<std::uint64_t>(extra);
    o.expect(lct_relative_fiber({fb}, opts).value == rat(1, 3), "fiber lct with extra blow-ups");
  }

  std::vector<Poly2> polys;
  for (const char* s : {"x", "y", "x+y", "x-y", "y-x^2", "x^2+y^3", "x^2-y^3", "x^3+y^2", "y^2-x^3+x^4", "x^2+y^2",
                        "x^2-y^4", "x*y+x^3+y^3", "(x-y^2)^2-y^5", "x^2*y+y^4", "y^3-x^5", "x^4+y^4+x^2*y^2",
                        "x^3-y^3+x*y^4", "y^2-x^5+x^2*y^3", "x*y*(x-y)", "x^5+y^6"}) {
    polys.push_back(P(s));
  }
  std::mt19937_64 rng(kCorpusSeed + 2);
  while (polys.size() < 36) {
    Poly2 f = random_germ(rng, 4);
    if (f.total_degree() <= 6) polys.push_back(f);
  }
  long pairs = 0;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (gcd(polys[i], polys[j]).vanishes_at_origin()) continue;
      long expected = oracle::quotient_dimension(polys[i], polys[j]);
      long got = intersection_multiplicity(polys[i], polys[j]);
      o.expect(expected >= 0 && got == expected,
               "(" + polys[i].to_string() + ", " + polys[j].to_string() + "): " + std::to_string(got) + " vs " +
                   std::to_string(expected));
      ++pairs;
    }
  }
  o.expect(pairs >= 400, "pair count " + std::to_string(pairs));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"fiber lct and mld over a tangency, s in {0, 1/5, 1/2}", fiber_tangency},
      {"fiber lct of a cusp with a negative transversal part", fiber_cusp},
      {"sharpness family lambda(x^m+y^I) against x", sharpness},
      {"x^n(x^m1+y^m2)^k formula grid, 144 cases", monomial_binomial_grid},
      {"sB+tC formula grid over coprime pairs up to 7", pair_grid},
      {"multiplicity <= 1 lower bound on 200 random germs", multiplicity_one_bound},
      {"Newton distance and multiplicity bounds on the same corpus", newton_suite},
      {"cyclic quotient mld values", toric},
      {"convexity and equisingular invariance", convexity_and_invariance},
      {"certifier soundness and two-nonzero vertices", certifier},
      {"oracle self-consistency: extra blow-ups and intersection numbers", self_consistency},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes << "exception: " << e.what();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(t0));
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << o.checks
              << " checks, " << timing << ")";
    if (!o.pass) std::cout << " " << o.notes.str();
    std::cout << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
