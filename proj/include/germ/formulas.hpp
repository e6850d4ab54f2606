#pragma once

// Closed-form lct values and bounds for branches meeting a smooth curve, the
// weight search upper bound, and toric mld of cyclic quotient singularities.

#include "germ/divisor.hpp"
#include "germ/poly2.hpp"
#include "germ/rational.hpp"
#include "germ/resolve.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace germ {

struct BranchProfile {
  Rational m;                 // multiplicity of B
  Rational I;                 // (B . C)
  std::optional<PuiseuxPair> pair;
  Rational lambda = 1;
  Rational s = 1;
  Rational t = 1;
};

// Profile of an irreducible germ f against a smooth curve c.
BranchProfile branch_profile(const Poly2& f, const Poly2& c);

// lct of x^n (x^m1 + y^m2)^k at the origin.
Rational prop33_lct(long n, long k, long m1, long m2);

// Returns nullopt when n is infinite (every positive I is admissible).
std::optional<std::vector<long>> admissible_I(const PuiseuxPair& p);

// lct(0; sB + tC) for a branch B with first pair p and smooth C with (B . C) = I.
Rational prop35_lct(const PuiseuxPair& p, long I, const Rational& s, const Rational& t);

struct BoundResult {
  Rational value;
  std::string hypothesis;  // which hypothesis made the bound applicable
};

// Lower bound for lct(lambda B; C), B a branch with first pair p and (B . C) = I.
BoundResult cor38_bound(const PuiseuxPair& p, const Rational& I, const Rational& lambda);
// min{1, 1 + m/I - m}
Rational thm18_bound(const Rational& m, const Rational& I);
// Same value, on the domain m/I >= m - 1/2.
Rational thmA2_bound(const Rational& m, const Rational& I);
// lct(lambda (x^m + y^I); x) for coprime m < I and lambda m <= 1 <= lambda I.
Rational example39_family(long m, long I, const Rational& lambda);

// (x, y) -> (x_image, y_image); must fix the origin with invertible linear part.
struct CoordinateChange {
  Poly2 x_image;
  Poly2 y_image;
};

struct VarchenkoResult {
  LctResult result;          // Upper, or Exact when it meets the resolution value
  WeightVector weight;
  std::size_t change = 0;    // 0 = identity, i = coord_changes[i-1]
  std::optional<Rational> oracle;
};

VarchenkoResult varchenko_upper_bound(const GermDivisor& b, int weight_bound,
                                      const std::vector<CoordinateChange>& coord_changes,
                                      bool consult_oracle = true, const ResolveOptions& opts = {});

struct CyclicQuotient {
  long r = 1;
  std::vector<long> weights;
};

Rational cyclic_quotient_mld(const CyclicQuotient& q);

}  // namespace germ
