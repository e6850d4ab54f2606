#pragma once

// Weighted blow-ups of the origin and the weight criterion for the lct.

#include "germ/divisor.hpp"
#include "germ/poly2.hpp"
#include "germ/resolve.hpp"

#include <vector>

namespace germ {

// f_w = x^s * y^t * h(x^a2, y^a1) with h homogeneous of degree d.
struct WeightedPart {
  long ord = 0;  // weighted multiplicity
  int s = 0;
  int t = 0;
  int d = 0;
  Poly2 h;       // h(z, w) written in the variables (x, y) = (z, w)
};

struct WeightedBlowupData {
  WeightVector weight;
  long k_E = 0;
  std::vector<WeightedPart> parts;  // parallel to the divisor parts
  Rational total_ord;               // sum of coeff * ord
  Rational log_discrepancy;         // 1 + k_E - total_ord
  // Restriction of the strict transform to E: p1 * P1 + p2 * P2 + G.
  Rational p1;
  Rational p2;
  std::vector<std::pair<Poly2, Rational>> g;  // pairwise coprime factors of h(z, 1) with coefficients
};

WeightedBlowupData weighted_blowup(const GermDivisor& divisor, const WeightVector& w);

struct WeightLct {
  LctResult result;  // kind Exact when the hypothesis holds, otherwise Upper
  Rational b;
  bool hypothesis = false;
  Rational axis_x;   // b * coefficient of (x = 0) in the leading form
  Rational axis_y;   // b * coefficient of (y = 0)
  Rational g_max;    // b * largest coefficient of a point of G
};

WeightLct lct_via_weight(const GermDivisor& divisor, const WeightVector& w);

}  // namespace germ
