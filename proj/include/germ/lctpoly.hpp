#pragma once

// Vertices of two-constraint polytopes, convex combinations of lct values,
// and a certifier replaying the polytope argument for branches against a
// smooth curve.

#include "germ/divisor.hpp"
#include "germ/rational.hpp"
#include "germ/resolve.hpp"

#include <string>
#include <utility>
#include <vector>

namespace germ {

using RVector = std::vector<Rational>;

// Vertices of {t >= 0 : <n1, t> = b1, <n2, t> = b2}, sorted lexicographically.
std::vector<RVector> vertex_enumeration(const RVector& n1, const RVector& n2, const Rational& b1, const Rational& b2);

Rational convexity_bound(const std::vector<std::pair<GermDivisor, Rational>>& profiles, const GermDivisor& c,
                         const ResolveOptions& opts = {});

struct PolytopeComponent {
  long m = 1;   // multiplicity of the branch
  long I = 1;   // intersection number with C
  Rational b;   // coefficient
};

struct LctPolytopeInstance {
  std::vector<PolytopeComponent> components;
  Rational m() const;
  Rational I() const;
};

struct VertexCertificate {
  RVector point;
  std::string label;  // "I<=1", "single", "case-A", "case-B"
  Rational value;
};

struct Certificate {
  Rational value;   // certified lower bound for lct(B; C)
  Rational target;  // min{1, 1 + m/I - m}
  std::vector<VertexCertificate> vertices;
};

Certificate thm18_certify(const LctPolytopeInstance& inst);

}  // namespace germ
