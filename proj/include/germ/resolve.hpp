#pragma once

// Embedded resolution of plane curve germs by point blow-ups, and the exact
// invariants computed from it.

#include "germ/divisor.hpp"
#include "germ/poly2.hpp"
#include "germ/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace germ {

struct ResolveOptions {
  bool force_root_blowup = false;
  int extra_blowups = 0;       // additional blow-ups at SNC points, chosen from `seed`
  std::uint64_t seed = 0;
  int degree_cap = kDefaultDegreeCap;
  int max_blowups = 20000;
};

// One exceptional curve, standing for `degree` Galois-conjugate curves with
// identical numerical data.
struct ExceptionalRecord {
  int id = 0;                  // 1-based, in creation order
  int parent = 0;              // exceptional carrying the blown-up point, 0 at the root
  long k = 0;                  // coefficient in K_Y - pi^* K_X
  std::vector<long> ord;       // order of each tracked part along this curve
  std::vector<int> mult;       // multiplicity of each strict transform at the blown-up point
  std::vector<int> through;    // exceptional curves through the blown-up point
  std::size_t degree = 1;
  bool extra = false;          // created by an optional extra blow-up
};

// A point of the final model where at least one strict transform passes.
struct TerminalRecord {
  int parent = 0;
  std::vector<int> parts;
  std::vector<int> exceptionals;
  std::size_t degree = 1;
};

struct ResolutionTree {
  std::vector<Poly2> parts;
  std::vector<ExceptionalRecord> exceptionals;
  std::vector<TerminalRecord> terminals;
};

// Parts must be nonzero and vanish at the origin.
ResolutionTree log_resolution(const std::vector<Poly2>& parts, const ResolveOptions& opts = {});

enum class ResultKind { Exact, Lower, Upper };
std::string to_string(ResultKind k);

struct Witness {
  std::string label;  // "E<id>", "strict:<poly>" or "fiber"
  int node = 0;       // exceptional id, 0 for strict transforms
  long k = 0;
  std::vector<long> ord;
};

struct LctResult {
  Rational value;
  ResultKind kind = ResultKind::Exact;
  Witness witness;
};

struct MldResult {
  Rational value;
  ResultKind kind = ResultKind::Exact;
  Witness witness;
};

// lct(X, B; C). Throws NotLcError when (X, B) is not lc, InputError when C is
// zero, not effective, or shares a component with B through the origin.
LctResult lct_exact(const GermDivisor& b, const GermDivisor& c, const ResolveOptions& opts = {});

// Minimum of a(E, X, B) over exceptional curves (the blow-up of the point
// itself included) and 1 - b_i over the components of B.
MldResult mld_germ(const GermDivisor& b, const ResolveOptions& opts = {});

// Germs of a fibration over a curve, given as the projection to x: the fiber
// through each point is (x = 0). Each entry is the boundary near one point of
// the special fiber, in coordinates centered there.
struct FiberResult {
  Rational value;
  ResultKind kind = ResultKind::Exact;
  Witness witness;
  std::size_t point = 0;             // index of the fiber point carrying the witness
  Rational fiber_coefficient;        // coefficient of the fiber component in B
  bool generic_fiber_effective = true;
};

FiberResult lct_relative_fiber(const std::vector<GermDivisor>& points, const ResolveOptions& opts = {});
FiberResult mld_relative_fiber(const std::vector<GermDivisor>& points, const ResolveOptions& opts = {});

long intersection_multiplicity(const Poly2& f, const Poly2& g, const ResolveOptions& opts = {});
long branch_count(const Poly2& f, const ResolveOptions& opts = {});

struct PuiseuxPair {
  long m = 1;
  std::optional<long> n;  // empty means infinity
};

PuiseuxPair first_puiseux_pair(const Poly2& f, const ResolveOptions& opts = {});
std::string to_string(const PuiseuxPair& p);

}  // namespace germ
