#pragma once

// Seeded random germ corpora shared by the sweep driver and the test suites.

#include "germ/divisor.hpp"
#include "germ/lctpoly.hpp"
#include "germ/poly2.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace germ {

struct CorpusCase {
  std::uint64_t seed = 0;
  GermDivisor b;       // effective, multiplicity <= 1
  Poly2 c;             // smooth at the origin, not a component of b
  Rational m;          // multiplicity of b
  Rational I;          // (b . c)
};

// Random vanishing germ of total degree <= max_degree.
Poly2 random_germ(std::mt19937_64& rng, int max_degree = 5);

// Random smooth germ through the origin.
Poly2 random_smooth_curve(std::mt19937_64& rng);

std::vector<CorpusCase> multiplicity_one_corpus(std::uint64_t seed, std::size_t count);

// Random instance with every (m_i, I_i) realizable by realize_instance.
LctPolytopeInstance random_polytope_instance(std::mt19937_64& rng);

// Branch with multiplicity m and (f . x) = I, distinct for distinct variants.
Poly2 realize_branch(long m, long I, long variant);

// Divisor sum b_i * f_i with the curve C = (x = 0).
GermDivisor realize_instance(const LctPolytopeInstance& inst);

}  // namespace germ
