#pragma once

#include "germ/poly2.hpp"
#include "germ/rational.hpp"

#include <string>
#include <vector>

namespace germ {

constexpr int kDefaultDegreeCap = 64;

struct DivisorPart {
  Rational coeff;
  Poly2 poly;
};

// A formal R-divisor sum coeff_i * (poly_i = 0) at the origin. Construction
// normalizes: each equation is split into squarefree factors, shared factors
// are merged with summed coefficients, factors that are units at the origin
// are dropped, and parts are sorted.
class GermDivisor {
 public:
  GermDivisor() = default;
  explicit GermDivisor(const std::vector<DivisorPart>& raw, int degree_cap = kDefaultDegreeCap,
                       bool keep_zero = false);
  static GermDivisor single(const Rational& c, const Poly2& f, int degree_cap = kDefaultDegreeCap);

  const std::vector<DivisorPart>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool effective() const;

  Rational multiplicity() const;
  Rational weighted_multiplicity(const WeightVector& w) const;
  // Coefficient of the component defined by f (after normalization), 0 if absent.
  Rational coefficient_of(const Poly2& f) const;

  GermDivisor scaled(const Rational& c) const;
  friend GermDivisor operator+(const GermDivisor& a, const GermDivisor& b);

  std::string to_string() const;

 private:
  std::vector<DivisorPart> parts_;
};

// Splits a list of weighted polynomials into pairwise coprime squarefree
// factors. Exponents multiply coefficients; zero-coefficient factors are kept
// only when keep_zero is set. Factors not vanishing at the origin are dropped.
std::vector<DivisorPart> coprime_refinement(const std::vector<DivisorPart>& raw, bool keep_zero);

}  // namespace germ
