#pragma once

// Sparse bivariate polynomials over the rationals.

#include "germ/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace germ {

struct WeightVector {
  long a1 = 1;  // weight of x
  long a2 = 1;  // weight of y
  WeightVector() = default;
  WeightVector(long w1, long w2);  // throws InputError unless positive and coprime
};

class Poly2 {
 public:
  using Exp = std::pair<int, int>;  // (power of x, power of y)
  using Terms = std::map<Exp, Rational>;

  Poly2() = default;
  explicit Poly2(const Rational& c);
  static Poly2 monomial(const Rational& c, int i, int j);
  static Poly2 x() { return monomial(1, 1, 0); }
  static Poly2 y() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int i, int j) const;
  Rational constant_term() const { return coeff(0, 0); }
  bool vanishes_at_origin() const { return constant_term() == 0; }
  int total_degree() const;
  int degree_x() const;
  int degree_y() const;
  std::size_t size() const { return terms_.size(); }

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Rational& c);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Rational& c) { return a *= c; }
  friend Poly2 operator*(const Rational& c, Poly2 a) { return a *= c; }
  Poly2 operator-() const;
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

  Poly2 pow(unsigned e) const;
  void add_term(const Rational& c, int i, int j);

  // Ascending total degree, descending power of x within a degree.
  std::string to_string() const;

 private:
  Terms terms_;
};

Poly2 parse_poly(std::string_view text);

// Ring homomorphism x -> x_image, y -> y_image.
Poly2 substitute(const Poly2& f, const Poly2& x_image, const Poly2& y_image);
Poly2 swap_xy(const Poly2& f);
Poly2 derivative_x(const Poly2& f);
Poly2 derivative_y(const Poly2& f);

int multiplicity_at_origin(const Poly2& f);
long weighted_multiplicity(const Poly2& f, const WeightVector& w);
Poly2 weighted_leading_term(const Poly2& f, const WeightVector& w);
// Sum of the terms of lowest total degree.
Poly2 tangent_cone(const Poly2& f);

// Throws InputError when the total degree exceeds cap.
void check_degree(const Poly2& f, int cap);

// Unique associate: integer coefficients with gcd 1, first printed term positive.
Poly2 normalize_associate(const Poly2& f);

// gcd in Q[x,y], normalized; gcd(0,0) = 0.
Poly2 gcd(const Poly2& f, const Poly2& g);
// f/g when g divides f in Q[x,y].
std::optional<Poly2> divide_exact(const Poly2& f, const Poly2& g);
// Squarefree decomposition in Q[x,y]: normalized pairwise coprime factors with
// exponents; f equals a constant times the product of factor^exponent.
std::vector<std::pair<Poly2, int>> squarefree_decomposition(const Poly2& f);

}  // namespace germ
