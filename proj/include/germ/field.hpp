#pragma once

// Towers of simple algebraic extensions of the rationals, computed by
// dynamic evaluation: every modulus is squarefree but need not be
// irreducible, so a level is a finite product of fields. Any operation that
// would have to divide by a zero divisor throws Split instead, carrying the
// factorisation of the offending modulus; the caller restarts on each factor.

#include "germ/rational.hpp"

#include <cstddef>
#include <exception>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace germ {

// Element of one tower level. Level 0 uses `q`; level k > 0 uses `c`, a
// polynomial in the level-k generator with coefficients in level k-1, reduced
// modulo the level's modulus and without trailing zeros.
struct Num {
  Rational q;
  std::vector<Num> c;
};

int compare(const Num& a, const Num& b);

// Dense univariate polynomial, low degree first, no trailing structural zeros.
struct UPoly {
  std::vector<Num> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

class Tower {
 public:
  struct Level {
    std::string name;
    UPoly modulus;  // monic, squarefree, over the previous level
  };

  static TowerPtr rationals();

  std::size_t height() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_.at(i); }
  // Number of ring homomorphisms into the complex numbers of the top level.
  std::size_t conjugates() const;

  // Appends a level generated by a root of `poly` (coefficients in the current
  // top level). The radical of `poly` is taken, so the modulus is squarefree.
  static TowerPtr extend(const TowerPtr& base, const UPoly& poly, std::string name);

  // Replaces the modulus at index `level` by a monic factor of it and
  // reduces every higher modulus accordingly.
  static TowerPtr specialise(const TowerPtr& base, std::size_t level, const UPoly& factor);

 private:
  friend class Specialisation;
  std::vector<Level> levels_;
};

// Thrown when a computation meets a zero divisor. The modulus of the level
// with index `level` equals first*second, both monic, coprime, and ordered.
struct Split : std::exception {
  std::size_t level = 0;
  UPoly first, second;
  const char* what() const noexcept override { return "zero divisor split"; }
};

class Field {
 public:
  Field() : Field(Tower::rationals(), 0) {}
  Field(TowerPtr tower, std::size_t level);

  static Field top(const TowerPtr& tower) { return Field(tower, tower->height()); }

  std::size_t level() const { return level_; }
  const TowerPtr& tower() const { return tower_; }
  Field base() const { return Field(tower_, level_ - 1); }
  std::size_t conjugates() const;

  Num zero() const;
  Num one() const;
  Num from(const Rational& q) const;
  Num from(long v) const { return from(Rational(v)); }
  Num generator() const;  // root adjoined at this level; level > 0

  bool is_structural_zero(const Num& a) const;
  // Zero test in the product-of-fields sense: true when a vanishes in every
  // component, false when it vanishes in none, throws Split otherwise.
  bool is_zero(const Num& a) const;
  bool equal(const Num& a, const Num& b) const { return compare(a, b) == 0; }
  // Defined only at level 0.
  const Rational& as_rational(const Num& a) const { return a.q; }
  bool is_rational(const Num& a) const;  // structurally lies in level 0
  Rational to_rational(const Num& a) const;

  Num add(const Num& a, const Num& b) const;
  Num sub(const Num& a, const Num& b) const;
  Num neg(const Num& a) const;
  Num mul(const Num& a, const Num& b) const;
  Num inv(const Num& a) const;  // throws Split, or InputError on 0
  Num div(const Num& a, const Num& b) const { return mul(a, inv(b)); }
  Num pow(const Num& a, unsigned e) const;

  // Polynomials with coefficients in this level.
  UPoly poly(std::vector<Num> coeffs) const;
  UPoly poly_add(const UPoly& a, const UPoly& b) const;
  UPoly poly_sub(const UPoly& a, const UPoly& b) const;
  UPoly poly_mul(const UPoly& a, const UPoly& b) const;
  UPoly poly_scale(const UPoly& a, const Num& s) const;
  UPoly poly_derivative(const UPoly& a) const;
  UPoly poly_monic(const UPoly& a) const;
  std::pair<UPoly, UPoly> poly_divmod(const UPoly& a, const UPoly& b) const;
  UPoly poly_rem_monic(const UPoly& a, const UPoly& m) const;
  UPoly poly_gcd(const UPoly& a, const UPoly& b) const;  // monic
  Num poly_eval(const UPoly& a, const Num& x) const;
  // Removes leading coefficients that test as zero (may throw Split).
  UPoly poly_trim(const UPoly& a) const;

  std::string format(const Num& a) const;
  std::string format(const UPoly& a, const std::string& var = "z") const;

 private:
  const UPoly& modulus() const { return tower_->level(level_ - 1).modulus; }
  void trim(UPoly& p) const;
  void trim(std::vector<Num>& c) const;

  TowerPtr tower_;
  std::size_t level_;
};

// Squarefree decomposition over a tower level (Yun). Factors are monic,
// pairwise coprime and squarefree; the product of factor^exponent equals the
// input up to its leading coefficient. May throw Split.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const Field& f, const UPoly& p);

// Maps elements of `field` into the tower obtained by replacing the modulus
// at index `level` with `factor`.
class Specialisation {
 public:
  Specialisation(TowerPtr from, std::size_t level, const UPoly& factor);
  const TowerPtr& target() const { return to_; }
  Num map(const Num& a, std::size_t at_level) const;
  UPoly map(const UPoly& p, std::size_t at_level) const;

 private:
  TowerPtr from_, to_;
  std::size_t level_;
};

}  // namespace germ
