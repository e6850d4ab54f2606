#include "germ/divisor.hpp"

#include "germ/errors.hpp"

#include <algorithm>
#include <deque>

namespace germ {

namespace {

bool part_less(const DivisorPart& a, const DivisorPart& b) {
  int da = a.poly.total_degree(), db = b.poly.total_degree();
  if (da != db) return da < db;
  return a.poly.to_string() < b.poly.to_string();
}

}  // namespace

std::vector<DivisorPart> coprime_refinement(const std::vector<DivisorPart>& raw, bool keep_zero) {
  std::deque<DivisorPart> work;
  for (const auto& p : raw) {
    if (p.poly.is_zero()) throw InputError("divisor component is the zero polynomial");
    for (auto& [g, e] : squarefree_decomposition(p.poly)) {
      work.push_back(DivisorPart{p.coeff * e, g});
    }
  }
  std::vector<DivisorPart> done;
  while (!work.empty()) {
    DivisorPart p = std::move(work.front());
    work.pop_front();
    if (p.poly.total_degree() <= 0) continue;
    bool merged = false;
    for (std::size_t i = 0; i < done.size(); ++i) {
      Poly2 g = gcd(p.poly, done[i].poly);
      if (g.total_degree() <= 0) continue;
      DivisorPart q = std::move(done[i]);
      done.erase(done.begin() + static_cast<std::ptrdiff_t>(i));
      if (g == q.poly && g == p.poly) {
        work.push_front(DivisorPart{p.coeff + q.coeff, g});
      } else {
        work.push_back(DivisorPart{p.coeff + q.coeff, g});
        work.push_back(DivisorPart{q.coeff, normalize_associate(*divide_exact(q.poly, g))});
        work.push_back(DivisorPart{p.coeff, normalize_associate(*divide_exact(p.poly, g))});
      }
      merged = true;
      break;
    }
    if (!merged) done.push_back(std::move(p));
  }
  std::vector<DivisorPart> out;
  for (auto& p : done) {
    if (!p.poly.vanishes_at_origin()) continue;
    if (p.coeff == 0 && !keep_zero) continue;
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), part_less);
  return out;
}

GermDivisor::GermDivisor(const std::vector<DivisorPart>& raw, int degree_cap, bool keep_zero) {
  for (const auto& p : raw) {
    if (p.poly.is_zero()) throw InputError("divisor component is the zero polynomial");
    if (!p.poly.vanishes_at_origin()) {
      throw InputError("divisor component " + p.poly.to_string() + " does not vanish at the origin");
    }
    check_degree(p.poly, degree_cap);
  }
  parts_ = coprime_refinement(raw, keep_zero);
}

GermDivisor GermDivisor::single(const Rational& c, const Poly2& f, int degree_cap) {
  return GermDivisor({DivisorPart{c, f}}, degree_cap);
}

bool GermDivisor::effective() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const DivisorPart& p) { return p.coeff >= 0; });
}

Rational GermDivisor::multiplicity() const {
  Rational m = 0;
  for (const auto& p : parts_) m += p.coeff * multiplicity_at_origin(p.poly);
  return m;
}

Rational GermDivisor::weighted_multiplicity(const WeightVector& w) const {
  Rational m = 0;
  for (const auto& p : parts_) m += p.coeff * Rational(germ::weighted_multiplicity(p.poly, w));
  return m;
}

Rational GermDivisor::coefficient_of(const Poly2& f) const {
  Poly2 g = normalize_associate(f);
  for (const auto& p : parts_) {
    if (p.poly == g) return p.coeff;
  }
  return 0;
}

GermDivisor GermDivisor::scaled(const Rational& c) const {
  std::vector<DivisorPart> raw = parts_;
  for (auto& p : raw) p.coeff *= c;
  GermDivisor out;
  out.parts_ = coprime_refinement(raw, false);
  return out;
}

GermDivisor operator+(const GermDivisor& a, const GermDivisor& b) {
  std::vector<DivisorPart> raw = a.parts_;
  raw.insert(raw.end(), b.parts_.begin(), b.parts_.end());
  GermDivisor out;
  out.parts_ = coprime_refinement(raw, false);
  return out;
}

std::string GermDivisor::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& p : parts_) {
    if (!out.empty()) out += " + ";
    out += germ::to_string(p.coeff) + "*(" + p.poly.to_string() + ")";
  }
  return out;
}

}  // namespace germ
