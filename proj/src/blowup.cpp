#include "germ/blowup.hpp"

#include "germ/errors.hpp"
#include "germ/field.hpp"

#include <algorithm>

namespace germ {

namespace {

WeightedPart decompose(const Poly2& f, const WeightVector& w) {
  WeightedPart p;
  Poly2 fw = weighted_leading_term(f, w);
  p.ord = weighted_multiplicity(f, w);
  p.s = fw.degree_x();
  p.t = fw.degree_y();
  for (const auto& [e, c] : fw.terms()) {
    p.s = std::min(p.s, e.first);
    p.t = std::min(p.t, e.second);
  }
  for (const auto& [e, c] : fw.terms()) {
    int i = e.first - p.s;
    int j = e.second - p.t;
    if (i % w.a2 != 0 || j % w.a1 != 0) throw InternalError("weighted leading form is not a polynomial in x^a2, y^a1");
    p.h.add_term(c, static_cast<int>(i / w.a2), static_cast<int>(j / w.a1));
  }
  p.d = p.h.total_degree();
  return p;
}

}  // namespace

WeightedBlowupData weighted_blowup(const GermDivisor& divisor, const WeightVector& w) {
  WeightedBlowupData out;
  out.weight = w;
  out.k_E = w.a1 + w.a2 - 1;
  out.total_ord = 0;
  out.p1 = 0;
  out.p2 = 0;
  Field q;
  std::vector<std::pair<UPoly, Rational>> basis;
  for (const auto& part : divisor.parts()) {
    WeightedPart wp = decompose(part.poly, w);
    out.total_ord += part.coeff * wp.ord;
    out.p1 += part.coeff * rat(wp.s, w.a2);
    out.p2 += part.coeff * rat(wp.t, w.a1);
    if (wp.d > 0) {
      // h(z, 1) as a univariate polynomial in z
      std::vector<Num> coeffs(static_cast<std::size_t>(wp.d + 1));
      for (const auto& [e, c] : wp.h.terms()) coeffs[static_cast<std::size_t>(e.first)] = Num{c, {}};
      for (auto& [u, e] : squarefree_decomposition(q, q.poly(std::move(coeffs)))) {
        // refine against the factors collected so far
        std::vector<std::pair<UPoly, Rational>> pending{{u, part.coeff * e}};
        while (!pending.empty()) {
          auto [a, ca] = pending.back();
          pending.pop_back();
          if (a.degree() <= 0) continue;
          bool merged = false;
          for (std::size_t k = 0; k < basis.size(); ++k) {
            UPoly g = q.poly_gcd(a, basis[k].first);
            if (g.degree() <= 0) continue;
            auto [b, cb] = basis[k];
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(k));
            pending.emplace_back(g, ca + cb);
            pending.emplace_back(q.poly_divmod(b, g).first, cb);
            pending.emplace_back(q.poly_divmod(a, g).first, ca);
            merged = true;
            break;
          }
          if (!merged) basis.emplace_back(q.poly_monic(a), ca);
        }
      }
    }
    out.parts.push_back(std::move(wp));
  }
  out.log_discrepancy = 1 + out.k_E - out.total_ord;
  for (const auto& [u, c] : basis) {
    Poly2 g;
    for (std::size_t i = 0; i < u.c.size(); ++i) g.add_term(u.c[i].q, static_cast<int>(i), 0);
    out.g.emplace_back(g, c);
  }
  std::sort(out.g.begin(), out.g.end(), [](const auto& a, const auto& b) {
    return a.first.to_string() < b.first.to_string();
  });
  return out;
}

WeightLct lct_via_weight(const GermDivisor& divisor, const WeightVector& w) {
  if (!divisor.effective()) throw InputError("the weight criterion needs an effective divisor");
  WeightedBlowupData data = weighted_blowup(divisor, w);
  if (data.total_ord <= 0) throw InputError("zero weighted multiplicity");
  WeightLct out;
  out.b = Rational(w.a1 + w.a2) / data.total_ord;
  Rational sx = 0, ty = 0, gmax = 0;
  for (std::size_t i = 0; i < data.parts.size(); ++i) {
    sx += divisor.parts()[i].coeff * data.parts[i].s;
    ty += divisor.parts()[i].coeff * data.parts[i].t;
  }
  for (const auto& [g, c] : data.g) gmax = max(gmax, c);
  out.axis_x = out.b * sx;
  out.axis_y = out.b * ty;
  out.g_max = out.b * gmax;
  out.hypothesis = out.axis_x <= 1 && out.axis_y <= 1 && out.g_max <= 1;
  out.result.value = out.b;
  out.result.kind = out.hypothesis ? ResultKind::Exact : ResultKind::Upper;
  out.result.witness = Witness{"weight(" + std::to_string(w.a1) + "," + std::to_string(w.a2) + ")", 0,
                               data.k_E, {}};
  return out;
}

}  // namespace germ
