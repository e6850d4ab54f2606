#include "germ/lctpoly.hpp"

#include "germ/errors.hpp"
#include "germ/formulas.hpp"

#include <algorithm>

namespace germ {

std::vector<RVector> vertex_enumeration(const RVector& n1, const RVector& n2, const Rational& b1, const Rational& b2) {
  const std::size_t n = n1.size();
  if (n2.size() != n) throw InputError("constraint vectors differ in length");
  if (n == 0) throw InputError("vertex enumeration needs at least one coordinate");
  for (std::size_t i = 0; i < n; ++i) {
    if (n1[i] <= 0 || n2[i] <= 0) throw InputError("constraint vectors must be positive");
  }
  if (b1 < 0 || b2 < 0) throw InputError("right-hand sides must be non-negative");
  std::vector<RVector> out;
  if (b1 == 0 || b2 == 0) {
    if (b1 == 0 && b2 == 0) out.push_back(RVector(n, 0));
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Rational t = b1 / n1[i];
    if (n2[i] * t == b2) {
      RVector v(n, 0);
      v[i] = t;
      out.push_back(std::move(v));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational det = n1[i] * n2[j] - n1[j] * n2[i];
      if (det == 0) continue;
      Rational ti = (b1 * n2[j] - b2 * n1[j]) / det;
      Rational tj = (n1[i] * b2 - n2[i] * b1) / det;
      if (ti <= 0 || tj <= 0) continue;
      RVector v(n, 0);
      v[i] = ti;
      v[j] = tj;
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational convexity_bound(const std::vector<std::pair<GermDivisor, Rational>>& profiles, const GermDivisor& c,
                         const ResolveOptions& opts) {
  if (profiles.empty()) throw InputError("no divisors to combine");
  Rational total = 0;
  for (const auto& [b, l] : profiles) {
    if (l < 0) throw InputError("combination weights must be non-negative");
    total += l;
  }
  if (total != 1) throw InputError("combination weights must sum to 1");
  Rational out = 0;
  for (const auto& [b, l] : profiles) {
    if (l == 0) continue;
    out += l * lct_exact(b, c, opts).value;
  }
  return out;
}

Rational LctPolytopeInstance::m() const {
  Rational s = 0;
  for (const auto& c : components) s += c.b * c.m;
  return s;
}

Rational LctPolytopeInstance::I() const {
  Rational s = 0;
  for (const auto& c : components) s += c.b * c.I;
  return s;
}

namespace {

// Lower bound for lct(lambda * B_i; C) for one branch with lambda * m <= 1.
Rational single_branch(const PolytopeComponent& c, const Rational& lambda) {
  if (lambda * c.m > 1) throw InternalError("single-branch hypothesis lambda*m <= 1 fails");
  return min(Rational(1), 1 + rat(c.m, c.I) - lambda * c.m);
}

}  // namespace

Certificate thm18_certify(const LctPolytopeInstance& inst) {
  if (inst.components.empty()) throw InputError("instance has no components");
  for (const auto& c : inst.components) {
    if (c.m < 1 || c.I < 1) throw InputError("component multiplicity and intersection must be positive");
    if (c.m > c.I) throw InputError("component with m > I cannot meet a smooth curve that way");
    if (c.b < 0) throw InputError("coefficients must be non-negative");
  }
  const Rational m = inst.m();
  const Rational I = inst.I();
  if (m <= 0 || m > 1) throw InputError("total multiplicity must lie in (0, 1]", "hypothesis");
  Certificate cert;
  cert.target = thm18_bound(m, I);
  if (I <= 1) {
    cert.value = 1;
    cert.vertices.push_back(VertexCertificate{{}, "I<=1", Rational(1)});
    return cert;
  }
  RVector n1, n2;
  for (const auto& c : inst.components) {
    n1.push_back(Rational(c.m));
    n2.push_back(Rational(c.I));
  }
  // A single component is its own vertex.
  std::vector<RVector> verts = n1.size() == 1 ? std::vector<RVector>{RVector{inst.components[0].b}}
                                              : vertex_enumeration(n1, n2, m, I);
  bool have = false;
  for (const auto& v : verts) {
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) nz.push_back(i);
    }
    if (nz.size() > 2) throw InternalError("vertex with more than two nonzero coordinates");
    VertexCertificate vc;
    vc.point = v;
    if (nz.size() == 1) {
      vc.label = "single";
      vc.value = single_branch(inst.components[nz[0]], v[nz[0]]);
    } else {
      std::size_t i1 = nz[0], i2 = nz[1];
      // order so that m1/I1 < m/I < m2/I2
      if (rat(inst.components[i1].m, inst.components[i1].I) > rat(inst.components[i2].m, inst.components[i2].I)) {
        std::swap(i1, i2);
      }
      const PolytopeComponent& b1 = inst.components[i1];
      const PolytopeComponent& b2 = inst.components[i2];
      const Rational& c1 = v[i1];
      const Rational& c2 = v[i2];
      if (m >= rat(b2.m, b2.I)) {
        vc.label = "case-A";
        Rational mu1 = b1.m * c1 / m;
        Rational mu2 = b2.m * c2 / m;
        vc.value = mu1 * single_branch(b1, m / b1.m) + mu2 * single_branch(b2, m / b2.m);
        // the Cauchy-Schwarz step, checked exactly
        Rational chain = 1 - m + b1.m * b1.m * c1 / (b1.I * m) + b2.m * b2.m * c2 / (b2.I * m);
        if (vc.value < chain || chain < cert.target) throw InternalError("case-A inequality chain failed");
      } else {
        vc.label = "case-B";
        Rational mu2 = b2.I * c2;
        Rational mu1 = 1 - mu2;
        Rational lambda1 = c1 / mu1;
        Rational l2 = single_branch(b2, rat(1, b2.I));
        if (l2 < 1) throw InternalError("case-B second branch bound below 1");
        vc.value = mu1 * single_branch(b1, lambda1) + mu2 * l2;
      }
    }
    if (vc.value < cert.target) {
      throw InternalError("certified value " + to_string(vc.value) + " below " + to_string(cert.target));
    }
    if (!have || vc.value < cert.value) cert.value = vc.value;
    have = true;
    cert.vertices.push_back(std::move(vc));
  }
  if (!have) throw InternalError("instance polytope has no vertices");
  return cert;
}

}  // namespace germ
