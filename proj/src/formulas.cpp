#include "germ/formulas.hpp"

#include "germ/blowup.hpp"
#include "germ/errors.hpp"

#include <numeric>

namespace germ {

namespace {

void require_pair(const PuiseuxPair& p) {
  if (!p.n) {
    if (p.m != 1) throw InputError("an infinite second exponent requires m = 1");
    return;
  }
  if (p.m < 2 || *p.n <= p.m || *p.n % p.m == 0) {
    throw InputError("invalid first Puiseux pair " + to_string(p) + ": need 2 <= m < n with m not dividing n");
  }
}

}  // namespace

BranchProfile branch_profile(const Poly2& f, const Poly2& c) {
  if (multiplicity_at_origin(c) != 1) throw InputError("the curve C must be smooth at the origin");
  BranchProfile out;
  out.pair = first_puiseux_pair(f);
  out.m = out.pair->m;
  out.I = intersection_multiplicity(f, c);
  return out;
}

Rational prop33_lct(long n, long k, long m1, long m2) {
  if (n < 1 || k < 1 || m1 < 1 || m2 < 1) throw InputError("prop33 parameters must be positive integers");
  Rational a(m1 + m2, k * m1 * m2 + n * m2);
  a.canonicalize();
  return min(a, min(rat(1, n), rat(1, k)));
}

std::optional<std::vector<long>> admissible_I(const PuiseuxPair& p) {
  require_pair(p);
  if (!p.n) return std::nullopt;
  std::vector<long> out;
  for (long k = 1; k * p.m <= *p.n; ++k) out.push_back(k * p.m);
  out.push_back(*p.n);
  return out;
}

Rational prop35_lct(const PuiseuxPair& p, long I, const Rational& s, const Rational& t) {
  require_pair(p);
  if (s <= 0 || t <= 0) throw InputError("prop35 needs s, t > 0");
  if (I < 1) throw InputError("intersection number must be positive");
  if (auto adm = admissible_I(p)) {
    bool ok = false;
    for (long v : *adm) ok = ok || v == I;
    if (!ok) {
      throw InputError("I = " + std::to_string(I) + " is not admissible for the pair " + to_string(p) +
                           " (admissible values are m, 2m, ..., floor(n/m) m, n)",
                       "inadmissible_I");
    }
  }
  Rational m(p.m);
  Rational first = p.n ? Rational((m + *p.n) / (s * m * *p.n + t * I)) : Rational(1 / s);
  Rational second = (m + I) / ((s * m + t) * I);
  return min(min(first, second), min(1 / s, 1 / t));
}

BoundResult cor38_bound(const PuiseuxPair& p, const Rational& I, const Rational& lambda) {
  require_pair(p);
  if (lambda <= 0) throw InputError("lambda must be positive");
  if (I <= 0) throw InputError("intersection number must be positive");
  Rational m(p.m);
  std::string hyp;
  if (lambda * m <= 1) hyp = "a";
  else if (p.n && Rational(*p.n) == I && lambda <= min(Rational(1), 1 / m + 1 / I)) hyp = "b";
  else if (I != m && lambda * I <= 2) hyp = "c";
  if (hyp.empty()) throw InputError("none of the hypotheses (a), (b), (c) holds", "hypothesis");
  return BoundResult{min(Rational(1), 1 + m / I - lambda * m), hyp};
}

Rational thm18_bound(const Rational& m, const Rational& I) {
  if (m <= 0 || m > 1) throw InputError("the bound needs 0 < m <= 1", "hypothesis");
  if (I <= 0) throw InputError("intersection number must be positive");
  return min(Rational(1), 1 + m / I - m);
}

Rational thmA2_bound(const Rational& m, const Rational& I) {
  if (m <= 0 || m > 1) throw InputError("the bound needs 0 < m <= 1", "hypothesis");
  if (I <= 0) throw InputError("intersection number must be positive");
  if (m / I < m - rat(1, 2)) throw InputError("hypothesis m/I >= m - 1/2 fails", "hypothesis");
  return min(Rational(1), 1 - m + m / I);
}

Rational example39_family(long m, long I, const Rational& lambda) {
  if (m < 1 || I < 1 || std::gcd(m, I) != 1 || m >= I) throw InputError("need coprime 1 <= m < I");
  if (lambda * m > 1 || lambda * I < 1) throw InputError("need lambda*m <= 1 <= lambda*I", "hypothesis");
  return 1 + rat(m, I) - lambda * m;
}

VarchenkoResult varchenko_upper_bound(const GermDivisor& b, int weight_bound,
                                      const std::vector<CoordinateChange>& coord_changes,
                                      bool consult_oracle, const ResolveOptions& opts) {
  if (b.empty()) throw InputError("divisor is zero");
  if (!b.effective()) throw InputError("the weight search needs an effective divisor");
  if (weight_bound < 2) throw InputError("weight bound must be at least 2");
  std::vector<GermDivisor> frames{b};
  for (const auto& ch : coord_changes) {
    if (!ch.x_image.vanishes_at_origin() || !ch.y_image.vanishes_at_origin()) {
      throw InputError("coordinate change must fix the origin");
    }
    Rational det = ch.x_image.coeff(1, 0) * ch.y_image.coeff(0, 1) - ch.x_image.coeff(0, 1) * ch.y_image.coeff(1, 0);
    if (det == 0) throw InputError("coordinate change must have invertible linear part");
    std::vector<DivisorPart> raw;
    for (const auto& p : b.parts()) raw.push_back(DivisorPart{p.coeff, substitute(p.poly, ch.x_image, ch.y_image)});
    frames.emplace_back(raw, opts.degree_cap * 8);
  }
  VarchenkoResult out;
  bool have = false;
  for (std::size_t fi = 0; fi < frames.size(); ++fi) {
    for (long sum = 2; sum <= weight_bound; ++sum) {
      for (long a1 = 1; a1 < sum; ++a1) {
        long a2 = sum - a1;
        if (std::gcd(a1, a2) != 1) continue;
        WeightVector w(a1, a2);
        Rational v = Rational(sum) / frames[fi].weighted_multiplicity(w);
        if (!have || v < out.result.value) {
          out.result.value = v;
          out.weight = w;
          out.change = fi;
          have = true;
        }
      }
    }
  }
  out.result.kind = ResultKind::Upper;
  out.result.witness = Witness{"weight(" + std::to_string(out.weight.a1) + "," + std::to_string(out.weight.a2) + ")",
                               0, out.weight.a1 + out.weight.a2 - 1, {}};
  if (consult_oracle) {
    out.oracle = lct_exact(GermDivisor(), b, opts).value;
    if (*out.oracle == out.result.value) out.result.kind = ResultKind::Exact;
    if (*out.oracle > out.result.value) {
      throw InternalError("weight bound " + to_string(out.result.value) + " is below the lct " + to_string(*out.oracle));
    }
  }
  return out;
}

Rational cyclic_quotient_mld(const CyclicQuotient& q) {
  if (q.r <= 0) throw InputError("cyclic group order must be positive");
  if (q.weights.empty()) throw InputError("weight list is empty");
  long dim = static_cast<long>(q.weights.size());
  if (dim < 2 || dim > 3) throw InputError("only dimensions 2 and 3 are supported");
  Rational best(dim);
  if (q.r == 1) return best;
  for (long k = 1; k < q.r; ++k) {
    int moved = 0;
    Rational sum = 0;
    for (long w : q.weights) {
      long v = ((k * w) % q.r + q.r) % q.r;
      if (v != 0) ++moved;
      sum += rat(v, q.r);
    }
    if (moved < 2) throw InputError("the action contains a pseudo-reflection", "pseudo_reflection");
    sum.canonicalize();
    best = min(best, sum);
  }
  return best;
}

}  // namespace germ
