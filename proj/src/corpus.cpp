#include "germ/corpus.hpp"

#include "germ/errors.hpp"
#include "germ/resolve.hpp"

#include <numeric>

namespace germ {

namespace {

long pick(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational small_coeff(std::mt19937_64& rng) {
  static const long nums[] = {1, -1, 2, -2, 3, 1, -1};
  long n = nums[rng() % 7];
  long d = pick(rng, 1, 2);
  return rat(n, d);
}

bool shares_component(const Poly2& a, const Poly2& b) { return gcd(a, b).vanishes_at_origin(); }

bool usable_part(const Poly2& f) {
  if (!f.vanishes_at_origin() || f.is_zero()) return false;
  return true;
}

}  // namespace

Poly2 random_germ(std::mt19937_64& rng, int max_degree) {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  for (;;) {
    Poly2 f;
    switch (rng() % 6) {
      case 0: f = y - Poly2(small_coeff(rng)) * x.pow(pick(rng, 1, 4)); break;
      case 1: f = x - Poly2(small_coeff(rng)) * y.pow(pick(rng, 1, 4)); break;
      case 2: f = x.pow(pick(rng, 2, 4)) + Poly2(small_coeff(rng)) * y.pow(pick(rng, 2, 5)); break;
      case 3: {
        long p = pick(rng, 1, 2);
        f = (y - x.pow(p)).pow(2) - Poly2(small_coeff(rng)) * x.pow(pick(rng, 2 * p + 1, 2 * p + 3));
        break;
      }
      case 4: f = y - Poly2(small_coeff(rng)) * x; break;
      default: {
        long terms = pick(rng, 2, 4);
        for (long i = 0; i < terms; ++i) {
          long d = pick(rng, 1, max_degree);
          long a = pick(rng, 0, d);
          f += Poly2(small_coeff(rng)) * Poly2::monomial(1, a, d - a);
        }
        break;
      }
    }
    if (usable_part(f) && f.total_degree() <= max_degree + 2) return f;
  }
}

// Component with high contact with the curve x = 0.
Poly2 tangent_germ(std::mt19937_64& rng) {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  Poly2 a(small_coeff(rng));
  switch (rng() % 5) {
    case 0: return x + a * y.pow(pick(rng, 2, 7));
    case 1: return x.pow(pick(rng, 2, 3)) + a * y.pow(pick(rng, 4, 9));
    case 2: {
      long p = pick(rng, 2, 3);
      return (x - a * y.pow(p)).pow(2) - y.pow(2 * p + 1);
    }
    case 3: return y.pow(pick(rng, 2, 3)) - a * x.pow(pick(rng, 3, 5));
    default: return x * (x + y) + a * y.pow(pick(rng, 3, 6));
  }
}

// Automorphism of the germ applied to a whole case.
std::pair<Poly2, Poly2> random_change(std::mt19937_64& rng) {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  switch (rng() % 5) {
    case 0: return {x, y};
    case 1: return {y, x};
    case 2: return {x + y.pow(2), y};
    case 3: return {x - Poly2(rat(2)) * y + y.pow(3), y};
    default: return {x, y + x};
  }
}

Poly2 random_smooth_curve(std::mt19937_64& rng) {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  switch (rng() % 6) {
    case 0: return x;
    case 1: return y;
    case 2: return x + y;
    case 3: return y - x.pow(2);
    case 4: return x - Poly2(small_coeff(rng)) * y.pow(pick(rng, 2, 3));
    default: return x + Poly2(rat(2)) * y + x * y;
  }
}

std::vector<CorpusCase> multiplicity_one_corpus(std::uint64_t seed, std::size_t count) {
  static const Rational totals[] = {rat(1, 4), rat(1, 3), rat(1, 2), rat(2, 3), rat(3, 4), rat(1)};
  std::vector<CorpusCase> out;
  for (std::uint64_t s = seed; out.size() < count; ++s) {
    std::mt19937_64 rng(s);
    bool tangent = rng() % 3 != 0;
    auto [u, v] = random_change(rng);
    Poly2 c = tangent ? substitute(Poly2::x(), u, v) : random_smooth_curve(rng);
    long n = pick(rng, 1, 3);
    std::vector<Poly2> fs;
    std::vector<long> weights;
    bool ok = true;
    for (long i = 0; i < n && ok; ++i) {
      Poly2 f = tangent && rng() % 4 != 0 ? substitute(tangent_germ(rng), u, v) : random_germ(rng);
      if (shares_component(f, c)) ok = false;
      fs.push_back(f);
      weights.push_back(pick(rng, 1, 5));
    }
    if (!ok) continue;
    Rational total = totals[rng() % 6];
    Rational denom = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) denom += weights[i] * multiplicity_at_origin(fs[i]);
    std::vector<DivisorPart> raw;
    for (std::size_t i = 0; i < fs.size(); ++i) raw.push_back(DivisorPart{weights[i] * total / denom, fs[i]});
    try {
      GermDivisor b(raw);
      if (b.empty()) continue;
      Rational I = 0;
      for (const auto& p : b.parts()) I += p.coeff * intersection_multiplicity(p.poly, c);
      out.push_back(CorpusCase{s, b, c, b.multiplicity(), I});
    } catch (const InputError&) {
      continue;
    }
  }
  return out;
}

Poly2 realize_branch(long m, long I, long variant) {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  Poly2 c(rat(variant + 1));
  if (m == 1) return x + c * y.pow(I);
  if (I == m) return y.pow(m) - c * x.pow(m + 1);
  if (std::gcd(m, I) == 1) return x.pow(m) + c * y.pow(I);
  if (I % m == 0) {
    long p = I / m;
    return (x - y.pow(p)).pow(m) - c * y.pow(p * m + 1);
  }
  throw InputError("no realization for (m, I) = (" + std::to_string(m) + ", " + std::to_string(I) + ")");
}

LctPolytopeInstance random_polytope_instance(std::mt19937_64& rng) {
  static const Rational totals[] = {rat(1, 3), rat(1, 2), rat(2, 3), rat(3, 4), rat(1)};
  LctPolytopeInstance inst;
  long n = pick(rng, 1, 3);
  std::vector<long> weights;
  for (long i = 0; i < n; ++i) {
    long m = pick(rng, 1, 3);
    long I;
    do {
      I = pick(rng, m, 7);
    } while (!(m == 1 || I == m || std::gcd(m, I) == 1 || I % m == 0));
    inst.components.push_back(PolytopeComponent{m, I, 0});
    weights.push_back(pick(rng, 1, 4));
  }
  Rational total = totals[rng() % 5];
  Rational denom = 0;
  for (long i = 0; i < n; ++i) denom += weights[i] * inst.components[i].m;
  for (long i = 0; i < n; ++i) inst.components[i].b = weights[i] * total / denom;
  return inst;
}

GermDivisor realize_instance(const LctPolytopeInstance& inst) {
  std::vector<DivisorPart> raw;
  for (std::size_t i = 0; i < inst.components.size(); ++i) {
    const auto& c = inst.components[i];
    raw.push_back(DivisorPart{c.b, realize_branch(c.m, c.I, static_cast<long>(i))});
  }
  return GermDivisor(raw);
}

}  // namespace germ
