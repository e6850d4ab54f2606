#include "germ/resolve.hpp"

#include "germ/errors.hpp"
#include "germ/field.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

namespace germ {

std::string to_string(ResultKind k) {
  switch (k) {
    case ResultKind::Exact: return "exact";
    case ResultKind::Lower: return "lower";
    case ResultKind::Upper: return "upper";
  }
  return "?";
}

namespace {

using Exp = std::pair<int, int>;
using LTerms = std::map<Exp, Num>;

struct LocalPart {
  int index;
  LTerms f;
};

struct Axis {
  int exc;
  char axis;  // the curve x = 0 or y = 0 in local coordinates
};

struct PointState {
  TowerPtr tower;
  int parent = 0;
  std::vector<LocalPart> parts;
  std::vector<Axis> exc;
  bool force = false;
  bool extra = false;
};

LTerms to_local(const Poly2& p) {
  LTerms out;
  for (const auto& [e, c] : p.terms()) out.emplace(e, Num{c, {}});
  return out;
}

const Num* find_coeff(const LTerms& f, int i, int j) {
  auto it = f.find(Exp{i, j});
  return it == f.end() ? nullptr : &it->second;
}

bool coeff_is_zero(const Field& F, const LTerms& f, int i, int j) {
  const Num* c = find_coeff(f, i, j);
  return c == nullptr || F.is_zero(*c);
}

int local_multiplicity(const Field& F, const LTerms& f) {
  int best = -1;
  const Num* lead = nullptr;
  for (const auto& [e, c] : f) {
    int d = e.first + e.second;
    if (best < 0 || d < best) {
      best = d;
      lead = &c;
    }
  }
  if (lead == nullptr) throw InternalError("local equation vanished identically");
  // A term of lowest degree either is a unit, or exposes a zero divisor.
  if (F.is_zero(*lead)) throw InternalError("structural coefficient tested zero");
  return best;
}

void add_to(const Field& F, LTerms& f, const Exp& e, const Num& v) {
  if (F.is_structural_zero(v)) return;
  auto [it, inserted] = f.emplace(e, v);
  if (!inserted) {
    it->second = F.add(it->second, v);
    if (F.is_structural_zero(it->second)) f.erase(it);
  }
}

LTerms lift(const Field& F, const LTerms& f) {
  (void)F;
  LTerms out;
  for (const auto& [e, c] : f) out.emplace(e, Num{0, {c}});
  return out;
}

// Strict transform in the chart (x, y) = (x, x*y), recentered at y = c.
LTerms chart_a(const Field& F, const LTerms& f, int m, const Num& c, bool c_is_zero) {
  LTerms out;
  std::vector<Num> cpow{F.one()};
  for (const auto& [e, v] : f) {
    int a = e.first + e.second - m;
    int j = e.second;
    if (c_is_zero) {
      add_to(F, out, Exp{a, j}, v);
      continue;
    }
    while (static_cast<int>(cpow.size()) <= j) cpow.push_back(F.mul(cpow.back(), c));
    Integer binom = 1;
    for (int k = 0; k <= j; ++k) {
      // coefficient of y^k in (y + c)^j is binom(j,k) c^(j-k)
      if (k > 0) binom = binom * (j - k + 1) / k;
      Num term = F.mul(F.mul(v, F.from(Rational(binom))), cpow[static_cast<std::size_t>(j - k)]);
      add_to(F, out, Exp{a, k}, term);
    }
  }
  return out;
}

// Strict transform in the chart (x, y) = (x*y, y), at x = 0.
LTerms chart_b(const LTerms& f, int m) {
  LTerms out;
  for (const auto& [e, v] : f) out.emplace(Exp{e.first, e.first + e.second - m}, v);
  return out;
}

PointState specialise_state(const PointState& p, std::size_t level, const UPoly& factor) {
  Specialisation sp(p.tower, level, factor);
  PointState out = p;
  out.tower = sp.target();
  std::size_t h = p.tower->height();
  Field F(out.tower, h);
  for (auto& part : out.parts) {
    LTerms mapped;
    for (const auto& [e, c] : part.f) {
      Num v = sp.map(c, h);
      if (!F.is_structural_zero(v)) mapped.emplace(e, std::move(v));
    }
    part.f = std::move(mapped);
  }
  return out;
}

class Resolver {
 public:
  Resolver(const std::vector<Poly2>& parts, const ResolveOptions& opts) : opts_(opts) {
    tree_.parts = parts;
    PointState root;
    root.tower = Tower::rationals();
    root.force = opts.force_root_blowup;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].is_zero()) throw InputError("cannot resolve the zero polynomial");
      if (!parts[i].vanishes_at_origin()) {
        throw InputError("component " + parts[i].to_string() + " does not vanish at the origin");
      }
      check_degree(parts[i], opts.degree_cap);
      root.parts.push_back(LocalPart{static_cast<int>(i), to_local(parts[i])});
    }
    queue_.push_back(std::move(root));
  }

  ResolutionTree run() {
    drain();
    std::mt19937_64 rng(opts_.seed);
    for (int r = 0; r < opts_.extra_blowups && !terminal_states_.empty(); ++r) {
      std::size_t idx = static_cast<std::size_t>(rng() % terminal_states_.size());
      PointState p = std::move(terminal_states_[idx]);
      terminal_states_.erase(terminal_states_.begin() + static_cast<std::ptrdiff_t>(idx));
      tree_.terminals.erase(tree_.terminals.begin() + static_cast<std::ptrdiff_t>(idx));
      p.force = true;
      p.extra = true;
      queue_.push_back(std::move(p));
      drain();
    }
    return std::move(tree_);
  }

 private:
  void drain() {
    while (!queue_.empty()) {
      PointState p = std::move(queue_.front());
      queue_.pop_front();
      try {
        process(p);
      } catch (const Split& s) {
        queue_.push_front(specialise_state(p, s.level, s.second));
        queue_.push_front(specialise_state(p, s.level, s.first));
      }
    }
  }

  // All side effects happen after the last operation that can split.
  void process(PointState p) {
    const std::size_t h = p.tower->height();
    Field F(p.tower, h);

    std::vector<LocalPart> through;
    for (auto& part : p.parts) {
      const Num* c0 = find_coeff(part.f, 0, 0);
      if (c0 != nullptr && !F.is_zero(*c0)) continue;
      through.push_back(std::move(part));
    }
    p.parts = std::move(through);
    if (p.parts.empty() && !p.force) return;

    std::vector<int> mult;
    for (const auto& part : p.parts) mult.push_back(local_multiplicity(F, part.f));

    if (!p.force && is_snc(F, p, mult)) {
      TerminalRecord t;
      t.parent = p.parent;
      for (const auto& part : p.parts) t.parts.push_back(part.index);
      for (const auto& a : p.exc) t.exceptionals.push_back(a.exc);
      t.degree = p.tower->conjugates();
      tree_.terminals.push_back(std::move(t));
      terminal_states_.push_back(std::move(p));
      return;
    }

    // Directions of the tangent cones: roots of prod T_p(1, z), and the
    // direction (0:1) when some T_p(0, 1) vanishes.
    UPoly phi{{F.one()}};
    bool need_b = false;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      int m = mult[i];
      std::vector<Num> t(static_cast<std::size_t>(m + 1), F.zero());
      for (const auto& [e, v] : p.parts[i].f) {
        if (e.first + e.second == m) t[static_cast<std::size_t>(e.second)] = v;
      }
      phi = F.poly_mul(phi, F.poly(std::move(t)));
      if (coeff_is_zero(F, p.parts[i].f, 0, m)) need_b = true;
    }
    phi = F.poly_trim(phi);
    UPoly sqf;
    bool root_zero = false;
    if (phi.degree() > 0) {
      UPoly g = F.poly_gcd(phi, F.poly_derivative(phi));
      sqf = F.poly_monic(F.poly_divmod(phi, g).first);
      if (F.is_zero(sqf.c[0])) {
        root_zero = true;
        sqf.c.erase(sqf.c.begin());
      }
    }

    std::vector<PointState> children;
    const Axis* old_x = nullptr;
    const Axis* old_y = nullptr;
    for (const auto& a : p.exc) (a.axis == 'x' ? old_x : old_y) = &a;
    int id = static_cast<int>(tree_.exceptionals.size()) + 1;

    if (root_zero) {
      PointState c;
      c.tower = p.tower;
      c.parent = id;
      c.extra = p.extra;
      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        c.parts.push_back(LocalPart{p.parts[i].index, chart_a(F, p.parts[i].f, mult[i], F.zero(), true)});
      }
      c.exc.push_back(Axis{id, 'x'});
      if (old_y != nullptr) c.exc.push_back(Axis{old_y->exc, 'y'});
      children.push_back(std::move(c));
    }
    if (sqf.degree() == 1) {
      Num root = F.neg(F.div(sqf.c[0], sqf.c[1]));
      PointState c;
      c.tower = p.tower;
      c.parent = id;
      c.extra = p.extra;
      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        c.parts.push_back(LocalPart{p.parts[i].index, chart_a(F, p.parts[i].f, mult[i], root, false)});
      }
      c.exc.push_back(Axis{id, 'x'});
      children.push_back(std::move(c));
    } else if (sqf.degree() >= 2) {
      TowerPtr ext = Tower::extend(p.tower, sqf, "a" + std::to_string(h + 1));
      Field G(ext, h + 1);
      Num root = G.generator();
      PointState c;
      c.tower = ext;
      c.parent = id;
      c.extra = p.extra;
      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        c.parts.push_back(LocalPart{p.parts[i].index, chart_a(G, lift(F, p.parts[i].f), mult[i], root, false)});
      }
      c.exc.push_back(Axis{id, 'x'});
      children.push_back(std::move(c));
    }
    if (need_b) {
      PointState c;
      c.tower = p.tower;
      c.parent = id;
      c.extra = p.extra;
      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        c.parts.push_back(LocalPart{p.parts[i].index, chart_b(p.parts[i].f, mult[i])});
      }
      c.exc.push_back(Axis{id, 'y'});
      if (old_x != nullptr) c.exc.push_back(Axis{old_x->exc, 'x'});
      children.push_back(std::move(c));
    }

    ExceptionalRecord rec;
    rec.id = id;
    rec.parent = p.parent;
    rec.k = 1;
    std::size_t n = tree_.parts.size();
    rec.ord.assign(n, 0);
    rec.mult.assign(n, 0);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      rec.mult[static_cast<std::size_t>(p.parts[i].index)] = mult[i];
      rec.ord[static_cast<std::size_t>(p.parts[i].index)] = mult[i];
    }
    for (const auto& a : p.exc) {
      const ExceptionalRecord& e = tree_.exceptionals[static_cast<std::size_t>(a.exc - 1)];
      rec.k += e.k;
      for (std::size_t q = 0; q < n; ++q) rec.ord[q] += e.ord[q];
      rec.through.push_back(a.exc);
    }
    rec.degree = p.tower->conjugates();
    rec.extra = p.extra;
    tree_.exceptionals.push_back(std::move(rec));
    if (static_cast<int>(tree_.exceptionals.size()) > opts_.max_blowups) {
      throw InputError("blow-up guard exceeded (" + std::to_string(opts_.max_blowups) + ")", "guard");
    }
    for (auto& c : children) queue_.push_back(std::move(c));
  }

  static bool is_snc(const Field& F, const PointState& p, const std::vector<int>& mult) {
    for (int m : mult) {
      if (m != 1) return false;
    }
    if (p.parts.size() + p.exc.size() > 2) return false;
    if (p.parts.size() == 2) {
      const LTerms& f = p.parts[0].f;
      const LTerms& g = p.parts[1].f;
      auto c = [&](const LTerms& t, int i, int j) {
        const Num* v = find_coeff(t, i, j);
        return v == nullptr ? F.zero() : *v;
      };
      Num det = F.sub(F.mul(c(f, 1, 0), c(g, 0, 1)), F.mul(c(f, 0, 1), c(g, 1, 0)));
      return !F.is_zero(det);
    }
    if (p.parts.size() == 1 && p.exc.size() == 1) {
      const LTerms& f = p.parts[0].f;
      return p.exc[0].axis == 'x' ? !coeff_is_zero(F, f, 0, 1) : !coeff_is_zero(F, f, 1, 0);
    }
    return true;
  }

  ResolveOptions opts_;
  ResolutionTree tree_;
  std::deque<PointState> queue_;
  std::vector<PointState> terminal_states_;
};

Witness exceptional_witness(const ExceptionalRecord& e) {
  return Witness{"E" + std::to_string(e.id), e.id, e.k, e.ord};
}

Witness strict_witness(const Poly2& f) { return Witness{"strict:" + f.to_string(), 0, 0, {}}; }

void check_shared(const GermDivisor& b, const GermDivisor& c) {
  for (const auto& pb : b.parts()) {
    for (const auto& pc : c.parts()) {
      Poly2 g = gcd(pb.poly, pc.poly);
      if (g.total_degree() > 0 && g.vanishes_at_origin()) {
        throw InputError("boundary and target share the component " + g.to_string(), "shared_component");
      }
    }
  }
}

}  // namespace

ResolutionTree log_resolution(const std::vector<Poly2>& parts, const ResolveOptions& opts) {
  return Resolver(parts, opts).run();
}

LctResult lct_exact(const GermDivisor& b, const GermDivisor& c, const ResolveOptions& opts) {
  if (c.empty()) throw InputError("target divisor is zero");
  if (!c.effective()) throw InputError("target divisor must be effective");
  check_shared(b, c);
  for (const auto& p : b.parts()) {
    if (p.coeff > 1) {
      throw NotLcError("boundary coefficient " + to_string(p.coeff) + " exceeds 1", "strict:" + p.poly.to_string());
    }
  }
  std::vector<Poly2> parts;
  for (const auto& p : b.parts()) parts.push_back(p.poly);
  for (const auto& p : c.parts()) parts.push_back(p.poly);
  ResolutionTree tree = log_resolution(parts, opts);
  const std::size_t nb = b.parts().size();

  std::optional<LctResult> best;
  auto offer = [&](const Rational& v, Witness w) {
    if (!best || v < best->value) best = LctResult{v, ResultKind::Exact, std::move(w)};
  };
  for (const auto& e : tree.exceptionals) {
    Rational a = 1 + e.k;
    Rational oc = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i < nb) a -= b.parts()[i].coeff * e.ord[i];
      else oc += c.parts()[i - nb].coeff * e.ord[i];
    }
    if (a < 0) throw NotLcError("log discrepancy " + to_string(a) + " is negative", "E" + std::to_string(e.id));
    if (oc > 0) offer(a / oc, exceptional_witness(e));
  }
  for (const auto& p : c.parts()) offer(1 / p.coeff, strict_witness(p.poly));
  return *best;
}

MldResult mld_germ(const GermDivisor& b, const ResolveOptions& opts) {
  for (const auto& p : b.parts()) {
    if (p.coeff > 1) {
      throw NotLcError("boundary coefficient " + to_string(p.coeff) + " exceeds 1", "strict:" + p.poly.to_string());
    }
  }
  std::vector<Poly2> parts;
  for (const auto& p : b.parts()) parts.push_back(p.poly);
  ResolveOptions o = opts;
  o.force_root_blowup = true;
  ResolutionTree tree = log_resolution(parts, o);
  std::optional<MldResult> best;
  auto offer = [&](const Rational& v, Witness w) {
    if (!best || v < best->value) best = MldResult{v, ResultKind::Exact, std::move(w)};
  };
  for (const auto& e : tree.exceptionals) {
    Rational a = 1 + e.k;
    for (std::size_t i = 0; i < parts.size(); ++i) a -= b.parts()[i].coeff * e.ord[i];
    if (a < 0) throw NotLcError("log discrepancy " + to_string(a) + " is negative", "E" + std::to_string(e.id));
    offer(a, exceptional_witness(e));
  }
  for (const auto& p : b.parts()) offer(1 - p.coeff, strict_witness(p.poly));
  return *best;
}

namespace {

struct FiberPoint {
  std::vector<DivisorPart> parts;  // the fiber (x) is among them
  std::size_t fiber = 0;
};

FiberPoint prepare_fiber_point(const GermDivisor& d, int degree_cap) {
  std::vector<DivisorPart> raw = d.parts();
  raw.push_back(DivisorPart{0, Poly2::x()});
  for (const auto& p : raw) check_degree(p.poly, degree_cap);
  FiberPoint fp;
  fp.parts = coprime_refinement(raw, true);
  const Poly2 x = Poly2::x();
  bool found = false;
  for (std::size_t i = 0; i < fp.parts.size(); ++i) {
    if (fp.parts[i].poly == x) {
      fp.fiber = i;
      found = true;
    }
  }
  if (!found) throw InternalError("fiber component lost during normalization");
  return fp;
}

enum class FiberMode { Lct, Mld };

FiberResult relative_fiber(const std::vector<GermDivisor>& points, const ResolveOptions& opts, FiberMode mode) {
  if (points.empty()) throw InputError("at least one fiber point is required");
  std::vector<FiberPoint> fps;
  for (const auto& d : points) fps.push_back(prepare_fiber_point(d, opts.degree_cap));
  Rational fc = fps.front().parts[fps.front().fiber].coeff;
  for (const auto& fp : fps) {
    if (fp.parts[fp.fiber].coeff != fc) {
      throw InputError("fiber coefficient differs between fiber points");
    }
  }
  if (fc > 1) throw NotLcError("fiber coefficient " + to_string(fc) + " exceeds 1", "fiber");

  FiberResult out;
  out.fiber_coefficient = fc;
  bool have = false;
  auto offer = [&](const Rational& v, Witness w, std::size_t point) {
    if (!have || v < out.value) {
      out.value = v;
      out.witness = std::move(w);
      out.point = point;
      have = true;
    }
  };
  offer(1 - fc, Witness{"fiber", 0, 0, {}}, 0);

  for (std::size_t pi = 0; pi < fps.size(); ++pi) {
    const FiberPoint& fp = fps[pi];
    std::vector<Poly2> parts;
    for (std::size_t i = 0; i < fp.parts.size(); ++i) {
      const auto& p = fp.parts[i];
      parts.push_back(p.poly);
      if (i == fp.fiber) continue;
      if (p.coeff > 1) {
        throw NotLcError("horizontal coefficient " + to_string(p.coeff) + " exceeds 1", "strict:" + p.poly.to_string());
      }
      if (p.coeff < 0) out.generic_fiber_effective = false;
    }
    ResolveOptions o = opts;
    if (mode == FiberMode::Mld) o.force_root_blowup = true;
    ResolutionTree tree = log_resolution(parts, o);
    for (const auto& e : tree.exceptionals) {
      Rational a = 1 + e.k;
      for (std::size_t i = 0; i < parts.size(); ++i) a -= fp.parts[i].coeff * e.ord[i];
      if (a < 0) {
        throw NotLcError("not lc over the base: log discrepancy " + to_string(a), "E" + std::to_string(e.id));
      }
      if (mode == FiberMode::Lct) offer(a / e.ord[fp.fiber], exceptional_witness(e), pi);
      else offer(a, exceptional_witness(e), pi);
    }
  }
  return out;
}

}  // namespace

FiberResult lct_relative_fiber(const std::vector<GermDivisor>& points, const ResolveOptions& opts) {
  return relative_fiber(points, opts, FiberMode::Lct);
}

FiberResult mld_relative_fiber(const std::vector<GermDivisor>& points, const ResolveOptions& opts) {
  return relative_fiber(points, opts, FiberMode::Mld);
}

namespace {

void require_curve(const Poly2& f, const char* name) {
  if (f.is_zero()) throw InputError(std::string(name) + " is the zero polynomial");
  if (!f.vanishes_at_origin()) throw InputError(std::string(name) + " does not vanish at the origin");
}

}  // namespace

long intersection_multiplicity(const Poly2& f, const Poly2& g, const ResolveOptions& opts) {
  require_curve(f, "f");
  require_curve(g, "g");
  check_degree(f, opts.degree_cap);
  check_degree(g, opts.degree_cap);
  std::vector<DivisorPart> fp = coprime_refinement({DivisorPart{1, f}}, false);
  std::vector<DivisorPart> gp = coprime_refinement({DivisorPart{1, g}}, false);
  for (const auto& a : fp) {
    for (const auto& b : gp) {
      Poly2 h = gcd(a.poly, b.poly);
      if (h.total_degree() > 0 && h.vanishes_at_origin()) {
        throw InputError("f and g share the component " + h.to_string(), "common_factor");
      }
    }
  }
  std::vector<Poly2> parts;
  std::vector<long> ef, eg;
  for (const auto& a : fp) {
    parts.push_back(a.poly);
    ef.push_back(a.coeff.get_num().get_si());
    eg.push_back(0);
  }
  for (const auto& b : gp) {
    parts.push_back(b.poly);
    ef.push_back(0);
    eg.push_back(b.coeff.get_num().get_si());
  }
  ResolutionTree tree = log_resolution(parts, opts);
  long total = 0;
  for (const auto& e : tree.exceptionals) {
    long mf = 0, mg = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      mf += ef[i] * e.mult[i];
      mg += eg[i] * e.mult[i];
    }
    total += static_cast<long>(e.degree) * mf * mg;
  }
  for (const auto& t : tree.terminals) {
    long mf = 0, mg = 0;
    for (int i : t.parts) {
      mf += ef[static_cast<std::size_t>(i)];
      mg += eg[static_cast<std::size_t>(i)];
    }
    total += static_cast<long>(t.degree) * mf * mg;
  }
  return total;
}

long branch_count(const Poly2& f, const ResolveOptions& opts) {
  require_curve(f, "f");
  check_degree(f, opts.degree_cap);
  std::vector<Poly2> parts;
  for (const auto& p : coprime_refinement({DivisorPart{1, f}}, false)) parts.push_back(p.poly);
  ResolveOptions o = opts;
  o.force_root_blowup = true;
  ResolutionTree tree = log_resolution(parts, o);
  long count = 0;
  for (const auto& t : tree.terminals) count += static_cast<long>(t.degree * t.parts.size());
  return count;
}

std::string to_string(const PuiseuxPair& p) {
  return "(" + std::to_string(p.m) + ", " + (p.n ? std::to_string(*p.n) : std::string("inf")) + ")";
}

PuiseuxPair first_puiseux_pair(const Poly2& f_in, const ResolveOptions& opts) {
  require_curve(f_in, "f");
  check_degree(f_in, opts.degree_cap);
  for (const auto& [g, e] : squarefree_decomposition(f_in)) {
    if (e > 1 && g.vanishes_at_origin()) throw InputError("curve is not reduced at the origin", "reducible");
  }
  if (branch_count(f_in, opts) != 1) throw InputError("curve is not irreducible at the origin", "reducible");
  Poly2 f = f_in;
  const int m = multiplicity_at_origin(f);
  if (m == 1) return PuiseuxPair{1, std::nullopt};

  // Put the tangent cone in the form a*y^m.
  if (f.coeff(0, m) == 0) f = swap_xy(f);
  {
    Rational a = f.coeff(0, m);
    Rational mu = -f.coeff(1, m - 1) / (a * m);
    if (mu != 0) f = substitute(f, Poly2::x(), Poly2::y() + Poly2::monomial(mu, 1, 0));
    if (tangent_cone(f) != Poly2::monomial(a, 0, m)) {
      throw InternalError("tangent cone of an irreducible germ is not a power of a line");
    }
  }
  for (int iter = 0; iter < 4 * opts.degree_cap + 16; ++iter) {
    int q = -1;
    for (const auto& [e, c] : f.terms()) {
      if (e.second == 0 && (q < 0 || e.first < q)) q = e.first;
    }
    if (q < 0) throw InternalError("irreducible germ divisible by a coordinate");
    for (const auto& [e, c] : f.terms()) {
      // every term must lie on or above the segment (0,m)-(q,0)
      if (static_cast<long>(e.first) * m + static_cast<long>(e.second) * q < static_cast<long>(m) * q) {
        throw InternalError("Newton polygon of an irreducible germ has more than one edge");
      }
    }
    if (q % m != 0) return PuiseuxPair{m, q};
    int d = q / m;
    Rational a = f.coeff(0, m);
    Rational c = -f.coeff(d, m - 1) / (a * m);
    Poly2 edge;
    for (const auto& [e, v] : f.terms()) {
      if (static_cast<long>(e.first) + static_cast<long>(e.second) * d == q) edge.add_term(v, e.first, e.second);
    }
    Poly2 lin = Poly2::y() - Poly2::monomial(c, d, 0);
    if (edge != lin.pow(static_cast<unsigned>(m)) * a) {
      throw InternalError("edge polynomial of an irreducible germ is not a pure power");
    }
    f = substitute(f, Poly2::x(), Poly2::y() + Poly2::monomial(c, d, 0));
    check_degree(f, 16 * opts.degree_cap);
  }
  throw InputError("Newton-Puiseux iteration did not terminate within the guard", "guard");
}

}  // namespace germ
