#include "germ/field.hpp"

#include "germ/errors.hpp"

#include <algorithm>

namespace germ {

int compare(const Num& a, const Num& b) {
  if (int r = cmp(a.q, b.q); r != 0) return r < 0 ? -1 : 1;
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size() ? -1 : 1;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (int r = compare(a.c[i], b.c[i]); r != 0) return r;
  }
  return 0;
}

namespace {

int compare_poly(const UPoly& a, const UPoly& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size() ? -1 : 1;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (int r = compare(a.c[i], b.c[i]); r != 0) return r;
  }
  return 0;
}

}  // namespace

// ---------------------------------------------------------------- Tower

TowerPtr Tower::rationals() {
  static const TowerPtr q = std::make_shared<const Tower>();
  return q;
}

std::size_t Tower::conjugates() const {
  std::size_t n = 1;
  for (const auto& l : levels_) n *= static_cast<std::size_t>(l.modulus.degree());
  return n;
}

TowerPtr Tower::extend(const TowerPtr& base, const UPoly& poly, std::string name) {
  Field f = Field::top(base);
  UPoly p = f.poly_trim(poly);
  if (p.degree() < 1) throw InputError("extension modulus must have positive degree");
  UPoly g = f.poly_gcd(p, f.poly_derivative(p));
  UPoly r = f.poly_monic(f.poly_divmod(p, g).first);
  auto t = std::make_shared<Tower>(*base);
  t->levels_.push_back(Level{std::move(name), std::move(r)});
  return t;
}

TowerPtr Tower::specialise(const TowerPtr& base, std::size_t level, const UPoly& factor) {
  return Specialisation(base, level, factor).target();
}

Specialisation::Specialisation(TowerPtr from, std::size_t level, const UPoly& factor)
    : from_(std::move(from)), level_(level) {
  auto t = std::make_shared<Tower>(*from_);
  t->levels_.at(level).modulus = factor;
  to_ = t;
  // Higher moduli are mapped one at a time; mapping level j only reads the
  // (already updated) moduli below j.
  for (std::size_t j = level + 1; j < t->levels_.size(); ++j) {
    t->levels_[j].modulus = map(from_->level(j).modulus, j);
  }
}

Num Specialisation::map(const Num& a, std::size_t at_level) const {
  if (at_level <= level_) return a;
  if (at_level == level_ + 1) {
    Field below(to_, level_);
    UPoly r = below.poly_rem_monic(UPoly{a.c}, to_->level(level_).modulus);
    return Num{0, std::move(r.c)};
  }
  Num out;
  out.c.reserve(a.c.size());
  for (const auto& x : a.c) out.c.push_back(map(x, at_level - 1));
  Field below(to_, at_level - 1);
  while (!out.c.empty() && below.is_structural_zero(out.c.back())) out.c.pop_back();
  return out;
}

UPoly Specialisation::map(const UPoly& p, std::size_t at_level) const {
  UPoly out;
  out.c.reserve(p.c.size());
  for (const auto& x : p.c) out.c.push_back(map(x, at_level));
  Field f(to_, at_level);
  while (!out.c.empty() && f.is_structural_zero(out.c.back())) out.c.pop_back();
  return out;
}

// ---------------------------------------------------------------- Field

Field::Field(TowerPtr tower, std::size_t level) : tower_(std::move(tower)), level_(level) {
  if (level_ > tower_->height()) throw InputError("field level exceeds tower height");
}

std::size_t Field::conjugates() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < level_; ++i) n *= static_cast<std::size_t>(tower_->level(i).modulus.degree());
  return n;
}

Num Field::zero() const { return Num{}; }

Num Field::one() const { return from(Rational(1)); }

Num Field::from(const Rational& q) const {
  if (level_ == 0) return Num{q, {}};
  if (q == 0) return Num{};
  return Num{0, {base().from(q)}};
}

Num Field::generator() const {
  if (level_ == 0) throw InputError("the rationals have no generator");
  Field b = base();
  UPoly x{{b.zero(), b.one()}};
  return Num{0, b.poly_rem_monic(x, modulus()).c};
}

bool Field::is_structural_zero(const Num& a) const {
  return level_ == 0 ? a.q == 0 : a.c.empty();
}

bool Field::is_zero(const Num& a) const {
  if (is_structural_zero(a)) return true;
  if (level_ == 0) return false;
  (void)inv(a);
  return false;
}

bool Field::is_rational(const Num& a) const {
  if (level_ == 0) return true;
  if (a.c.empty()) return true;
  return a.c.size() == 1 && base().is_rational(a.c[0]);
}

Rational Field::to_rational(const Num& a) const {
  if (level_ == 0) return a.q;
  if (a.c.empty()) return 0;
  if (a.c.size() != 1) throw InputError("element is not rational");
  return base().to_rational(a.c[0]);
}

void Field::trim(std::vector<Num>& c) const {
  while (!c.empty() && is_structural_zero(c.back())) c.pop_back();
}

void Field::trim(UPoly& p) const { trim(p.c); }

Num Field::add(const Num& a, const Num& b) const {
  if (level_ == 0) return Num{a.q + b.q, {}};
  return Num{0, base().poly_add(UPoly{a.c}, UPoly{b.c}).c};
}

Num Field::sub(const Num& a, const Num& b) const {
  if (level_ == 0) return Num{a.q - b.q, {}};
  return Num{0, base().poly_sub(UPoly{a.c}, UPoly{b.c}).c};
}

Num Field::neg(const Num& a) const {
  if (level_ == 0) return Num{-a.q, {}};
  Field b = base();
  Num out;
  out.c.reserve(a.c.size());
  for (const auto& x : a.c) out.c.push_back(b.neg(x));
  return out;
}

Num Field::mul(const Num& a, const Num& b) const {
  if (level_ == 0) return Num{a.q * b.q, {}};
  if (a.c.empty() || b.c.empty()) return Num{};
  Field lo = base();
  return Num{0, lo.poly_rem_monic(lo.poly_mul(UPoly{a.c}, UPoly{b.c}), modulus()).c};
}

Num Field::pow(const Num& a, unsigned e) const {
  Num result = one();
  Num base_v = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base_v);
    e >>= 1u;
    if (e > 0) base_v = mul(base_v, base_v);
  }
  return result;
}

Num Field::inv(const Num& a) const {
  if (is_structural_zero(a)) throw InputError("division by zero");
  if (level_ == 0) return Num{1 / a.q, {}};
  Field lo = base();
  UPoly r0 = modulus();
  UPoly r1{a.c};
  UPoly s0;
  UPoly s1{{lo.one()}};
  while (!r1.is_zero()) {
    auto [q, r] = lo.poly_divmod(r0, r1);
    UPoly s = lo.poly_sub(s0, lo.poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() == 0) {
    UPoly inv_poly = lo.poly_scale(s0, lo.inv(r0.c[0]));
    return Num{0, lo.poly_rem_monic(inv_poly, modulus()).c};
  }
  UPoly g = lo.poly_monic(r0);
  UPoly h = lo.poly_divmod(modulus(), g).first;
  Split split;
  split.level = level_ - 1;
  if (compare_poly(g, h) <= 0) {
    split.first = std::move(g);
    split.second = std::move(h);
  } else {
    split.first = std::move(h);
    split.second = std::move(g);
  }
  throw split;
}

UPoly Field::poly(std::vector<Num> coeffs) const {
  UPoly p{std::move(coeffs)};
  trim(p);
  return p;
}

UPoly Field::poly_add(const UPoly& a, const UPoly& b) const {
  UPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    if (i < a.c.size() && i < b.c.size()) out.c[i] = add(a.c[i], b.c[i]);
    else if (i < a.c.size()) out.c[i] = a.c[i];
    else out.c[i] = b.c[i];
  }
  trim(out);
  return out;
}

UPoly Field::poly_sub(const UPoly& a, const UPoly& b) const {
  UPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    if (i < a.c.size() && i < b.c.size()) out.c[i] = sub(a.c[i], b.c[i]);
    else if (i < a.c.size()) out.c[i] = a.c[i];
    else out.c[i] = neg(b.c[i]);
  }
  trim(out);
  return out;
}

UPoly Field::poly_mul(const UPoly& a, const UPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  UPoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (is_structural_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (is_structural_zero(b.c[j])) continue;
      out.c[i + j] = add(out.c[i + j], mul(a.c[i], b.c[j]));
    }
  }
  trim(out);
  return out;
}

UPoly Field::poly_scale(const UPoly& a, const Num& s) const {
  UPoly out;
  out.c.reserve(a.c.size());
  for (const auto& x : a.c) out.c.push_back(mul(x, s));
  trim(out);
  return out;
}

UPoly Field::poly_derivative(const UPoly& a) const {
  UPoly out;
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    out.c.push_back(mul(from(static_cast<long>(i)), a.c[i]));
  }
  trim(out);
  return out;
}

UPoly Field::poly_monic(const UPoly& a) const {
  if (a.is_zero()) return a;
  return poly_scale(a, inv(a.c.back()));
}

std::pair<UPoly, UPoly> Field::poly_divmod(const UPoly& a, const UPoly& b) const {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  Num lc_inv = inv(b.c.back());
  UPoly rem = a;
  UPoly quot;
  int db = b.degree();
  if (rem.degree() >= db) quot.c.assign(static_cast<std::size_t>(rem.degree() - db + 1), zero());
  while (!rem.is_zero() && rem.degree() >= db) {
    int shift = rem.degree() - db;
    Num coef = mul(rem.c.back(), lc_inv);
    quot.c[static_cast<std::size_t>(shift)] = coef;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      std::size_t k = j + static_cast<std::size_t>(shift);
      rem.c[k] = sub(rem.c[k], mul(coef, b.c[j]));
    }
    // The leading term cancels exactly; drop it even if representation noise
    // were to remain.
    rem.c.pop_back();
    trim(rem);
  }
  trim(quot);
  return {std::move(quot), std::move(rem)};
}

UPoly Field::poly_rem_monic(const UPoly& a, const UPoly& m) const {
  UPoly rem = a;
  int dm = m.degree();
  while (!rem.is_zero() && rem.degree() >= dm) {
    int shift = rem.degree() - dm;
    Num coef = rem.c.back();
    for (std::size_t j = 0; j < m.c.size(); ++j) {
      std::size_t k = j + static_cast<std::size_t>(shift);
      rem.c[k] = sub(rem.c[k], mul(coef, m.c[j]));
    }
    rem.c.pop_back();
    trim(rem);
  }
  return rem;
}

UPoly Field::poly_gcd(const UPoly& a, const UPoly& b) const {
  UPoly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    UPoly r = poly_divmod(r0, r1).second;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return poly_monic(r0);
}

Num Field::poly_eval(const UPoly& a, const Num& x) const {
  Num acc = zero();
  for (std::size_t i = a.c.size(); i-- > 0;) acc = add(mul(acc, x), a.c[i]);
  return acc;
}

UPoly Field::poly_trim(const UPoly& a) const {
  UPoly out = a;
  while (!out.c.empty() && is_zero(out.c.back())) out.c.pop_back();
  return out;
}

std::string Field::format(const Num& a) const {
  if (level_ == 0) return a.q.get_str();
  if (a.c.empty()) return "0";
  const std::string& name = tower_->level(level_ - 1).name;
  std::string out;
  Field b = base();
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (b.is_structural_zero(a.c[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + b.format(a.c[i]) + ")";
    if (i >= 1) out += "*" + name;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string Field::format(const UPoly& p, const std::string& var) const {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.c.size(); i-- > 0;) {
    if (is_structural_zero(p.c[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + format(p.c[i]) + ")";
    if (i >= 1) out += "*" + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const Field& f, const UPoly& p) {
  UPoly g = f.poly_trim(p);
  if (g.is_zero()) throw InputError("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<UPoly, int>> out;
  if (g.degree() == 0) return out;
  UPoly monic = f.poly_monic(g);
  UPoly d0 = f.poly_derivative(monic);
  UPoly a0 = f.poly_gcd(monic, d0);
  UPoly b = f.poly_divmod(monic, a0).first;
  UPoly c = f.poly_divmod(d0, a0).first;
  UPoly d = f.poly_sub(c, f.poly_derivative(b));
  for (int i = 1; b.degree() > 0; ++i) {
    UPoly a = f.poly_gcd(b, d);
    b = f.poly_divmod(b, a).first;
    c = f.poly_divmod(d, a).first;
    d = f.poly_sub(c, f.poly_derivative(b));
    if (a.degree() > 0) out.emplace_back(std::move(a), i);
  }
  return out;
}

}  // namespace germ
