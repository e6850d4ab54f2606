#include "germ/poly2.hpp"

#include "germ/errors.hpp"
#include "germ/field.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace germ {

WeightVector::WeightVector(long w1, long w2) : a1(w1), a2(w2) {
  if (a1 <= 0 || a2 <= 0) throw InputError("weights must be positive");
  if (std::gcd(a1, a2) != 1) throw InputError("weights must be coprime");
}

Poly2::Poly2(const Rational& c) {
  if (c != 0) terms_.emplace(Exp{0, 0}, c);
}

Poly2 Poly2::monomial(const Rational& c, int i, int j) {
  Poly2 p;
  p.add_term(c, i, j);
  return p;
}

Rational Poly2::coeff(int i, int j) const {
  auto it = terms_.find(Exp{i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int Poly2::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int Poly2::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

void Poly2::add_term(const Rational& c, int i, int j) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Exp{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e.first, e.second);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(-c, e.first, e.second);
  return *this;
}

Poly2& Poly2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
    }
  }
  return out;
}

Poly2 Poly2::operator-() const {
  Poly2 out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

Poly2 Poly2::pow(unsigned e) const {
  if (e > 0 && !is_zero() && static_cast<long>(total_degree()) * e > 100000) {
    throw InputError("polynomial power too large");
  }
  Poly2 result(1);
  Poly2 b = *this;
  while (e > 0) {
    if (e & 1u) result = result * b;
    e >>= 1u;
    if (e > 0) b = b * b;
  }
  return result;
}

namespace {

std::string coefficient_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string monomial_text(int i, int j) {
  std::string m;
  if (i > 0) m += i == 1 ? "x" : "x^" + std::to_string(i);
  if (j > 0) {
    if (!m.empty()) m += "*";
    m += j == 1 ? "y" : "y^" + std::to_string(j);
  }
  return m;
}

std::vector<std::pair<Poly2::Exp, Rational>> print_order(const Poly2::Terms& terms) {
  std::vector<std::pair<Poly2::Exp, Rational>> v(terms.begin(), terms.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second;
    int db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first > b.first.first;
  });
  return v;
}

}  // namespace

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : print_order(terms_)) {
    Rational a = abs(c);
    std::string m = monomial_text(e.first, e.second);
    std::string body;
    if (m.empty()) body = coefficient_text(a);
    else if (a == 1) body = m;
    else body = coefficient_text(a) + "*" + m;
    if (first) out = (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly2 run() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
    Poly2 p = expr();
    skip();
    if (pos_ < s_.size()) unexpected();
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void unexpected() {
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char ch = s_[pos_];
    if (ch == 'x' || ch == 'y' || ch == '(' || std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("implicit multiplication is not allowed", pos_);
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      throw ParseError(std::string("unknown variable '") + ch + "'", pos_);
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
  }

  Poly2 expr() {
    Poly2 acc = term();
    for (;;) {
      char ch = peek();
      if (ch == '+') {
        ++pos_;
        acc += term();
      } else if (ch == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly2 term() {
    Poly2 acc = unary();
    while (peek() == '*') {
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  void descend() {
    if (++depth_ > kMaxDepth) throw ParseError("nesting too deep", pos_);
  }

  Poly2 unary() {
    descend();
    Poly2 r = unary_body();
    --depth_;
    return r;
  }

  Poly2 unary_body() {
    char ch = peek();
    if (ch == '-') {
      ++pos_;
      return -unary();
    }
    if (ch == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly2 power() {
    Poly2 base = atom();
    if (peek() == '^') {
      ++pos_;
      if (peek() == '-') throw ParseError("negative exponent", pos_);
      std::size_t at = pos_;
      Integer e = integer();
      if (e > 100000) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) unexpected();
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Poly2 atom() {
    char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num = integer();
      if (peek() == '/') {
        ++pos_;
        skip();
        std::size_t at = pos_;
        Integer den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
        Rational q(num, den);
        q.canonicalize();
        return Poly2(q);
      }
      return Poly2(Rational(num));
    }
    if (ch == 'x') {
      ++pos_;
      return Poly2::x();
    }
    if (ch == 'y') {
      ++pos_;
      return Poly2::y();
    }
    if (ch == '(') {
      ++pos_;
      Poly2 inner = expr();
      if (peek() != ')') {
        if (pos_ >= s_.size()) throw ParseError("missing ')'", pos_);
        unexpected();
      }
      ++pos_;
      return inner;
    }
    unexpected();
  }

  static constexpr int kMaxDepth = 1000;
  std::string_view s_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Poly2 parse_poly(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------- basic ops

Poly2 substitute(const Poly2& f, const Poly2& x_image, const Poly2& y_image) {
  std::vector<Poly2> xp{Poly2(1)}, yp{Poly2(1)};
  Poly2 out;
  for (const auto& [e, c] : f.terms()) {
    while (static_cast<int>(xp.size()) <= e.first) xp.push_back(xp.back() * x_image);
    while (static_cast<int>(yp.size()) <= e.second) yp.push_back(yp.back() * y_image);
    out += (xp[static_cast<std::size_t>(e.first)] * yp[static_cast<std::size_t>(e.second)]) * c;
  }
  return out;
}

Poly2 swap_xy(const Poly2& f) {
  Poly2 out;
  for (const auto& [e, c] : f.terms()) out.add_term(c, e.second, e.first);
  return out;
}

Poly2 derivative_x(const Poly2& f) {
  Poly2 out;
  for (const auto& [e, c] : f.terms()) {
    if (e.first > 0) out.add_term(c * e.first, e.first - 1, e.second);
  }
  return out;
}

Poly2 derivative_y(const Poly2& f) {
  Poly2 out;
  for (const auto& [e, c] : f.terms()) {
    if (e.second > 0) out.add_term(c * e.second, e.first, e.second - 1);
  }
  return out;
}

int multiplicity_at_origin(const Poly2& f) {
  if (f.is_zero()) throw InputError("multiplicity of the zero polynomial");
  int m = f.total_degree();
  for (const auto& [e, c] : f.terms()) m = std::min(m, e.first + e.second);
  return m;
}

long weighted_multiplicity(const Poly2& f, const WeightVector& w) {
  if (f.is_zero()) throw InputError("weighted multiplicity of the zero polynomial");
  long m = -1;
  for (const auto& [e, c] : f.terms()) {
    long v = w.a1 * e.first + w.a2 * e.second;
    if (m < 0 || v < m) m = v;
  }
  return m;
}

Poly2 weighted_leading_term(const Poly2& f, const WeightVector& w) {
  long m = weighted_multiplicity(f, w);
  Poly2 out;
  for (const auto& [e, c] : f.terms()) {
    if (w.a1 * e.first + w.a2 * e.second == m) out.add_term(c, e.first, e.second);
  }
  return out;
}

Poly2 tangent_cone(const Poly2& f) { return weighted_leading_term(f, WeightVector(1, 1)); }

void check_degree(const Poly2& f, int cap) {
  if (f.total_degree() > cap) {
    throw InputError("degree guard exceeded: total degree " + std::to_string(f.total_degree()) +
                         " > " + std::to_string(cap),
                     "guard");
  }
}

Poly2 normalize_associate(const Poly2& f) {
  if (f.is_zero()) return f;
  Integer den = 1, num = 0;
  for (const auto& [e, c] : f.terms()) {
    den = lcm(den, Integer(c.get_den()));
    num = gcd(num, Integer(c.get_num()));
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (print_order(f.terms()).front().second < 0) scale = -scale;
  return f * scale;
}

// ---------------------------------------------------------------- gcd machinery

namespace {

// Polynomial in y with coefficients in Q[x].
using YPoly = std::vector<UPoly>;

const Field& qx() {
  static const Field f;
  return f;
}

YPoly to_ypoly(const Poly2& f) {
  YPoly out(static_cast<std::size_t>(std::max(f.degree_y() + 1, 0)));
  std::vector<std::vector<Num>> dense(out.size());
  for (const auto& [e, c] : f.terms()) {
    auto& row = dense[static_cast<std::size_t>(e.second)];
    if (static_cast<int>(row.size()) <= e.first) row.resize(static_cast<std::size_t>(e.first + 1));
    row[static_cast<std::size_t>(e.first)] = Num{c, {}};
  }
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = qx().poly(std::move(dense[j]));
  return out;
}

Poly2 from_ypoly(const YPoly& p) {
  Poly2 out;
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < p[j].c.size(); ++i) {
      out.add_term(p[j].c[i].q, static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

void ytrim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly content(const YPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    g = qx().poly_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

YPoly divide_coefficients(const YPoly& p, const UPoly& d) {
  YPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(qx().poly_divmod(c, d).first);
  return out;
}

YPoly primitive_part(const YPoly& p) {
  if (p.empty()) return p;
  return divide_coefficients(p, content(p));
}

// prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b, in y.
YPoly pseudo_remainder(YPoly a, const YPoly& b) {
  const Field& f = qx();
  const UPoly& lb = b.back();
  std::size_t db = b.size() - 1;
  long steps = static_cast<long>(a.size()) - static_cast<long>(db);
  while (!a.empty() && a.size() - 1 >= db) {
    UPoly la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = f.poly_mul(c, lb);
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[j + shift] = f.poly_sub(a[j + shift], f.poly_mul(la, b[j]));
    }
    a.pop_back();
    ytrim(a);
    --steps;
  }
  for (; steps > 0; --steps) {
    for (auto& c : a) c = f.poly_mul(c, lb);
  }
  return a;
}

UPoly upow(const UPoly& u, long e) {
  UPoly r = qx().poly({qx().one()});
  for (long i = 0; i < e; ++i) r = qx().poly_mul(r, u);
  return r;
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) { return qx().poly_divmod(a, b).first; }

// Subresultant remainder sequence keeps the coefficient degrees in x bounded.
YPoly primitive_gcd(YPoly a, YPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  UPoly g = qx().poly({qx().one()}), h = g;
  for (;;) {
    long delta = static_cast<long>(a.size()) - static_cast<long>(b.size());
    YPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (r.size() == 1) return YPoly{qx().poly({qx().one()})};
    a = std::move(b);
    b = divide_coefficients(r, qx().poly_mul(g, upow(h, delta)));
    g = a.back();
    h = delta == 0 ? h : exact_quotient(upow(g, delta), upow(h, delta - 1));
  }
  return primitive_part(b);
}

}  // namespace

Poly2 gcd(const Poly2& f, const Poly2& g) {
  if (f.is_zero()) return normalize_associate(g);
  if (g.is_zero()) return normalize_associate(f);
  YPoly a = to_ypoly(f), b = to_ypoly(g);
  UPoly ca = content(a), cb = content(b);
  UPoly c = qx().poly_gcd(ca, cb);
  YPoly pg = primitive_gcd(divide_coefficients(a, ca), divide_coefficients(b, cb));
  for (auto& coef : pg) coef = qx().poly_mul(coef, c);
  return normalize_associate(from_ypoly(pg));
}

std::optional<Poly2> divide_exact(const Poly2& f, const Poly2& g) {
  if (g.is_zero()) throw InputError("division by the zero polynomial");
  if (f.is_zero()) return Poly2();
  const Field& fq = qx();
  YPoly a = to_ypoly(f), b = to_ypoly(g);
  if (a.size() < b.size()) return std::nullopt;
  YPoly q(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    auto [lq, lr] = fq.poly_divmod(a.back(), b.back());
    if (!lr.is_zero()) return std::nullopt;
    std::size_t shift = a.size() - b.size();
    q[shift] = lq;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[j + shift] = fq.poly_sub(a[j + shift], fq.poly_mul(lq, b[j]));
    }
    a.pop_back();
    ytrim(a);
  }
  if (!a.empty()) return std::nullopt;
  ytrim(q);
  return from_ypoly(q);
}

std::vector<std::pair<Poly2, int>> squarefree_decomposition(const Poly2& f) {
  if (f.is_zero()) throw InputError("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<Poly2, int>> out;
  YPoly yf = to_ypoly(f);
  UPoly cont = content(yf);
  // Factors in x alone come from the content.
  for (auto& [u, e] : squarefree_decomposition(qx(), cont)) {
    YPoly one{u};
    out.emplace_back(normalize_associate(from_ypoly(one)), e);
  }
  Poly2 p = from_ypoly(divide_coefficients(yf, cont));
  if (p.degree_y() > 0) {
    Poly2 dp = derivative_y(p);
    Poly2 a0 = gcd(p, dp);
    Poly2 b = *divide_exact(p, a0);
    Poly2 c = *divide_exact(dp, a0);
    Poly2 d = c - derivative_y(b);
    for (int i = 1; b.total_degree() > 0; ++i) {
      Poly2 a = gcd(b, d);
      b = *divide_exact(b, a);
      c = *divide_exact(d, a);
      d = c - derivative_y(b);
      if (a.total_degree() > 0) out.emplace_back(normalize_associate(a), i);
    }
  }
  return out;
}

}  // namespace germ
