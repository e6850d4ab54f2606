#include "germ/rational.hpp"

#include "germ/errors.hpp"

#include <cctype>

namespace germ {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw InputError("malformed rational '" + std::string(whole) + "'");
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  Integer num = parse_integer(s.substr(0, slash), text);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac(const Rational& q) { return q - Rational(floor_of(q)); }

Rational rational_gcd(const Rational& a, const Rational& b) {
  // gcd(p1/q1, p2/q2) = gcd(p1*q2, p2*q1) / (q1*q2)
  Integer n = gcd(Integer(a.get_num() * b.get_den()), Integer(b.get_num() * a.get_den()));
  Rational g(n, Integer(a.get_den() * b.get_den()));
  g.canonicalize();
  return abs(g);
}

}  // namespace germ
