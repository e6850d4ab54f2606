#include "germ/formulas.hpp"
#include "germ/errors.hpp"

#include "internal.hpp"

#include <functional>

namespace germ::cli {

namespace {

struct Check {
  std::string label;
  std::string expected;
  std::function<std::string()> compute;
};

struct Fixture {
  std::string id;
  std::string title;
  std::vector<Check> checks;
};

std::string q(const Rational& r) { return to_string(r); }

GermDivisor div(std::initializer_list<std::pair<Rational, const char*>> parts) {
  std::vector<DivisorPart> raw;
  for (const auto& [c, p] : parts) raw.push_back(DivisorPart{c, parse_poly(p)});
  return GermDivisor(raw);
}

std::string list(const std::vector<long>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::vector<Fixture> fixtures(const ResolveOptions& opts) {
  std::vector<Fixture> out;

  Fixture f13{"1.3", "cyclic quotient 1/4m(1,2m-1) has mld 1/2", {}};
  for (long m = 1; m <= 5; ++m) {
    f13.checks.push_back({"m=" + std::to_string(m), "1/2",
                          [m] { return q(cyclic_quotient_mld(CyclicQuotient{4 * m, {1, 2 * m - 1}})); }});
  }
  out.push_back(f13);

  out.push_back(Fixture{"3.4",
                        "first Puiseux pairs",
                        {{"x^2+y^3", "(2, 3)", [opts] { return to_string(first_puiseux_pair(parse_poly("x^2+y^3"), opts)); }},
                         {"x+y^2", "(1, inf)", [opts] { return to_string(first_puiseux_pair(parse_poly("x+y^2"), opts)); }}}});

  Fixture f36{"3.6", "admissible intersection numbers", {}};
  for (auto [m, n, exp] : std::vector<std::tuple<long, long, std::string>>{{2, 5, "{2,4,5}"}, {2, 3, "{2,3}"}, {3, 7, "{3,6,7}"}}) {
    f36.checks.push_back({"(" + std::to_string(m) + ", " + std::to_string(n) + ")", exp,
                          [m = m, n = n] { return list(*admissible_I(PuiseuxPair{m, n})); }});
  }
  out.push_back(f36);

  out.push_back(Fixture{"3.9",
                        "x + y^2 against x at lambda = 1",
                        {{"formula", "1/2", [] { return q(example39_family(1, 2, 1)); }},
                         {"resolution", "1/2",
                          [opts] { return q(lct_exact(div({{1, "x+y^2"}}), div({{1, "x"}}), opts).value); }}}});

  out.push_back(Fixture{"3.12", "bound for m = 1, I = 2", {{"(1, 2)", "1/2", [] { return q(thm18_bound(1, 2)); }}}});

  Fixture f45{"4.5", "fiber through a tangency with a negative fiber coefficient", {}};
  for (const Rational& s : {rat(0), rat(1, 5), rat(1, 2)}) {
    GermDivisor b({DivisorPart{1, parse_poly("x-y^2")}, DivisorPart{-s, parse_poly("x")}});
    f45.checks.push_back({"lct s=" + q(s), q(rat(1, 2) + s), [b, opts] { return q(lct_relative_fiber({b}, opts).value); }});
    f45.checks.push_back({"mld s=" + q(s), q(1 + s), [b, opts] { return q(mld_relative_fiber({b}, opts).value); }});
  }
  out.push_back(f45);

  out.push_back(Fixture{"4.6",
                        "cusp with a negative transversal component",
                        {{"lct", "1/3", [opts] {
                            GermDivisor b({DivisorPart{1, parse_poly("x^2+y^3")}, DivisorPart{-1, parse_poly("y")}});
                            return q(lct_relative_fiber({b}, opts).value);
                          }}}});

  Fixture f48{"4.8", "cyclic quotient 1/(2m+1)(1,1,m) has mld (m+2)/(2m+1)", {}};
  for (long m = 1; m <= 5; ++m) {
    f48.checks.push_back({"m=" + std::to_string(m), q(rat(m + 2, 2 * m + 1)),
                          [m] { return q(cyclic_quotient_mld(CyclicQuotient{2 * m + 1, {1, 1, m}})); }});
  }
  out.push_back(f48);
  return out;
}

Json run_fixture(const Fixture& f) {
  Json checks = Json::array();
  bool pass = true;
  for (const auto& c : f.checks) {
    std::string got;
    try {
      got = c.compute();
    } catch (const Error& e) {
      got = std::string("error: ") + e.what();
    }
    bool ok = got == c.expected;
    pass = pass && ok;
    checks.push_back(Json{{"case", c.label}, {"expected", c.expected}, {"computed", got}, {"pass", ok}});
  }
  Json j{{"id", f.id}, {"title", f.title}};
  if (checks.size() == 1) {
    j["expected"] = checks[0]["expected"];
    j["computed"] = checks[0]["computed"];
  } else {
    j["checks"] = checks;
  }
  j["pass"] = pass;
  return j;
}

}  // namespace

Json run_examples(const std::optional<std::string>& id, const ResolveOptions& opts) {
  auto all = fixtures(opts);
  if (id) {
    for (const auto& f : all) {
      if (f.id == *id) return run_fixture(f);
    }
    std::string known;
    for (const auto& f : all) known += (known.empty() ? "" : ", ") + f.id;
    throw InputError("unknown example id '" + *id + "' (known: " + known + ")", "usage");
  }
  Json list = Json::array();
  bool pass = true;
  for (const auto& f : all) {
    Json r = run_fixture(f);
    pass = pass && r["pass"].get<bool>();
    list.push_back(r);
  }
  return Json{{"fixtures", list}, {"pass", pass}};
}

}  // namespace germ::cli
