#include "germ/cli.hpp"

#include "germ/blowup.hpp"
#include "germ/errors.hpp"
#include "germ/formulas.hpp"
#include "germ/json_io.hpp"
#include "germ/lctpoly.hpp"
#include "germ/newton.hpp"

#include "internal.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace germ {

namespace {

struct Globals {
  std::string json_in;
  std::string out;
  std::uint64_t seed = 0;
  int degree_cap = kDefaultDegreeCap;
  int weight_bound = 12;
  int extra_blowups = 0;
  unsigned threads = 1;
  bool manifest = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'", "io");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON in " + what + ": " + e.what(), e.byte);
  }
}

long parse_long(const std::string& text, const std::string& flag) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("--" + flag + " expects an integer, got '" + text + "'", "usage");
  }
  return v;
}

std::vector<long> parse_long_list(const std::string& text, const std::string& flag) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_long(item, flag));
  if (out.empty()) throw InputError("--" + flag + " expects a comma-separated list", "usage");
  return out;
}

// Flag values come from the command line first, then from the --json-in object.
class Inputs {
 public:
  Inputs(CLI::App* sub, const Json* in) : sub_(sub), in_(in) {}

  std::optional<std::string> get(const std::string& name) const {
    auto* opt = sub_->get_option_no_throw("--" + name);
    if (opt && opt->count() > 0) return opt->as<std::string>();
    if (in_ && in_->contains(name)) {
      const Json& v = (*in_)[name];
      return v.is_string() ? v.get<std::string>() : v.dump();
    }
    return std::nullopt;
  }

  std::vector<std::string> get_all(const std::string& name) const {
    auto* opt = sub_->get_option_no_throw("--" + name);
    if (opt && opt->count() > 0) return opt->as<std::vector<std::string>>();
    std::vector<std::string> out;
    if (in_ && in_->contains(name)) {
      const Json& v = (*in_)[name];
      if (v.is_array()) {
        for (const auto& e : v) out.push_back(e.is_string() ? e.get<std::string>() : e.dump());
      } else {
        out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      }
    }
    return out;
  }

  std::string need(const std::string& name) const {
    auto v = get(name);
    if (!v) throw InputError("missing required flag --" + name, "usage");
    return *v;
  }

  long need_long(const std::string& name) const { return parse_long(need(name), name); }
  Rational need_rational(const std::string& name) const { return parse_rational(need(name)); }

 private:
  CLI::App* sub_;
  const Json* in_;
};

GermDivisor divisor_arg(const std::string& text, const std::string& flag, int cap) {
  return divisor_from_json(parse_json(text, "--" + flag), cap);
}

// --divisor JSON or --poly EXPR (coefficient 1).
GermDivisor divisor_or_poly(const Inputs& in, int cap) {
  if (auto d = in.get("divisor")) return divisor_arg(*d, "divisor", cap);
  if (auto p = in.get("poly")) return GermDivisor({DivisorPart{1, parse_poly(*p)}}, cap);
  throw InputError("one of --divisor or --poly is required", "usage");
}

Poly2 poly_arg(const Inputs& in, const std::string& name, int cap) {
  Poly2 f = parse_poly(in.need(name));
  check_degree(f, cap);
  return f;
}

Json cmd_newton(const Inputs& in, const Globals& g) {
  GermDivisor d = divisor_or_poly(in, g.degree_cap);
  NewtonData nd = newton_data(d);
  Json j = to_json(nd);
  Json bounds = to_json(lct_newton_bounds(nd));
  for (auto& [k, v] : bounds.items()) j[k] = v;
  NdNmReport rep = check_ndnm_inequality(nd);
  j["nd_nm"] = rational_json(rep.product);
  return j;
}

Json cmd_wblow(const Inputs& in, const Globals& g) {
  GermDivisor d = divisor_or_poly(in, g.degree_cap);
  auto w = parse_long_list(in.need("weight"), "weight");
  if (w.size() != 2) throw InputError("--weight expects a1,a2", "usage");
  WeightVector wv(w[0], w[1]);
  Json j = to_json(weighted_blowup(d, wv));
  if (d.effective()) j["lct"] = to_json(lct_via_weight(d, wv));
  return j;
}

Json cmd_lct(const Inputs& in, const Globals& g, const ResolveOptions& opts) {
  GermDivisor b = divisor_arg(in.get("boundary").value_or(R"({"parts":[]})"), "boundary", g.degree_cap);
  GermDivisor c;
  if (auto t = in.get("target-divisor")) c = divisor_arg(*t, "target-divisor", g.degree_cap);
  else c = GermDivisor({DivisorPart{1, poly_arg(in, "target", g.degree_cap)}}, g.degree_cap);
  return to_json(lct_exact(b, c, opts));
}

Json cmd_mld(const Inputs& in, const Globals& g, const ResolveOptions& opts) {
  GermDivisor b = divisor_arg(in.get("boundary").value_or(R"({"parts":[]})"), "boundary", g.degree_cap);
  return to_json(mld_germ(b, opts));
}

std::vector<GermDivisor> fiber_points(const Inputs& in, const Globals& g) {
  auto all = in.get_all("boundary");
  if (all.empty()) throw InputError("at least one --boundary is required", "usage");
  std::vector<GermDivisor> pts;
  for (const auto& s : all) {
    Json j = parse_json(s, "--boundary");
    std::vector<DivisorPart> raw;
    if (!j.is_object() || !j.contains("parts")) throw InputError("divisor JSON must have \"parts\"", "schema");
    // The fiber x = 0 is kept even with coefficient zero.
    GermDivisor parsed = divisor_from_json(j, g.degree_cap);
    for (const auto& p : parsed.parts()) raw.push_back(p);
    pts.push_back(GermDivisor(raw, g.degree_cap, true));
  }
  return pts;
}

Json cmd_imult(const Inputs& in, const Globals& g, const ResolveOptions& opts) {
  Poly2 f = poly_arg(in, "f", g.degree_cap), h = poly_arg(in, "g", g.degree_cap);
  return Json{{"value", integer_json(intersection_multiplicity(f, h, opts))}, {"kind", "exact"}};
}

Json cmd_puiseux(const Inputs& in, const Globals& g, const ResolveOptions& opts) {
  Poly2 f = poly_arg(in, "f", g.degree_cap);
  Json j = to_json(first_puiseux_pair(f, opts));
  j["kind"] = "exact";
  return j;
}

PuiseuxPair pair_arg(const Inputs& in) {
  long m = in.need_long("m");
  std::string n = in.need("n");
  if (n == "inf") return PuiseuxPair{m, std::nullopt};
  return PuiseuxPair{m, parse_long(n, "n")};
}

Json cmd_prop33(const Inputs& in) {
  return Json{{"value", rational_json(prop33_lct(in.need_long("n"), in.need_long("k"), in.need_long("m1"), in.need_long("m2")))},
              {"kind", "exact"},
              {"hypothesis", "n, k, m1, m2 >= 1"}};
}

Json cmd_prop35(const Inputs& in) {
  PuiseuxPair p = pair_arg(in);
  long I = in.need_long("I");
  Rational v = prop35_lct(p, I, in.need_rational("s"), in.need_rational("t"));
  return Json{{"value", rational_json(v)}, {"kind", "exact"}, {"hypothesis", "I admissible for " + to_string(p)}};
}

Json cmd_admissible(const Inputs& in) {
  auto set = admissible_I(pair_arg(in));
  if (!set) return Json{{"value", "all positive integers"}, {"kind", "exact"}};
  Json arr = Json::array();
  for (long v : *set) arr.push_back(integer_json(v));
  return Json{{"value", arr}, {"kind", "exact"}};
}

Json cmd_bound(const Inputs& in) {
  Rational m = in.need_rational("m"), I = in.need_rational("I");
  if (auto l = in.get("lambda")) {
    Rational lambda = parse_rational(*l);
    if (m.get_den() != 1) throw InputError("with --lambda, --m must be the integer multiplicity", "usage");
    PuiseuxPair p{m.get_num().get_si(), std::nullopt};
    if (auto n = in.get("n")) p.n = parse_long(*n, "n");
    else if (p.m != 1) throw InputError("with --lambda and m >= 2, --n (second Puiseux exponent) is required", "usage");
    BoundResult r = cor38_bound(p, I, lambda);
    return Json{{"value", rational_json(r.value)}, {"kind", "lower"}, {"hypothesis", r.hypothesis}};
  }
  Json j{{"value", rational_json(thm18_bound(m, I))}, {"kind", "lower"}, {"hypothesis", "0 < m <= 1"}};
  if (m / I >= m - rat(1, 2)) j["second_bound"] = rational_json(thmA2_bound(m, I));
  return j;
}

Json cmd_toric(const Inputs& in) {
  CyclicQuotient q{in.need_long("r"), parse_long_list(in.need("weights"), "weights")};
  return Json{{"value", rational_json(cyclic_quotient_mld(q))}, {"kind", "exact"}, {"hypothesis", "isolated quotient"}};
}

Json cmd_varchenko(const Inputs& in, const Globals& g, const ResolveOptions& opts) {
  GermDivisor d = divisor_or_poly(in, g.degree_cap);
  int wb = g.weight_bound;
  if (auto w = in.get("weight-bound")) wb = static_cast<int>(parse_long(*w, "weight-bound"));
  std::vector<CoordinateChange> changes;
  for (const auto& c : in.get_all("change")) {
    auto semi = c.find(';');
    if (semi == std::string::npos) throw InputError("--change expects \"x_image;y_image\"", "usage");
    changes.push_back(CoordinateChange{parse_poly(c.substr(0, semi)), parse_poly(c.substr(semi + 1))});
  }
  bool oracle = !in.get("no-oracle").has_value();
  VarchenkoResult r = varchenko_upper_bound(d, wb, changes, oracle, opts);
  Json j = to_json(r.result);
  j["weight"] = Json::array({integer_json(r.weight.a1), integer_json(r.weight.a2)});
  j["change"] = integer_json(static_cast<long>(r.change));
  if (r.oracle) j["oracle"] = rational_json(*r.oracle);
  j["hypothesis"] = "coprime weights with a1 + a2 <= " + std::to_string(wb);
  return j;
}

Json cmd_certify(const Inputs& in) {
  LctPolytopeInstance inst;
  std::stringstream ss(in.need("components"));
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    std::stringstream cs(item);
    std::string a, b, c, extra;
    if (!std::getline(cs, a, ',') || !std::getline(cs, b, ',') || !std::getline(cs, c, ',') || std::getline(cs, extra, ',')) {
      throw InputError("--components expects \"m,I,b;...\"", "usage");
    }
    inst.components.push_back(PolytopeComponent{parse_long(a, "components"), parse_long(b, "components"), parse_rational(c)});
  }
  if (inst.components.empty()) throw InputError("--components is empty", "usage");
  Json j = to_json(thm18_certify(inst));
  j["kind"] = "lower";
  return j;
}

std::uint64_t fnv1a(const std::string& data, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json diagnostic(const std::string& code, const std::string& message) {
  return Json{{"schema", kSchemaVersion}, {"error", Json{{"code", code}, {"message", message}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lct, mld and bounds for plane curve germs", "germ-lct"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--json-in", g.json_in, "JSON object supplying flag values by name");
  app.add_option("--out", g.out, "write the JSON result to this file");
  app.add_option("--seed", g.seed, "seed for randomized choices");
  app.add_option("--degree-cap", g.degree_cap, "maximum total degree of input polynomials")->check(CLI::Range(1, 4096));
  app.add_option("--weight-bound", g.weight_bound, "bound on a1 + a2 in weight searches")->check(CLI::Range(2, 10000));
  app.add_option("--extra-blowups", g.extra_blowups, "extra blow-ups at resolved points")->check(CLI::Range(0, 64));
  app.add_option("--threads", g.threads, "worker threads for sweeps")->check(CLI::Range(1u, 256u));
  app.add_flag("--manifest", g.manifest, "wrap the result in a run manifest");

  auto* newton = app.add_subcommand("newton", "Newton polygon data and lct bounds");
  newton->add_option("--poly")->description("polynomial, coefficient 1");
  newton->add_option("--divisor")->description("divisor JSON {\"parts\":[{\"coeff\",\"poly\"}]}");
  auto* wblow = app.add_subcommand("wblow", "weighted blow-up discrepancy data");
  wblow->add_option("--poly")->description("polynomial, coefficient 1");
  wblow->add_option("--divisor")->description("divisor JSON {\"parts\":[{\"coeff\",\"poly\"}]}");
  wblow->add_option("--weight")->description("weight a1,a2");
  auto* lct = app.add_subcommand("lct", "lct(B; C) by log resolution");
  lct->add_option("--boundary")->description("boundary B as divisor JSON");
  lct->add_option("--target")->description("target curve C");
  lct->add_option("--target-divisor")->description("target as divisor JSON");
  auto* mld = app.add_subcommand("mld", "mld of a germ pair at the origin");
  mld->add_option("--boundary")->description("boundary B as divisor JSON");
  auto* flct = app.add_subcommand("fiber-lct", "lct of the fiber x = 0 over a curve germ");
  flct->add_option("--boundary")->description("divisor JSON at one point of the fiber; repeatable")->expected(0, 1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  auto* fmld = app.add_subcommand("fiber-mld", "mld over a curve germ");
  fmld->add_option("--boundary")->description("divisor JSON at one point of the fiber; repeatable")->expected(0, 1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  auto* imult = app.add_subcommand("imult", "local intersection multiplicity at the origin");
  imult->add_option("--f")->description("first curve");
  imult->add_option("--g")->description("second curve");
  auto* puis = app.add_subcommand("puiseux", "first Puiseux pair of an irreducible germ");
  puis->add_option("--f")->description("irreducible curve");

  auto* formula = app.add_subcommand("formula", "closed-form values and bounds");
  formula->require_subcommand(1);
  auto* p33 = formula->add_subcommand("prop33", "lct of x^n (x^m1 + y^m2)^k");
  for (const char* f : {"--n", "--k", "--m1", "--m2"}) p33->add_option(f)->description("integer or rational parameter");
  auto* p35 = formula->add_subcommand("prop35", "lct of sB + tC");
  for (const char* f : {"--m", "--n", "--I", "--s", "--t"}) p35->add_option(f)->description("integer or rational parameter");
  auto* adm = formula->add_subcommand("admissible", "admissible intersection numbers for a first pair");
  for (const char* f : {"--m", "--n"}) adm->add_option(f)->description("integer or rational parameter");
  auto* bound = formula->add_subcommand("bound", "lower bound from multiplicity and intersection number");
  for (const char* f : {"--m", "--I", "--lambda", "--n"}) bound->add_option(f)->description("integer or rational parameter");
  auto* toric = formula->add_subcommand("toric-mld", "mld of a cyclic quotient singularity");
  toric->add_option("--r")->description("group order r");
  toric->add_option("--weights")->description("weights a,b");
  auto* varch = formula->add_subcommand("varchenko", "weight search upper bound");
  varch->add_option("--poly")->description("polynomial, coefficient 1");
  varch->add_option("--divisor")->description("divisor JSON {\"parts\":[{\"coeff\",\"poly\"}]}");
  varch->add_option("--change")->description("coordinate change \"X;Y\"; repeatable")->expected(0, 1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  varch->add_flag("--no-oracle")->description("skip the resolution comparison");

  auto* certify = app.add_subcommand("certify", "certified lower bound from branch data");
  certify->add_option("--components")->description("branch data m,I,b;...");
  auto* sweep = app.add_subcommand("sweep", "grid comparison of formulas against resolution");
  std::string config_path;
  sweep->add_option("--config", config_path)->required();
  auto* examples = app.add_subcommand("examples", "replay the worked example fixtures");
  examples->add_option("--id")->description("fixture id, e.g. 3.4");

  std::vector<std::string> argv_store{"germ-lct"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  auto emit = [&](const Json& j) {
    std::string text = j.dump(2) + "\n";
    if (g.out.empty()) {
      out << text;
    } else {
      std::ofstream f(g.out, std::ios::binary);
      if (!f) throw InputError("cannot write file '" + g.out + "'", "io");
      f << text;
    }
  };

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      throw InputError(e.what(), "usage");
    }

    Json in_obj;
    std::string hashed;
    for (const auto& a : args) hashed += a + '\0';
    if (!g.json_in.empty()) {
      std::string text = read_file(g.json_in);
      hashed += text;
      in_obj = parse_json(text, g.json_in);
      if (!in_obj.is_object()) throw InputError("--json-in must contain a JSON object", "schema");
    }

    ResolveOptions opts;
    opts.seed = g.seed;
    opts.degree_cap = g.degree_cap;
    opts.extra_blowups = g.extra_blowups;

    Json result;
    bool check_pass = false;
    auto ctx = [&](CLI::App* sub) { return Inputs(sub, g.json_in.empty() ? nullptr : &in_obj); };
    if (newton->parsed()) result = cmd_newton(ctx(newton), g);
    else if (wblow->parsed()) result = cmd_wblow(ctx(wblow), g);
    else if (lct->parsed()) result = cmd_lct(ctx(lct), g, opts);
    else if (mld->parsed()) result = cmd_mld(ctx(mld), g, opts);
    else if (flct->parsed()) result = to_json(lct_relative_fiber(fiber_points(ctx(flct), g), opts));
    else if (fmld->parsed()) result = to_json(mld_relative_fiber(fiber_points(ctx(fmld), g), opts));
    else if (imult->parsed()) result = cmd_imult(ctx(imult), g, opts);
    else if (puis->parsed()) result = cmd_puiseux(ctx(puis), g, opts);
    else if (p33->parsed()) result = cmd_prop33(ctx(p33));
    else if (p35->parsed()) result = cmd_prop35(ctx(p35));
    else if (adm->parsed()) result = cmd_admissible(ctx(adm));
    else if (bound->parsed()) result = cmd_bound(ctx(bound));
    else if (toric->parsed()) result = cmd_toric(ctx(toric));
    else if (varch->parsed()) result = cmd_varchenko(ctx(varch), g, opts);
    else if (certify->parsed()) result = cmd_certify(ctx(certify));
    else if (sweep->parsed()) {
      std::string text = read_file(config_path);
      hashed += text;
      result = cli::run_sweep(parse_json(text, config_path), g.threads, opts);
      check_pass = true;
    } else if (examples->parsed()) {
      auto id = ctx(examples).get("id");
      result = cli::run_examples(id, opts);
      check_pass = true;
    }

    Json doc{{"schema", kSchemaVersion}};
    for (auto& [k, v] : result.items()) doc[k] = v;
    if (g.manifest) {
      Json argv_json = Json::array();
      for (const auto& a : args) argv_json.push_back(a);
      doc = Json{{"schema", kSchemaVersion},
                 {"manifest",
                  Json{{"tool", "germ-lct"},
                       {"version", kToolVersion},
                       {"command", argv_json},
                       {"input_hash", "fnv1a64:" + hex64(fnv1a(hashed))},
                       {"seed", std::to_string(g.seed)}}},
                 {"result", result}};
    }
    emit(doc);
    if (check_pass && !result.value("pass", false)) return 1;
    return 0;
  } catch (const NotLcError& e) {
    Json d = diagnostic(e.code(), e.what());
    d["error"]["witness"] = e.witness();
    out << d.dump(2) << "\n";
    err << "germ-lct: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    Json d = diagnostic(e.code(), e.what());
    d["error"]["offset"] = integer_json(static_cast<long>(e.offset()));
    out << d.dump(2) << "\n";
    err << "germ-lct: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    out << diagnostic(e.code(), e.what()).dump(2) << "\n";
    err << "germ-lct: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    out << diagnostic("internal", e.what()).dump(2) << "\n";
    err << "germ-lct: internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    out << diagnostic("internal", e.what()).dump(2) << "\n";
    err << "germ-lct: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace germ
