#include "germ/corpus.hpp"
#include "germ/errors.hpp"
#include "germ/formulas.hpp"
#include "germ/lctpoly.hpp"
#include "germ/newton.hpp"

#include "internal.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

namespace germ::cli {

namespace {

struct Row {
  std::string key;
  std::string formula;
  std::string oracle;
  std::string relation;  // "=", ">=", "<=" read as: formula relation oracle
  bool ok = false;
  std::string error;
};

using Task = std::function<Row()>;

std::pair<long, long> range(const Json& cfg, const char* name, long lo, long hi) {
  if (!cfg.contains(name)) return {lo, hi};
  const Json& r = cfg[name];
  if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer()) {
    throw InputError(std::string("\"") + name + "\" must be an integer range [lo, hi]", "schema");
  }
  long a = r[0].get<long>(), b = r[1].get<long>();
  if (a < 1 || b < a || b > 64) throw InputError(std::string("\"") + name + "\" range must satisfy 1 <= lo <= hi <= 64", "schema");
  return {a, b};
}

long integer(const Json& cfg, const char* name, long dflt, long lo, long hi) {
  if (!cfg.contains(name)) return dflt;
  if (!cfg[name].is_number_integer()) throw InputError(std::string("\"") + name + "\" must be an integer", "schema");
  long v = cfg[name].get<long>();
  if (v < lo || v > hi) {
    throw InputError(std::string("\"") + name + "\" must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", "schema");
  }
  return v;
}

std::vector<Rational> rationals(const Json& cfg, const char* name, std::vector<Rational> dflt) {
  if (!cfg.contains(name)) return dflt;
  if (!cfg[name].is_array()) throw InputError(std::string("\"") + name + "\" must be an array", "schema");
  std::vector<Rational> out;
  for (const auto& v : cfg[name]) {
    if (v.is_string()) out.push_back(parse_rational(v.get<std::string>()));
    else if (v.is_number_integer()) out.push_back(Rational(v.get<long>()));
    else throw InputError(std::string("entries of \"") + name + "\" must be rationals", "schema");
  }
  return out;
}

Row equal_row(std::string key, const Rational& formula, const Rational& oracle) {
  return Row{std::move(key), to_string(formula), to_string(oracle), "=", formula == oracle, {}};
}

std::vector<Task> prop33_tasks(const Json& cfg, const ResolveOptions& opts) {
  auto [n0, n1] = range(cfg, "n", 1, 3);
  auto [k0, k1] = range(cfg, "k", 1, 3);
  auto [a0, a1] = range(cfg, "m1", 1, 4);
  auto [b0, b1] = range(cfg, "m2", 1, 4);
  std::vector<Task> tasks;
  for (long n = n0; n <= n1; ++n)
    for (long k = k0; k <= k1; ++k)
      for (long m1 = a0; m1 <= a1; ++m1)
        for (long m2 = b0; m2 <= b1; ++m2) {
          tasks.push_back([=] {
            Poly2 g = Poly2::x().pow(m1) + Poly2::y().pow(m2);
            GermDivisor c({DivisorPart{n, Poly2::x()}, DivisorPart{k, g}}, opts.degree_cap);
            Rational oracle = lct_exact(GermDivisor(), c, opts).value;
            return equal_row("n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",m1=" + std::to_string(m1) +
                                 ",m2=" + std::to_string(m2),
                             prop33_lct(n, k, m1, m2), oracle);
          });
        }
  return tasks;
}

std::vector<Task> prop35_tasks(const Json& cfg, const ResolveOptions& opts) {
  long max_n = integer(cfg, "max_n", 7, 3, 15);
  auto values = rationals(cfg, "values", {rat(1, 2), rat(1), rat(2)});
  std::vector<Task> tasks;
  for (long n = 3; n <= max_n; ++n) {
    for (long m = 2; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      std::vector<std::pair<std::string, std::pair<Poly2, long>>> curves{{"x", {Poly2::x(), n}}, {"y", {Poly2::y(), m}}};
      for (long p = 1; p * m <= n; ++p) {
        curves.push_back({"x-y^" + std::to_string(p), {Poly2::x() - Poly2::y().pow(p), p * m}});
      }
      Poly2 b = Poly2::x().pow(m) + Poly2::y().pow(n);
      for (const auto& [name, curve] : curves) {
        for (const auto& s : values) {
          for (const auto& t : values) {
            tasks.push_back([=] {
              GermDivisor d({DivisorPart{s, b}, DivisorPart{t, curve.first}}, opts.degree_cap);
              Rational oracle = lct_exact(GermDivisor(), d, opts).value;
              return equal_row("m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",C=" + name + ",s=" +
                                   to_string(s) + ",t=" + to_string(t),
                               prop35_lct(PuiseuxPair{m, n}, curve.second, s, t), oracle);
            });
          }
        }
      }
    }
  }
  return tasks;
}

std::string seed_key(std::uint64_t s) {
  std::string d = std::to_string(s);
  return "seed=" + std::string(d.size() < 12 ? 12 - d.size() : 0, '0') + d;
}

std::vector<Task> thm18_tasks(const Json& cfg, const ResolveOptions& opts) {
  auto seed = static_cast<std::uint64_t>(integer(cfg, "seed", 1, 0, 1L << 40));
  auto count = static_cast<std::size_t>(integer(cfg, "count", 200, 1, 100000));
  std::vector<Task> tasks;
  for (const auto& cs : multiplicity_one_corpus(seed, count)) {
    tasks.push_back([cs, opts] {
      Rational oracle = lct_exact(cs.b, GermDivisor::single(1, cs.c), opts).value;
      Rational bound = thm18_bound(cs.m, cs.I);
      if (cs.I <= 2) bound = max(bound, rat(1, 2));
      return Row{seed_key(cs.seed), to_string(bound), to_string(oracle), "<=", bound <= oracle, {}};
    });
  }
  return tasks;
}

std::vector<Task> newton_tasks(const Json& cfg, const ResolveOptions& opts) {
  auto seed = static_cast<std::uint64_t>(integer(cfg, "seed", 1, 0, 1L << 40));
  auto count = static_cast<std::size_t>(integer(cfg, "count", 200, 1, 100000));
  std::vector<Task> tasks;
  for (const auto& cs : multiplicity_one_corpus(seed, count)) {
    tasks.push_back([cs, opts] {
      NewtonData nd = newton_data(cs.b);
      LctBounds bounds = lct_newton_bounds(nd);
      Rational oracle = lct_exact(GermDivisor(), cs.b, opts).value;
      bool ok = bounds.lower <= oracle && oracle <= bounds.upper && nd.nd * nd.nm <= 2 &&
                (!bounds.exact || oracle == bounds.upper);
      return Row{seed_key(cs.seed), "[" + to_string(bounds.lower) + ", " + to_string(bounds.upper) + "]",
                 to_string(oracle), "contains", ok, {}};
    });
  }
  return tasks;
}

std::vector<Task> certify_tasks(const Json& cfg, const ResolveOptions& opts) {
  auto seed = static_cast<std::uint64_t>(integer(cfg, "seed", 1, 0, 1L << 40));
  long count = integer(cfg, "count", 50, 1, 10000);
  std::vector<Task> tasks;
  for (long i = 0; i < count; ++i) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    tasks.push_back([s, opts] {
      std::mt19937_64 rng(s);
      LctPolytopeInstance inst = random_polytope_instance(rng);
      Certificate cert = thm18_certify(inst);
      Rational oracle = lct_exact(realize_instance(inst), GermDivisor::single(1, Poly2::x()), opts).value;
      bool ok = cert.value >= cert.target && cert.value <= oracle;
      return Row{seed_key(s), to_string(cert.value), to_string(oracle), "<=", ok, {}};
    });
  }
  return tasks;
}

std::vector<Task> example39_tasks(const Json& cfg, const ResolveOptions& opts) {
  std::vector<std::pair<long, long>> pairs{{1, 2}, {2, 3}, {2, 5}, {3, 4}, {3, 5}};
  if (cfg.contains("pairs")) {
    pairs.clear();
    for (const auto& p : cfg["pairs"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
        throw InputError("\"pairs\" entries must be [m, I]", "schema");
      }
      pairs.push_back({p[0].get<long>(), p[1].get<long>()});
    }
  }
  long steps = integer(cfg, "steps", 4, 1, 64);
  std::vector<Task> tasks;
  for (auto [m, I] : pairs) {
    for (long j = 0; j <= steps; ++j) {
      Rational lambda = rat(1, I) + (rat(1, m) - rat(1, I)) * rat(j, steps);
      tasks.push_back([=] {
        Poly2 f = Poly2::x().pow(m) + Poly2::y().pow(I);
        Rational oracle = lct_exact(GermDivisor::single(lambda, f), GermDivisor::single(1, Poly2::x()), opts).value;
        return equal_row("m=" + std::to_string(m) + ",I=" + std::to_string(I) + ",lambda=" + to_string(lambda),
                         example39_family(m, I, lambda), oracle);
      });
    }
  }
  return tasks;
}

std::vector<Row> execute(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<Row> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        rows[i] = tasks[i]();
      } catch (const std::exception& e) {
        rows[i] = Row{"task=" + std::to_string(i), "", "", "", false, e.what()};
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.key < b.key; });
  return rows;
}

}  // namespace

Json run_sweep(const Json& config, unsigned threads, const ResolveOptions& opts) {
  if (!config.is_object() || !config.contains("family") || !config["family"].is_string()) {
    throw InputError("sweep config must be an object with a string \"family\"", "schema");
  }
  std::string family = config["family"].get<std::string>();
  std::string mode = config.value("mode", std::string("exact"));
  if (mode != "exact") throw InputError("only \"mode\": \"exact\" is supported", "schema");
  std::vector<Task> tasks;
  if (family == "prop33") tasks = prop33_tasks(config, opts);
  else if (family == "prop35") tasks = prop35_tasks(config, opts);
  else if (family == "thm18") tasks = thm18_tasks(config, opts);
  else if (family == "newton") tasks = newton_tasks(config, opts);
  else if (family == "certify") tasks = certify_tasks(config, opts);
  else if (family == "example39") tasks = example39_tasks(config, opts);
  else throw InputError("unknown sweep family '" + family + "'", "schema");

  auto rows = execute(tasks, threads);
  Json table = Json::array(), details = Json::array();
  std::size_t bad = 0;
  for (const auto& r : rows) {
    Json j{{"case", r.key}, {"formula", r.formula}, {"oracle", r.oracle}, {"relation", r.relation}, {"ok", r.ok}};
    if (!r.error.empty()) j["error"] = r.error;
    if (!r.ok) {
      ++bad;
      details.push_back(j);
    }
    table.push_back(j);
  }
  return Json{{"family", family},
              {"mode", mode},
              {"cases", integer_json(static_cast<long>(rows.size()))},
              {"mismatches", integer_json(static_cast<long>(bad))},
              {"table", table},
              {"mismatch_details", details},
              {"pass", bad == 0}};
}

}  // namespace germ::cli
