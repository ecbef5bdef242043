// Command-line surface: parse a problem file, run the requested computation,
// and render tables, fits, verdicts, or decompositions.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <memory>
#include <iostream>
#include <sstream>

#include "betti/asymptotics.hpp"
#include "betti/boij_soderberg.hpp"
#include "betti/cache.hpp"
#include "betti/parse.hpp"
#include "betti/render.hpp"

namespace {

using namespace betti;

struct Options {
  std::string file;
  std::string order = "grevlex";
  std::string field;  // empty = pick the default for the subcommand
  std::string transform = "power";
  std::string format = "m2";
  std::string cache_dir;
  std::uint64_t seed = 0;
  int trials = 3;
  int k = 1;
  int kmax = 0;  // 0 = same as --k
  int jobs = 1;
};

TermOrder parse_order(const std::string& name) {
  if (name == "grevlex") return TermOrder::GrevLex;
  if (name == "lex") return TermOrder::Lex;
  throw std::invalid_argument("unknown order '" + name + "'");
}

Transform parse_transform(const std::string& name) {
  if (name == "power") return Transform::Power;
  if (name == "initial") return Transform::InitialOfPower;
  if (name == "gin") return Transform::GinOfPower;
  throw std::invalid_argument("unknown transform '" + name + "'");
}

CoeffField parse_field(const std::string& name) {
  if (name == "rational") return CoeffField::rationals();
  if (name.rfind("fp:", 0) == 0) return CoeffField::prime(std::stoull(name.substr(3)));
  throw std::invalid_argument("unknown field '" + name + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::unique_ptr<ResultCache> open_cache(const Options& opt) {
  std::string dir = opt.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("BETTI_CACHE_DIR")) dir = env;
  if (dir.empty()) return nullptr;
  return std::make_unique<ResultCache>(std::filesystem::path(dir));
}

// Canonical per-k cache key; any input that can change the result is included.
template <class F>
std::string cache_key(const Ideal<F>& base, const Options& opt, Transform tr, int k) {
  std::ostringstream key;
  key << "v" << kCacheProtocolVersion << "|n=" << base.nvars() << "|gens=";
  for (const auto& g : base.generators()) key << g.str() << ";";
  key << "|transform=" << transform_name(tr) << "|order=" << opt.order
      << "|k=" << k << "|field=" << base.field().descriptor().name();
  if (tr == Transform::GinOfPower)
    key << "|seed=" << opt.seed << "|trials=" << opt.trials << "|bound=100";
  return content_hash(key.str());
}

nlohmann::json kresult_to_json(const BettiTable& T, const std::optional<GinCertificate>& c) {
  nlohmann::json j{{"schema", kCacheProtocolVersion}, {"table", table_to_json(T)}};
  if (c)
    j["certificate"] = {{"trials", c->trials},
                        {"borel_fixed", c->borel_fixed},
                        {"all_trials_agree", c->all_trials_agree},
                        {"entry_bound", c->entry_bound}};
  return j;
}

std::pair<BettiTable, std::optional<GinCertificate>> kresult_from_json(
    const nlohmann::json& j) {
  std::optional<GinCertificate> cert;
  if (j.contains("certificate")) {
    const auto& c = j.at("certificate");
    cert = GinCertificate{c.at("trials").get<int>(), c.at("borel_fixed").get<bool>(),
                          c.at("all_trials_agree").get<bool>(),
                          c.at("entry_bound").get<int>()};
  }
  return {table_from_json(j.at("table")), cert};
}

// Per-k tables with cache lookups; misses fan out up to opt.jobs at a time
// and land back in k order, so stdout is independent of --jobs.
template <class F>
SeriesReport run_series(const Ideal<F>& base, const Options& opt, int k_min, int k_max,
                        std::unique_ptr<ResultCache>& cache) {
  SeriesOptions sopt;
  sopt.transform = parse_transform(opt.transform);
  sopt.order = parse_order(opt.order);
  sopt.k_min = k_min;
  sopt.k_max = k_max;
  sopt.trials = opt.trials;
  sopt.seed = opt.seed;
  sopt.jobs = opt.jobs;
  sopt.compute_spread = k_max > k_min;

  SeriesReport rep;
  rep.r = base.is_equigenerated() ? base.generation_degree() : -1;

  std::vector<int> missing;
  std::map<int, std::string> keys;
  for (int k = k_min; k <= k_max; ++k) {
    keys[k] = cache_key(base, opt, sopt.transform, k);
    std::optional<nlohmann::json> hit;
    if (cache) hit = cache->get(keys[k]);
    if (hit) {
      auto [T, cert] = kresult_from_json(*hit);
      rep.tables[k] = std::move(T);
      if (cert) rep.certificates[k] = *cert;
    } else {
      missing.push_back(k);
    }
  }

  const int jobs = std::max(1, opt.jobs);
  for (std::size_t b = 0; b < missing.size(); b += jobs) {
    std::vector<std::pair<int, std::future<detail::KResult<F>>>> batch;
    for (std::size_t i = b; i < std::min(missing.size(), b + jobs); ++i) {
      int k = missing[i];
      batch.emplace_back(k, std::async(jobs > 1 ? std::launch::async
                                                : std::launch::deferred,
                                       [&base, k, &sopt] {
                                         return detail::compute_k(base, k, sopt);
                                       }));
    }
    for (auto& [k, fut] : batch) {
      try {
        auto res = fut.get();
        if (cache) cache->put(keys[k], kresult_to_json(res.table, res.cert));
        rep.tables[k] = std::move(res.table);
        if (res.cert) rep.certificates[k] = *res.cert;
      } catch (const std::exception& e) {
        rep.failures[k] = e.what();
      }
    }
  }

  finalize_series(rep, base, sopt);
  return rep;
}

std::string fit_key_str(const std::pair<int, int>& key) {
  const auto [i, off] = key;
  return "beta[" + std::to_string(i) + "][" + (off >= 0 ? "+" : "") +
         std::to_string(off) + "]";
}

void print_verdict(std::ostream& out, const SeriesReport& rep) {
  const auto& s = rep.stabilization;
  if (s.stabilized)
    out << "k0 = " << *s.k0 << " (trailing window " << s.window << ")\n";
  else
    out << "not stabilized (trailing window " << s.window << ")\n";
  if (rep.window_c >= 0) {
    bool all_ok = true;
    for (const auto& [k, ok] : rep.window_ok) all_ok = all_ok && ok;
    out << "rows confined to [" << rep.r << "k, " << rep.r << "k+" << rep.window_c
        << "]: " << (all_ok ? "yes" : "no") << "\n";
  }
  if (rep.spread) out << "analytic spread = " << *rep.spread << "\n";
}

void print_fits(std::ostream& out, const SeriesReport& rep) {
  for (const auto& [key, fit] : rep.fits)
    out << fit_key_str(key) << " = " << fit.str() << "\n";
}

int finish_report(const SeriesReport& rep, const Options& opt, std::ostream& out,
                  const std::string& mode) {
  OutputFormat fmt = parse_format(opt.format);
  if (fmt == OutputFormat::Json) {
    out << report_to_json(rep).dump(2) << "\n";
  } else {
    if (mode == "series")
      for (const auto& [k, T] : rep.tables) {
        out << "k = " << k << "\n";
        out << render_table(T, fmt);
      }
    if (mode == "series" || mode == "stabilize") print_verdict(out, rep);
    if (mode == "series" || mode == "fit") print_fits(out, rep);
  }
  if (!rep.failures.empty()) {
    for (const auto& [k, msg] : rep.failures)
      std::cerr << "k = " << k << ": " << msg << "\n";
    return 3;
  }
  for (const auto& [k, T] : rep.tables)
    if (T.truncated) return 3;
  return 0;
}

// The gin family defaults to fp:32003; everything else to exact rationals.
CoeffField effective_field(const Options& opt, bool gin_like) {
  if (!opt.field.empty()) return parse_field(opt.field);
  return gin_like ? CoeffField::prime(32003) : CoeffField::rationals();
}

template <class F>
int dispatch(const std::string& cmd, const Ideal<F>& I,
             const std::vector<std::string>& names, const Options& opt,
             std::ostream& out) {
  TermOrder order = parse_order(opt.order);
  OutputFormat fmt = parse_format(opt.format);
  const int kmax = opt.kmax > 0 ? opt.kmax : opt.k;
  auto cache = open_cache(opt);

  if (cmd == "gb") {
    auto G = buchberger(I, order);
    for (const auto& g : G.elements) out << g.str(names) << "\n";
    return 0;
  }
  if (cmd == "initial") {
    auto in_ = initial_ideal(ideal_power(I, opt.k), order);
    for (const auto& m : in_.generators()) out << m.str(names) << "\n";
    return 0;
  }
  if (cmd == "power") {
    auto Ik = ideal_power(I, opt.k);
    for (const auto& g : Ik.generators()) out << g.str(names) << "\n";
    return 0;
  }
  if (cmd == "gin") {
    auto [M, cert] = gin(ideal_power(I, opt.k), order, opt.trials,
                         detail::k_seed<F>(opt.seed, opt.k));
    for (const auto& m : M.generators()) out << m.str(names) << "\n";
    out << "certified: " << (cert.certified() ? "yes" : "no") << " (trials "
        << cert.trials << ", " << (cert.borel_fixed ? "" : "not ")
        << "borel fixed, entry bound " << cert.entry_bound << ")\n";
    return 0;
  }
  if (cmd == "betti") {
    auto rep = run_series(I, opt, opt.k, opt.k, cache);
    if (!rep.failures.empty()) {
      std::cerr << rep.failures.begin()->second << "\n";
      return 3;
    }
    const auto& T = rep.tables.at(opt.k);
    out << render_table(T, fmt);
    return T.truncated ? 3 : 0;
  }
  if (cmd == "series" || cmd == "stabilize" || cmd == "fit") {
    auto rep = run_series(I, opt, 1, kmax, cache);
    return finish_report(rep, opt, out, cmd);
  }
  if (cmd == "bs") {
    auto rep = run_series(I, opt, opt.k, opt.k, cache);
    if (!rep.failures.empty()) {
      std::cerr << rep.failures.begin()->second << "\n";
      return 3;
    }
    auto dec = bs_decompose(rep.tables.at(opt.k));
    out << render_decomposition(dec, fmt);
    return 0;
  }
  throw std::invalid_argument("unknown subcommand '" + cmd + "'");
}

int run(const std::string& cmd, const Options& opt) {
  std::ostringstream out;  // buffered: emit all-or-nothing
  int code;
  if (cmd == "cache-gc") {
    auto cache = open_cache(opt);
    if (!cache) throw std::runtime_error("no cache directory configured");
    out << cache->gc() << " entries removed\n";
    code = 0;
  } else {
    auto prob = parse_problem(read_file(opt.file));
    const bool gin_like = cmd == "gin" || opt.transform == "gin";
    CoeffField field = opt.field.empty() && prob.field ? *prob.field
                                                       : effective_field(opt, gin_like);
    if (field.kind == CoeffField::Kind::Prime) {
      PrimeField F(field.p);
      code = dispatch(cmd, to_prime_field(prob.ideal, F), prob.var_names, opt, out);
    } else {
      code = dispatch(cmd, prob.ideal, prob.var_names, opt, out);
    }
  }
  std::cout << out.str();
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded Betti tables of ideal powers and their initial/generic "
               "initial systems"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--order", opt.order, "term order")
      ->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--field", opt.field, "coefficient field: rational or fp:<p>");
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--trials", opt.trials, "gin certification trials")
      ->check(CLI::PositiveNumber);
  app.add_option("--k", opt.k, "power exponent")->check(CLI::PositiveNumber);
  app.add_option("--kmax", opt.kmax, "largest power in a series")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"m2", "csv", "json"}));
  app.add_option("--cache-dir", opt.cache_dir, "result cache directory");
  app.add_option("--jobs", opt.jobs, "parallel per-k jobs")->check(CLI::PositiveNumber);

  std::vector<CLI::App*> subs;
  for (const char* name : {"gb", "initial", "power", "gin", "betti", "series",
                           "stabilize", "fit", "bs"}) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    sub->add_option("file", opt.file, "problem file")->required();
    if (std::string(name) != "gb")
      sub->add_option("--transform", opt.transform, "series transform")
          ->check(CLI::IsMember({"power", "initial", "gin"}));
    subs.push_back(sub);
  }
  auto* cache_cmd = app.add_subcommand("cache");
  cache_cmd->fallthrough();
  cache_cmd->add_subcommand("gc", "remove all cache entries");
  cache_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "cache") cmd = "cache-gc";
  // subcommand defaults interact with flags, so validate late
  try {
    return run(cmd, opt);
  } catch (const std::exception& e) {
    if (opt.format == "json")
      std::cerr << nlohmann::json{{"schema", 1}, {"error", e.what()}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
