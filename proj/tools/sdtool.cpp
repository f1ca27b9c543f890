// sdtool: generate, solve, verify and analyze small-doubling instances.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 no GAP cover found,
// 3 infeasible instance, 4 verification mismatch, 5 instance too large.

#include "smalldoubling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <thread>

namespace sd = smalldoubling;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kNoCover = 2, kInfeasible = 3, kMismatch = 4, kTooLarge = 5 };

struct SolveArgs {
  std::string path;
  bool json = false;
  std::string gap;
  std::size_t max_dim = 3;
  std::string volume_budget = "1000000";
  std::uint64_t perm_budget = sd::kDefaultPermutationBudget;
  bool modular = false;
  std::optional<std::uint64_t> seed;
  std::string sense;
  std::optional<std::uint64_t> lambda;
};

sd::MetaOptions meta_options(const SolveArgs& a) {
  sd::MetaOptions opt;
  opt.max_dim = a.max_dim;
  opt.volume_budget = sd::parse_bigint(a.volume_budget);
  opt.permutation_budget = a.perm_budget;
  opt.lambda_override = a.lambda;
  if (!a.gap.empty()) {
    auto spec = sd::parse_gap_spec(a.gap);
    if (!spec.gap) throw std::invalid_argument("--gap needs x= and L=");
    opt.gap = spec.cover();
  }
  if (a.modular) {
    std::mt19937_64 rng(a.seed.value_or(std::random_device{}()));
    opt.mode = sd::CoefficientMode::modular(sd::random_prime_62(rng));
  }
  return opt;
}

json gap_json(const sd::Gap& g) {
  json gens = json::array(), bounds = json::array();
  for (const auto& x : g.generators) gens.push_back(x.str());
  for (auto b : g.bounds) bounds.push_back(b);
  return {{"generators", gens}, {"bounds", bounds}};
}

json stats_json(const sd::MetaStats& s) {
  json j = {{"weights", s.weight_count},
            {"gap_source", s.gap_source},
            {"gap_volume", s.gap_volume.str()},
            {"enlarged_volume", s.enlarged_volume.str()},
            {"size_bound", s.size_bound.str()},
            {"permutation_built", s.permutation_built},
            {"max_exponent", s.max_exponent.str()},
            {"exponents_observed", s.exponents_observed},
            {"seconds", {{"gap", s.seconds_gap}, {"encode", s.seconds_encode}, {"solve", s.seconds_solve},
                         {"total", s.seconds_total}}}};
  if (s.sumset_size) j["sumset_size"] = *s.sumset_size;
  if (s.doubling) j["doubling"] = sd::to_string(*s.doubling);
  return j;
}

void print_stats(const sd::MetaStats& s) {
  std::cout << "weights         " << s.weight_count << '\n';
  if (s.doubling) std::cout << "doubling        " << sd::to_string(*s.doubling) << " (|A+A| = " << *s.sumset_size << ")\n";
  std::cout << "gap source      " << s.gap_source << '\n'
            << "|G|             " << s.gap_volume << '\n'
            << "|G'|            " << s.enlarged_volume << " (bound lambda^d |G| = " << s.size_bound << ")\n"
            << "max exponent    " << s.max_exponent << '\n'
            << "permutation     " << (s.permutation_built ? "built" : "not needed") << '\n'
            << "wall time       " << s.seconds_total << " s\n";
}

int cmd_solve(const SolveArgs& a) {
  const auto inst = sd::load_instance(a.path);
  const auto spec = sd::solver_spec_for(inst.kind);
  if (!a.sense.empty() && a.sense != sd::to_string(spec.sense))
    throw CLI::ValidationError("--sense", std::string(sd::to_string(inst.kind)) + " is always a " +
                                              sd::to_string(spec.sense) + " problem");
  const auto opt = meta_options(a);
  const std::string mode = opt.mode.is_exact() ? "exact" : "modular";

  if (inst.kind == sd::ProblemKind::minplus) {
    const auto r = sd::run_minplus_meta(inst, opt);
    if (a.json) {
      json values = json::array();
      for (const auto& v : r.values) values.push_back(v.str());
      std::cout << json{{"schema_version", 1}, {"kind", "minplus"}, {"sense", "min"}, {"values", values},
                        {"gap", gap_json(r.gap_used)}, {"lambda", r.lambda}, {"stats", stats_json(r.stats)}}
                       .dump(2)
                << '\n';
      return kOk;
    }
    std::cout << "kind            minplus\noutputs         ";
    for (std::size_t i = 0; i < r.values.size(); ++i) std::cout << (i ? " " : "") << r.values[i];
    std::cout << "\ngap             " << sd::to_string(r.gap_used) << "\nlambda          " << r.lambda << '\n';
    print_stats(r.stats);
    return kOk;
  }

  const auto r = sd::run_meta(inst, spec, opt);
  if (a.json) {
    json coords = json::array();
    for (auto c : r.coords.coords) coords.push_back(c);
    json j = {{"schema_version", 1},
              {"kind", sd::to_string(inst.kind)},
              {"sense", sd::to_string(r.sense)},
              {"optimum", r.optimum.str()},
              {"encoded_optimum", r.encoded_optimum.value.str()},
              {"coords", coords},
              {"optimum_count", r.stats.optimum_count.str()},
              {"mode", mode},
              {"gap", gap_json(r.gap_used)},
              {"lambda", r.lambda},
              {"stats", stats_json(r.stats)}};
    if (opt.mode.modulus) j["modulus"] = opt.mode.modulus->str();
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "kind            " << sd::to_string(inst.kind) << " (" << sd::to_string(r.sense) << ")\n"
            << "optimum         " << r.optimum << '\n'
            << "encoded         " << r.encoded_optimum.value << " " << sd::to_string(r.coords) << '\n'
            << "count           " << r.stats.optimum_count << " (" << mode << ")\n"
            << "gap             " << sd::to_string(r.gap_used) << '\n'
            << "lambda          " << r.lambda << '\n';
  print_stats(r.stats);
  return kOk;
}

std::string describe(const std::optional<sd::BigInt>& v) { return v ? v->str() : "infeasible"; }

int cmd_verify(const std::vector<std::string>& paths, std::size_t sweep, std::uint64_t seed, unsigned threads,
               const SolveArgs& a) {
  const auto opt = meta_options(a);
  if (sweep == 0) {
    if (paths.empty()) throw CLI::ValidationError("verify", "give instance paths or --sweep N");
    bool all = true;
    for (const auto& p : paths) {
      const auto inst = sd::load_instance(p);
      const auto v = sd::verify_instance(inst, opt);
      if (inst.kind == sd::ProblemKind::minplus)
        std::cout << p << ": " << (v.pass ? "PASS" : "FAIL " + v.detail) << '\n';
      else
        std::cout << p << ": meta " << describe(v.meta_optimum) << " oracle " << describe(v.oracle_optimum) << ' '
                  << (v.pass ? "PASS" : "FAIL (" + v.detail + ")") << '\n';
      all = all && v.pass;
    }
    return all ? kOk : kMismatch;
  }

  constexpr sd::ProblemKind kinds[] = {sd::ProblemKind::tsp, sd::ProblemKind::maxcut, sd::ProblemKind::ewclique,
                                       sd::ProblemKind::steiner};
  std::atomic<std::size_t> next{0}, passed{0};
  std::mutex out_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < sweep;) {
      const auto kind = kinds[i % 4];
      const std::uint64_t s = seed + i;
      std::string line;
      bool ok = false;
      try {
        const auto v = sd::verify_instance(sd::random_desk_instance(kind, s), opt);
        ok = v.pass;
        if (!ok) line = "meta " + describe(v.meta_optimum) + " oracle " + describe(v.oracle_optimum) + " (" + v.detail + ")";
      } catch (const std::exception& e) {
        line = std::string("error: ") + e.what();
      }
      if (ok) {
        ++passed;
      } else {
        std::lock_guard lock(out_mu);
        std::cout << "FAIL " << sd::to_string(kind) << " seed " << s << ": " << line << '\n';
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::cout << "sweep: " << passed << "/" << sweep << " PASS\n";
  return passed == sweep ? kOk : kMismatch;
}

int cmd_analyze(const std::string& path, std::size_t max_dim, const std::string& volume_budget) {
  const auto inst = sd::load_instance(path);
  const auto a = inst.weight_set();
  const auto twice = sd::sumset(a, a);
  std::cout << "|A|             " << a.size() << '\n'
            << "|A+A|           " << twice.size() << '\n'
            << "doubling        " << sd::to_string(sd::doubling_constant(a)) << " (" << twice.size() << '/'
            << a.size() << ")\n";
  constexpr std::size_t kWorkCap = 20'000'000;
  sd::WeightSet h = a;
  std::cout << "h-fold sizes    1:" << a.size();
  for (unsigned k = 2; k <= 4; ++k) {
    if (h.size() * a.size() > kWorkCap) {
      std::cout << ' ' << k << ":skipped";
      continue;
    }
    h = sd::sumset(h, a);
    std::cout << ' ' << k << ':' << h.size();
  }
  std::cout << '\n';
  try {
    const auto g = sd::gap_cover_search(a, max_dim, sd::parse_bigint(volume_budget));
    std::cout << "gap             " << sd::to_string(g) << " (volume " << g.volume() << ")\n";
  } catch (const sd::NoCoverFound&) {
    std::cout << "gap             none found\n";
  }
  if (inst.gap) std::cout << "instance gap    " << sd::to_string(*inst.gap) << '\n';
  return kOk;
}

int cmd_bench(std::size_t n, std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  sd::GenOptions g;
  g.kind = sd::ProblemKind::minplus;
  g.n = n;
  g.seed = seed;
  g.gap = sd::parse_gap_spec("x=1000000007,1009 L=30,60 offset=10^15");
  const auto inst = sd::generate_instance(g);

  sd::MetaOptions opt;
  opt.measure_doubling = false;
  auto t0 = Clock::now();
  const auto fast = sd::run_minplus_meta(inst, opt);
  const double t_fast = std::chrono::duration<double>(Clock::now() - t0).count();
  t0 = Clock::now();
  const auto slow = sd::minplus_naive(inst.sequence);
  const double t_slow = std::chrono::duration<double>(Clock::now() - t0).count();
  std::cout << "minplus n=" << n << " encoded bound " << fast.stats.enlarged_volume << '\n'
            << "  encoded path  " << t_fast << " s (solve " << fast.stats.seconds_solve << " s)\n"
            << "  naive         " << t_slow << " s\n"
            << "  ratio         " << t_slow / std::max(t_fast, 1e-9) << "x\n"
            << "  outputs agree " << (fast.values == slow ? "yes" : "NO") << '\n';
  return fast.values == slow ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sdtool: exact optimization over small-doubling weights"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate an instance from a hidden GAP");
  std::string kind_name, gap_spec, out_path;
  sd::GenOptions gopt;
  bool no_gap = false;
  gen->add_option("kind", kind_name, "tsp | maxcut | ewclique | steiner | minplus")->required();
  gen->add_option("-n,--n", gopt.n, "vertices (sequence length for minplus)");
  gen->add_option("--gap", gap_spec, "e.g. \"d=1 x=7 L=20 offset=10^12\" or \"set=3,5,9,17\"")->required();
  gen->add_option("--density", gopt.density, "edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gopt.seed);
  gen->add_option("-k,--k", gopt.k, "clique size");
  gen->add_option("--terminals", gopt.terminals, "number of Steiner terminals");
  gen->add_flag("--no-gap", no_gap, "do not record the GAP in the file");
  gen->add_option("-o,--output", out_path);

  SolveArgs sargs;
  auto add_solve_flags = [&](CLI::App* c) {
    c->add_option("--gap", sargs.gap, "GAP to use instead of the file's or a searched one");
    c->add_option("--max-dim", sargs.max_dim, "largest dimension for the cover search")->check(CLI::Range(1, 3));
    c->add_option("--volume-budget", sargs.volume_budget, "largest GAP volume the cover search accepts");
    c->add_option("--perm-budget", sargs.perm_budget, "largest encoded range for the permutation table");
    c->add_flag("--modular", sargs.modular, "count solutions modulo a random 62-bit prime");
    c->add_option("--seed", sargs.seed, "seed for the modular prime");
    c->add_option("--lambda", sargs.lambda, "override the enlargement factor (experiments only)");
  };
  auto* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("path", sargs.path)->required()->check(CLI::ExistingFile);
  solve->add_flag("--json", sargs.json);
  solve->add_option("--sense", sargs.sense, "min | max (must match the problem kind)");
  add_solve_flags(solve);

  auto* verify = app.add_subcommand("verify", "compare against brute force");
  std::vector<std::string> vpaths;
  std::size_t sweep = 0;
  std::uint64_t sweep_seed = 1;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  verify->add_option("paths", vpaths)->check(CLI::ExistingFile);
  verify->add_option("--sweep", sweep, "verify N random instances instead");
  verify->add_option("--sweep-seed", sweep_seed);
  verify->add_option("--threads", threads);
  add_solve_flags(verify);

  auto* analyze = app.add_subcommand("analyze", "report additive structure of the weights");
  std::string apath, abudget = "1000000";
  std::size_t adim = 3;
  analyze->add_option("path", apath)->required()->check(CLI::ExistingFile);
  analyze->add_option("--max-dim", adim)->check(CLI::Range(1, 3));
  analyze->add_option("--volume-budget", abudget);

  auto* bench = app.add_subcommand("bench", "time min-plus against the naive loop");
  std::size_t bn = 4096;
  std::uint64_t bseed = 1;
  bench->add_option("-n,--n", bn);
  bench->add_option("--seed", bseed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      auto kind = sd::parse_kind(kind_name);
      if (!kind) throw CLI::ValidationError("kind", "unknown problem kind '" + kind_name + "'");
      gopt.kind = *kind;
      gopt.gap = sd::parse_gap_spec(gap_spec);
      gopt.record_gap = !no_gap;
      const auto text = sd::write_instance(sd::generate_instance(gopt));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream(out_path, std::ios::binary) << text;
      }
      return kOk;
    }
    if (solve->parsed()) return cmd_solve(sargs);
    if (verify->parsed()) return cmd_verify(vpaths, sweep, sweep_seed, threads, sargs);
    if (analyze->parsed()) return cmd_analyze(apath, adim, abudget);
    if (bench->parsed()) return cmd_bench(bn, bseed);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const sd::NoCoverFound& e) {
    std::cerr << "no GAP cover found: " << e.what() << "\nsupply one with --gap or a gap section\n";
    return kNoCover;
  } catch (const sd::InfeasibleInstance& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const sd::TooLarge& e) {
    std::cerr << "too large: " << e.what() << '\n';
    return kTooLarge;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
