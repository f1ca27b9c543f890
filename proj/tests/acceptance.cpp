// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "smalldoubling.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace smalldoubling;

namespace {

// Pinned limits.
constexpr double kKappaSuiteSeconds = 10.0;
constexpr double kOracleSuiteSeconds = 300.0;
constexpr double kMinPlusSpeedup = 5.0;  // informational
constexpr int kKappaGaps = 1200;
constexpr int kPairsPerGap = 25;
constexpr int kOracleInstancesPerKind = 100;
constexpr int kCliqueIdentityGraphs = 60;
constexpr int kMinPlusSequences = 200;
constexpr std::size_t kMinPlusMaxLength = 4096;
constexpr int kTwoCoverSets = 20;
constexpr std::uint64_t kPermutationRangeCap = 100'000;
constexpr std::uint64_t kAllPairsRangeCap = 1'500;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << "first failure: " << why << "; ";
    pass = false;
  }
};

// Meta runs across criteria 4, 8 and 9 feed the size-bound criterion.
struct SizeLedger {
  std::uint64_t runs = 0, violations = 0;
  std::string first;
  void record(const MetaStats& s) {
    ++runs;
    const bool ok = s.enlarged_volume <= s.size_bound && s.max_exponent < s.enlarged_volume;
    if (!ok && violations++ == 0)
      first = "|G'|=" + s.enlarged_volume.str() + " bound=" + s.size_bound.str() + " max=" + s.max_exponent.str();
  }
} ledger;

BigInt random_below(std::mt19937_64& rng, const BigInt& n) {
  // n <= 2^64 here
  if (n <= 1) return 0;
  const auto m = n.convert_to<unsigned __int128>();
  unsigned __int128 r;
  const unsigned __int128 limit = (~static_cast<unsigned __int128>(0) / m) * m;
  do r = (static_cast<unsigned __int128>(rng()) << 64) | rng();
  while (r >= limit);
  return BigInt(static_cast<std::uint64_t>(r % m));
}

EnlargedGap random_kappa_gap(std::mt19937_64& rng, std::size_t max_dim, std::uint64_t max_bound) {
  const std::size_t d = 1 + rng() % max_dim;
  std::vector<BigInt> gens;
  std::vector<std::uint64_t> bounds;
  const BigInt two63 = BigInt(1) << 63;
  for (std::size_t i = 0; i < d; ++i) {
    gens.push_back(1 + random_below(rng, two63));
    bounds.push_back(rng() % (max_bound + 1));
  }
  return EnlargedGap(Gap(gens, bounds), 1 + rng() % 8);
}

CoordTuple random_tuple(std::mt19937_64& rng, const std::vector<std::uint64_t>& cap) {
  CoordTuple t{std::vector<std::uint64_t>(cap.size())};
  for (std::size_t i = 0; i < cap.size(); ++i) t.coords[i] = rng() % (cap[i] + 1);
  return t;
}

BigInt dot(const Gap& g, const CoordTuple& t) {
  BigInt s = 0;
  for (std::size_t i = 0; i < g.dim(); ++i) s += g.generators[i] * BigInt(t.coords[i]);
  return s;
}

// Reference mixed-radix value written out as a sum of place values.
BigInt place_value(const EnlargedGap& g, const CoordTuple& t) {
  BigInt total = 0;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    BigInt place = t.coords[i];
    for (std::size_t j = i + 1; j < g.dim(); ++j) place *= BigInt(g.enlarged_bounds()[j]) + 1;
    total += place;
  }
  return total;
}

// ---------------------------------------------------------------- 1 and 2

void kappa_suites(Outcome& algebra, Outcome& roundtrip) {
  std::mt19937_64 rng(1001);
  const auto start = Clock::now();
  std::uint64_t pairs = 0, same_prefix = 0, smaller_prefix = 0, sums = 0;
  for (int round = 0; round < kKappaGaps; ++round) {
    const auto g = random_kappa_gap(rng, 5, 8);
    const auto& cap = g.enlarged_bounds();
    const std::size_t d = g.dim();

    // range bound: the largest tuple encodes to prod(lambda L_i + 1) - 1
    CoordTuple top{cap};
    if (kappa(g, top).value != g.range() - 1) algebra.fail("range top at round " + std::to_string(round));

    for (int k = 0; k < kPairsPerGap; ++k) {
      const auto s = random_tuple(rng, cap);
      auto t = random_tuple(rng, cap);
      if (k % 3 == 0 && d > 1) {  // force the equal-prefix branch
        t = s;
        t.coords[d - 1] = rng() % (cap[d - 1] + 1);
      }
      const auto ks = kappa(g, s), kt = kappa(g, t);
      ++pairs;
      if (ks.value < 0 || ks.value >= g.range()) algebra.fail("range");
      if (ks.value != place_value(g, s)) algebra.fail("place value");
      if ((s == t) != (ks == kt)) algebra.fail("injectivity");
      if (s != t) {
        const auto& [lo, hi] = s < t ? std::pair{s, t} : std::pair{t, s};
        const bool prefix_equal = std::equal(lo.coords.begin(), lo.coords.end() - 1, hi.coords.begin());
        (prefix_equal ? same_prefix : smaller_prefix)++;
        if (!(kappa(g, lo) < kappa(g, hi))) algebra.fail("lexicographic monotonicity");
      }
      // homomorphism: pick u so that s + u stays inside the enlarged box
      CoordTuple u{std::vector<std::uint64_t>(d)}, su{std::vector<std::uint64_t>(d)};
      for (std::size_t i = 0; i < d; ++i) {
        u.coords[i] = rng() % (cap[i] - s.coords[i] + 1);
        su.coords[i] = s.coords[i] + u.coords[i];
      }
      ++sums;
      if (kappa(g, su) != ks + kappa(g, u)) algebra.fail("homomorphism");

      if (kappa_inv(g, ks) != s) roundtrip.fail("kappa_inv(kappa(t)) != t");
      if (true_value(g, ks) != dot(g.base(), s)) roundtrip.fail("true_value(kappa(t)) != sum x_i l_i");
    }
  }
  const double secs = since(start);
  if (same_prefix == 0 || smaller_prefix == 0) algebra.fail("a monotonicity branch was never exercised");
  if (secs >= kKappaSuiteSeconds) algebra.fail("runtime " + std::to_string(secs) + " s");
  algebra.note << kKappaGaps << " GAPs, " << pairs << " pairs, " << sums << " sums; branches: equal prefix "
               << same_prefix << ", smaller prefix " << smaller_prefix << "; " << secs << " s";
  roundtrip.note << pairs << " tuples on the same corpus";
}

// ---------------------------------------------------------------- 3

void permutation_suite(Outcome& out) {
  std::mt19937_64 rng(3003);
  std::uint64_t gaps = 0, adjacent = 0, exhaustive = 0;
  while (gaps < 300) {
    const std::size_t d = 1 + rng() % 4;
    std::vector<BigInt> gens;
    std::vector<std::uint64_t> bounds;
    for (std::size_t i = 0; i < d; ++i) {
      // small generators force many equal true values across tuples
      gens.push_back(BigInt(1 + rng() % (gaps % 2 ? 20 : 1'000'000'000'000ULL)));
      bounds.push_back(rng() % 9);
    }
    const EnlargedGap g(Gap(gens, bounds), 1 + rng() % 4);
    if (g.range() > kPermutationRangeCap) continue;
    ++gaps;
    const auto table = build_permutation(g, kPermutationRangeCap);
    const ValueOrder decode(g, 0);
    const auto& s = table.sorted_entries();
    // decode order is a strict total order, so increasing adjacent pairs give
    // agreement on every pair by transitivity
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      ++adjacent;
      if (!decode.less(EncodedWeight(s[i].encoded), EncodedWeight(s[i + 1].encoded))) out.fail("adjacent pair");
    }
    for (std::size_t r = 0; r < s.size(); ++r)
      if (table.rank(EncodedWeight(s[r].encoded)) != r) out.fail("rank is not a bijection");
    if (s.size() <= kAllPairsRangeCap) {
      for (std::uint64_t a = 0; a < s.size(); ++a)
        for (std::uint64_t b = 0; b < s.size(); ++b) {
          ++exhaustive;
          const EncodedWeight ea(a), eb(b);
          if ((table.rank(ea) < table.rank(eb)) != decode.less(ea, eb)) out.fail("pair mismatch");
        }
    }
  }
  out.note << gaps << " GAPs with range <= " << kPermutationRangeCap << ", " << adjacent << " adjacent pairs, "
           << exhaustive << " exhaustive pairs";
}

// ---------------------------------------------------------------- 4

void oracle_suite(Outcome& out) {
  const auto start = Clock::now();
  constexpr ProblemKind kinds[] = {ProblemKind::tsp, ProblemKind::maxcut, ProblemKind::ewclique, ProblemKind::steiner};
  std::ostringstream per_kind;
  for (auto kind : kinds) {
    int feasible = 0, infeasible = 0;
    for (int i = 0; i < kOracleInstancesPerKind; ++i) {
      const std::uint64_t seed = 40'000 + 1000 * static_cast<std::uint64_t>(kind) + i;
      const auto inst = random_desk_instance(kind, seed);
      try {
        const auto oracle = inst.kind == ProblemKind::tsp        ? tsp_bf(inst)
                            : inst.kind == ProblemKind::maxcut   ? std::optional(maxcut_bf(inst))
                            : inst.kind == ProblemKind::ewclique ? clique_bf(inst)
                                                                 : steiner_bf(inst);
        std::optional<MetaResult> meta;
        try {
          meta = run_meta(inst);
          ledger.record(meta->stats);
        } catch (const InfeasibleInstance&) {
        }
        if (meta.has_value() != oracle.has_value()) {
          out.fail(std::string(to_string(kind)) + " seed " + std::to_string(seed) + " feasibility");
          continue;
        }
        if (!meta) {
          ++infeasible;
          continue;
        }
        ++feasible;
        if (meta->optimum != oracle->optimum)
          out.fail(std::string(to_string(kind)) + " seed " + std::to_string(seed) + " optimum " + meta->optimum.str() +
                   " vs " + oracle->optimum.str());
        if (meta->stats.optimum_count != oracle->count)
          out.fail(std::string(to_string(kind)) + " seed " + std::to_string(seed) + " count");
      } catch (const std::exception& e) {
        out.fail(std::string(to_string(kind)) + " seed " + std::to_string(seed) + ": " + e.what());
      }
    }
    per_kind << to_string(kind) << " " << feasible << "+" << infeasible << " infeasible; ";
  }
  const double secs = since(start);
  if (secs >= kOracleSuiteSeconds) out.fail("runtime " + std::to_string(secs) + " s");
  out.note << per_kind.str() << secs << " s";
}

// ---------------------------------------------------------------- 5

void clique_identity_suite(Outcome& out) {
  std::uint64_t triangles = 0, graphs = 0;
  for (int i = 0; i < kCliqueIdentityGraphs; ++i) {
    auto inst = random_desk_instance(ProblemKind::ewclique, 50'000 + i);
    if (inst.edges.empty()) continue;
    ++graphs;
    const std::size_t k = inst.k, part = k / 3;
    const auto weights = inst.weight_set();
    const auto coords = get_gap_coordinates(weights, *inst.gap);
    const EnlargedGap eg(*inst.gap, SolverSpec{ProblemKind::ewclique, Sense::maximize}.lambda_bound(inst));
    std::vector<EncodedWeight> enc;
    BigInt w_enc = 0;
    for (const auto& e : inst.edges) {
      enc.push_back(kappa(eg, coords[*weights.index_of(e.weight)]));
      w_enc = std::max(w_enc, enc.back().value);
    }
    std::vector<std::optional<BigInt>> adj(inst.n * inst.n);
    for (std::size_t j = 0; j < inst.edges.size(); ++j) {
      adj[inst.edges[j].u * inst.n + inst.edges[j].v] = enc[j].value;
      adj[inst.edges[j].v * inst.n + inst.edges[j].u] = enc[j].value;
    }
    const auto h = build_clique_aux_graph(inst, enc, k);
    const BigInt edge_cap = BigInt(3 * part * part - part) * w_enc;
    for (const auto& row : h.adj)
      for (const auto& [j, w] : row)
        if (w > edge_cap) out.fail("H-edge weight above (3k'^2 - k') W_enc");
    for_each_triangle(h, [&](std::size_t a, std::size_t b, std::size_t c, const BigInt& wab, const BigInt& wbc,
                             const BigInt& wca) {
      ++triangles;
      std::vector<std::size_t> verts;
      for (auto x : {a, b, c}) verts.insert(verts.end(), h.nodes[x].begin(), h.nodes[x].end());
      BigInt clique = 0;
      for (std::size_t p = 0; p < verts.size(); ++p)
        for (std::size_t q = p + 1; q < verts.size(); ++q) clique += *adj[verts[p] * inst.n + verts[q]];
      if (wab + wbc + wca != 2 * clique) out.fail("triangle weight is not twice the clique weight");
    });
  }
  if (graphs < 50) out.fail("only " + std::to_string(graphs) + " graphs");
  out.note << graphs << " graphs, " << triangles << " H-triangles";
}

// ---------------------------------------------------------------- 7

void doubling_suite(Outcome& out) {
  if (doubling_constant(WeightSet{2, 4, 6, 8}) != Rational(7, 4)) out.fail("{2,4,6,8}");
  if (doubling_constant(WeightSet{3, 5, 9, 17}) != Rational(10, 4)) out.fail("{3,5,9,17}");
  if (sumset(WeightSet{3, 5, 9, 17}, WeightSet{3, 5, 9, 17}).size() != 10) out.fail("|A+A| of {3,5,9,17}");
  std::mt19937_64 rng(7007);
  int aps = 0;
  for (; aps < 60; ++aps) {
    const std::size_t n = 1 + rng() % 1000;
    const BigInt start = random_below(rng, BigInt(1) << 62);
    const BigInt step = 1 + random_below(rng, BigInt(1'000'000'000'000ULL));
    std::vector<BigInt> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(start + step * BigInt(i));
    const WeightSet a(v);
    if (sumset(a, a).size() != 2 * n - 1) out.fail("AP of length " + std::to_string(n));
  }
  out.note << "7/4 and 10/4 reproduced; " << aps << " random APs with |A+A| = 2n-1";
}

// ---------------------------------------------------------------- 8

void minplus_suite(Outcome& out) {
  std::uint64_t checked = 0;
  std::size_t longest = 0;
  for (int i = 0; i < kMinPlusSequences; ++i) {
    GenRng rng(80'000 + i);
    GenOptions g;
    g.kind = ProblemKind::minplus;
    g.seed = 80'000 + i;
    g.n = i < 10 ? kMinPlusMaxLength : 1 + rng.below(kMinPlusMaxLength);
    g.gap = random_gap_spec(rng, 3, BigInt(1'000'000'000'000ULL), 12);
    if (rng.chance(0.5)) g.gap.offset = BigInt(1 + rng.below(1'000'000'000'000'000ULL));
    const auto inst = generate_instance(g);
    longest = std::max(longest, inst.sequence.size());
    try {
      MetaOptions opt;
      opt.measure_doubling = false;
      const auto r = run_minplus_meta(inst, opt);
      ledger.record(r.stats);
      std::vector<std::int64_t> small;
      for (const auto& v : inst.sequence) small.push_back(narrow<std::int64_t>(v));
      const auto want = minplus_naive(small);
      bool same = want.size() == r.values.size();
      for (std::size_t j = 0; same && j < want.size(); ++j) same = r.values[j] == want[j];
      if (!same) out.fail("sequence " + std::to_string(i));
      ++checked;
    } catch (const std::exception& e) {
      out.fail("sequence " + std::to_string(i) + ": " + e.what());
    }
  }

  // informational timing at n = 4096 with encoded bound below 2^14
  GenOptions g;
  g.kind = ProblemKind::minplus;
  g.n = kMinPlusMaxLength;
  g.seed = 88;
  g.gap = parse_gap_spec("x=1000000007,1009 L=30,60");
  const auto inst = generate_instance(g);
  MetaOptions opt;
  opt.measure_doubling = false;
  auto t0 = Clock::now();
  const auto fast = run_minplus_meta(inst, opt);
  const double t_fast = since(t0);
  std::vector<std::int64_t> small;
  for (const auto& v : inst.sequence) small.push_back(narrow<std::int64_t>(v));
  t0 = Clock::now();
  const auto slow = minplus_naive(small);
  const double t_slow = since(t0);
  for (std::size_t j = 0; j < slow.size(); ++j)
    if (fast.values.at(j) != slow[j]) out.fail("timing instance disagrees");
  const double ratio = t_slow / std::max(fast.stats.seconds_solve, 1e-9);
  out.note << checked << " sequences (longest " << longest << ") equal; timing n=4096 B=" << fast.stats.enlarged_volume
           << ": naive int64 " << t_slow << " s, bounded-value solve " << fast.stats.seconds_solve
           << " s (end to end " << t_fast << " s), ratio " << ratio << "x"
           << (ratio >= kMinPlusSpeedup ? " (>= 5x)" : " (below the informational 5x)");
}

// ---------------------------------------------------------------- 9

void two_cover_suite(Outcome& out) {
  constexpr ProblemKind kinds[] = {ProblemKind::tsp, ProblemKind::maxcut, ProblemKind::ewclique, ProblemKind::steiner};
  int compared = 0;
  for (int i = 0; i < kTwoCoverSets; ++i) {
    const auto kind = kinds[i % 4];
    auto inst = random_desk_instance(kind, 90'000 + i);
    const Gap first = *inst.gap;
    // second cover: dimensions reversed, every bound one larger
    Gap second = first;
    std::reverse(second.generators.begin(), second.generators.end());
    std::reverse(second.bounds.begin(), second.bounds.end());
    for (auto& b : second.bounds) ++b;
    inst.gap.reset();
    try {
      MetaOptions a, b;
      a.gap = first;
      b.gap = second;
      std::optional<BigInt> ra, rb;
      try {
        const auto r = run_meta(inst, a);
        ledger.record(r.stats);
        ra = r.optimum;
      } catch (const InfeasibleInstance&) {
      }
      try {
        const auto r = run_meta(inst, b);
        ledger.record(r.stats);
        rb = r.optimum;
      } catch (const InfeasibleInstance&) {
      }
      if (ra != rb) out.fail(std::string(to_string(kind)) + " set " + std::to_string(i));
      ++compared;
    } catch (const std::exception& e) {
      out.fail(std::string(to_string(kind)) + " set " + std::to_string(i) + ": " + e.what());
    }
  }
  out.note << compared << " weight sets, two covers each";
}

void report(int id, const std::string& name, const Outcome& o, int& failures) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << name << ": " << o.note.str() << std::endl;
  if (!o.pass) ++failures;
}

}  // namespace

int main() {
  int failures = 0;
  Outcome c1, c2, c3, c4, c5, c6, c7, c8, c9;
  kappa_suites(c1, c2);
  report(1, "kappa algebra", c1, failures);
  report(2, "round trip", c2, failures);
  permutation_suite(c3);
  report(3, "permutation agreement", c3, failures);
  oracle_suite(c4);
  report(4, "end-to-end oracle equivalence", c4, failures);
  clique_identity_suite(c5);
  report(5, "clique auxiliary-graph identities", c5, failures);
  doubling_suite(c7);
  minplus_suite(c8);
  two_cover_suite(c9);
  if (ledger.violations) c6.fail(ledger.first);
  if (ledger.runs == 0) c6.fail("no meta runs recorded");
  c6.note << ledger.runs << " meta runs, " << ledger.violations << " violations (every exponent also checked in-run)";
  report(6, "size bound", c6, failures);
  report(7, "doubling analytics", c7, failures);
  report(8, "min-plus self-convolution", c8, failures);
  report(9, "GAP independence", c9, failures);
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << 9 - failures << "/9" << std::endl;
  return failures;
}
