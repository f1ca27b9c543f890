#include "smalldoubling/generate.hpp"
#include "smalldoubling/meta.hpp"
#include "smalldoubling/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace smalldoubling;

namespace {

ProblemInstance complete(ProblemKind kind, std::size_t n, const std::vector<BigInt>& weights) {
  ProblemInstance inst;
  inst.kind = kind;
  inst.n = n;
  std::size_t i = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) inst.edges.push_back({u, v, weights[i++ % weights.size()]});
  return inst;
}

}  // namespace

TEST(Meta, TspOnK4FromUnitGap) {
  auto inst = complete(ProblemKind::tsp, 4, {0, 1, 2, 3, 3, 1});
  inst.gap = Gap({1}, {3});
  const auto r = run_meta(inst);
  const auto o = tsp_bf(inst);
  ASSERT_TRUE(o);
  EXPECT_EQ(r.optimum, o->optimum);
  EXPECT_EQ(r.stats.optimum_count, o->count);
  EXPECT_EQ(r.stats.gap_source, "instance");
  EXPECT_EQ(r.lambda, 4u);
}

TEST(Meta, MaxCutOnHighOffsetProgression) {
  const BigInt V = boost::multiprecision::pow(BigInt(10), 12);
  std::mt19937_64 rng(61);
  for (std::size_t n = 2; n <= 10; ++n) {
    std::vector<BigInt> w;
    for (std::size_t i = 0; i < n * n; ++i) w.push_back(V + 7 * BigInt(rng() % 20));
    const auto inst = complete(ProblemKind::maxcut, n, w);
    const auto r = run_meta(inst);
    const auto o = maxcut_bf(inst);
    EXPECT_EQ(r.optimum, o.optimum) << n;
    EXPECT_EQ(r.stats.optimum_count, o.count) << n;
    EXPECT_EQ(r.stats.gap_source, "search");
  }
}

TEST(Meta, AllWeightsEqualTsp) {
  const BigInt w = 123456789;
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto r = run_meta(complete(ProblemKind::tsp, n, {w}));
    EXPECT_EQ(r.optimum, w * n);
  }
}

TEST(Meta, GapPreference) {
  auto inst = complete(ProblemKind::tsp, 4, {10, 20, 30});
  MetaOptions opt;
  EXPECT_EQ(run_meta(inst, opt).stats.gap_source, "search");
  inst.gap = Gap({10}, {3});
  EXPECT_EQ(run_meta(inst, opt).stats.gap_source, "instance");
  opt.gap = Gap({5}, {6});
  const auto r = run_meta(inst, opt);
  EXPECT_EQ(r.stats.gap_source, "option");
  EXPECT_EQ(r.gap_used, Gap({5}, {6}));
  EXPECT_EQ(r.optimum, tsp_bf(inst)->optimum);
}

TEST(Meta, GapNotCoveringTheWeights) {
  auto inst = complete(ProblemKind::tsp, 4, {10, 20, 31});
  inst.gap = Gap({10}, {3});
  EXPECT_THROW(run_meta(inst), NotCovered);
}

TEST(Meta, SizeBoundHolds) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto inst = random_desk_instance(ProblemKind::tsp, seed);
    try {
      const auto r = run_meta(inst);
      EXPECT_LE(r.stats.enlarged_volume, r.stats.size_bound);
      EXPECT_LT(r.stats.max_exponent, r.stats.enlarged_volume);
    } catch (const InfeasibleInstance&) {
    }
  }
}

TEST(Meta, InfeasibleTsp) {
  ProblemInstance inst;
  inst.kind = ProblemKind::tsp;
  inst.n = 4;
  inst.edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
  EXPECT_THROW(run_meta(inst), InfeasibleInstance);
}

TEST(Meta, CliqueWithoutKClique) {
  ProblemInstance inst;
  inst.kind = ProblemKind::ewclique;
  inst.n = 4;
  inst.k = 3;
  inst.edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
  EXPECT_THROW(run_meta(inst), InfeasibleInstance);
  inst.k = 4;
  EXPECT_THROW(run_meta(inst), KNotDivisibleBy3);
}

TEST(Meta, SteinerBuildsPermutationWhenItFits) {
  GenOptions g;
  g.kind = ProblemKind::steiner;
  g.n = 6;
  g.terminals = 3;
  g.gap = parse_gap_spec("x=1000,3 L=2,2");
  const auto inst = generate_instance(g);
  const auto r = run_meta(inst);
  EXPECT_TRUE(r.stats.permutation_built);
  MetaOptions opt;
  opt.permutation_budget = 0;
  const auto r2 = run_meta(inst, opt);
  EXPECT_FALSE(r2.stats.permutation_built);
  EXPECT_EQ(r.optimum, r2.optimum);
  EXPECT_EQ(r.optimum, steiner_bf(inst)->optimum);
}

TEST(Meta, ModularCountsAreExactCountsReduced) {
  std::mt19937_64 rng(67);
  const BigInt p = random_prime_62(rng);
  MetaOptions opt;
  opt.mode = CoefficientMode::modular(p);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto inst = random_desk_instance(ProblemKind::maxcut, seed);
    const auto exact = run_meta(inst);
    const auto modular = run_meta(inst, opt);
    EXPECT_EQ(exact.optimum, modular.optimum);
    EXPECT_EQ(exact.stats.optimum_count % p, modular.stats.optimum_count);
  }
}

TEST(Meta, SpecMustMatchKind) {
  const auto inst = complete(ProblemKind::tsp, 4, {1});
  EXPECT_THROW(run_meta(inst, solver_spec_for(ProblemKind::maxcut)), std::invalid_argument);
}

TEST(Meta, MinPlusMatchesNaive) {
  GenOptions g;
  g.kind = ProblemKind::minplus;
  g.n = 200;
  g.gap = parse_gap_spec("x=1000003,17 L=5,9 offset=10^12");
  const auto inst = generate_instance(g);
  const auto r = run_minplus_meta(inst);
  EXPECT_EQ(r.values, minplus_naive(inst.sequence));
  EXPECT_EQ(r.lambda, 2u);
}

TEST(Meta, TooSmallLambdaCanGiveWrongAnswers) {
  ProblemInstance inst;
  inst.kind = ProblemKind::tsp;
  inst.n = 3;
  inst.edges = {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
  inst.gap = Gap({10, 1}, {1, 1});
  MetaOptions opt;
  opt.lambda_override = 1;
  EXPECT_NE(run_meta(inst, opt).optimum, 3);
  EXPECT_EQ(run_meta(inst).optimum, 3);
}
