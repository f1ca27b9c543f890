#pragma once

// End-to-end pipeline: obtain a GAP covering the weights, take coordinates,
// encode them with lambda-enlarged bounds, run the bounded-input solver on the
// encoded instance, decode the chosen exponent and evaluate it on the
// generators.

#include "additive.hpp"
#include "bigint.hpp"
#include "cover_search.hpp"
#include "encoding.hpp"
#include "errors.hpp"
#include "instance.hpp"
#include "polynomial.hpp"
#include "solvers.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace smalldoubling {

struct MetaOptions {
  std::size_t max_dim = 3;
  BigInt volume_budget = 1'000'000;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  std::uint64_t permutation_budget = kDefaultPermutationBudget;
  std::uint64_t minplus_bound = kDefaultMinPlusBound;
  CoefficientMode mode;
  /// Overrides the instance's own GAP.
  std::optional<Gap> gap;
  bool measure_doubling = true;
  /// Replaces the solver's lambda. Values below it can make encoded sums
  /// carry between dimensions and give wrong optima; for experiments only.
  std::optional<std::uint64_t> lambda_override;
};

struct MetaStats {
  std::size_t weight_count = 0;
  std::optional<std::size_t> sumset_size;
  std::optional<Rational> doubling;
  std::string gap_source;  // "option", "instance" or "search"
  BigInt gap_volume;       // |G|
  BigInt enlarged_volume;  // |G'| = prod (lambda L_i + 1)
  BigInt size_bound;       // lambda^d |G|
  bool permutation_built = false;
  BigInt max_exponent;
  std::uint64_t exponents_observed = 0;
  std::size_t polynomial_terms = 0;
  BigInt optimum_count;
  double seconds_gap = 0, seconds_encode = 0, seconds_solve = 0, seconds_total = 0;
};

struct MetaResult {
  BigInt optimum;
  EncodedWeight encoded_optimum;
  CoordTuple coords;
  Gap gap_used;
  std::uint64_t lambda = 1;
  Sense sense = Sense::minimize;
  MetaStats stats;
};

struct MinPlusResult {
  std::vector<BigInt> values;
  std::vector<EncodedWeight> encoded;
  Gap gap_used;
  std::uint64_t lambda = 2;
  MetaStats stats;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Encoded {
  Gap gap;
  EnlargedGap enlarged;
  std::vector<EncodedWeight> per_item;  // one per edge / sequence position
};

inline Encoded encode_instance(const ProblemInstance& inst, std::uint64_t lambda, const MetaOptions& opt,
                               MetaStats& stats) {
  auto t0 = Clock::now();
  const WeightSet weights = inst.weight_set();
  stats.weight_count = weights.size();
  if (opt.measure_doubling) {
    const auto twice = sumset(weights, weights);
    stats.sumset_size = twice.size();
    stats.doubling = Rational(BigInt(twice.size()), BigInt(weights.size()));
  }

  Gap gap;
  if (opt.gap) {
    gap = *opt.gap;
    stats.gap_source = "option";
  } else if (inst.gap) {
    gap = *inst.gap;
    stats.gap_source = "instance";
  } else {
    gap = gap_cover_search(weights, opt.max_dim, opt.volume_budget);
    stats.gap_source = "search";
  }
  const auto coords = get_gap_coordinates(weights, gap, opt.enumeration_budget);
  stats.seconds_gap = seconds_since(t0);

  t0 = Clock::now();
  EnlargedGap enlarged(gap, lambda);
  std::vector<EncodedWeight> enc_of_weight;
  enc_of_weight.reserve(coords.size());
  for (const auto& c : coords) enc_of_weight.push_back(kappa(enlarged, c));

  stats.gap_volume = gap.volume();
  stats.enlarged_volume = enlarged.range();
  stats.size_bound = boost::multiprecision::pow(BigInt(lambda), static_cast<unsigned>(gap.dim())) * stats.gap_volume;
  if (stats.enlarged_volume > stats.size_bound)
    throw std::logic_error("|G'| = " + stats.enlarged_volume.str() + " exceeds lambda^d |G| = " + stats.size_bound.str());

  std::vector<EncodedWeight> per_item;
  const auto raw = inst.raw_weights();
  per_item.reserve(raw.size());
  for (const auto& w : raw) per_item.push_back(enc_of_weight[*weights.index_of(w)]);
  stats.seconds_encode = seconds_since(t0);
  return {std::move(gap), std::move(enlarged), std::move(per_item)};
}

}  // namespace detail

/// Runs the full pipeline on a graph instance and returns the optimum on the
/// original scale.
inline MetaResult run_meta(const ProblemInstance& inst, const SolverSpec& spec, const MetaOptions& opt = {}) {
  const auto start = detail::Clock::now();
  inst.validate();
  if (!inst.is_graph()) throw std::invalid_argument("use run_minplus_meta for min-plus instances");
  if (spec.algorithm != inst.kind) throw std::invalid_argument("solver spec does not match the instance kind");
  if (inst.kind == ProblemKind::ewclique && (inst.k < 3 || inst.k % 3 != 0))
    throw KNotDivisibleBy3("clique size " + std::to_string(inst.k) + " is not a positive multiple of 3");

  MetaResult res;
  res.sense = spec.sense;
  res.lambda = opt.lambda_override.value_or(spec.lambda_bound(inst));
  if (res.lambda == 0) throw std::invalid_argument("lambda must be positive");
  auto enc = detail::encode_instance(inst, res.lambda, opt, res.stats);

  auto t0 = detail::Clock::now();
  ValueOrder order(enc.enlarged, opt.permutation_budget);
  SolverContext ctx{opt.mode, enc.enlarged.range(), &order};
  SolutionPolynomial poly;
  switch (inst.kind) {
    case ProblemKind::tsp: poly = tsp_algebraic(inst, enc.per_item, ctx); break;
    case ProblemKind::maxcut: poly = maxcut_algebraic(inst, enc.per_item, ctx); break;
    case ProblemKind::ewclique:
      poly = normalize_clique_polynomial(ewclique_algebraic(inst, enc.per_item, inst.k, ctx), inst.k);
      break;
    case ProblemKind::steiner: poly = steiner_algebraic(inst, enc.per_item, ctx); break;
    case ProblemKind::minplus: break;
  }
  res.stats.seconds_solve = detail::seconds_since(t0);
  res.stats.permutation_built = order.has_table();
  res.stats.max_exponent = ctx.max_observed;
  res.stats.exponents_observed = ctx.observed;
  res.stats.polynomial_terms = poly.size();
  if (poly.is_zero()) throw InfeasibleInstance(std::string("no feasible solution for ") + to_string(inst.kind));

  res.encoded_optimum = select_optimum(poly, order, spec.sense);
  res.stats.optimum_count = poly.coefficient(res.encoded_optimum.value);
  res.coords = kappa_inv(enc.enlarged, res.encoded_optimum);
  res.optimum = evaluate(enc.gap, res.coords);
  res.gap_used = std::move(enc.gap);
  res.stats.seconds_total = detail::seconds_since(start);
  return res;
}

inline MetaResult run_meta(const ProblemInstance& inst, const MetaOptions& opt = {}) {
  return run_meta(inst, solver_spec_for(inst.kind), opt);
}

/// Min-plus self-convolution through the same encoding (lambda = 2).
inline MinPlusResult run_minplus_meta(const ProblemInstance& inst, const MetaOptions& opt = {}) {
  const auto start = detail::Clock::now();
  inst.validate();
  if (inst.kind != ProblemKind::minplus) throw std::invalid_argument("run_minplus_meta needs a min-plus instance");
  MinPlusResult res;
  const SolverSpec spec = solver_spec_for(ProblemKind::minplus);
  res.lambda = opt.lambda_override.value_or(spec.lambda_bound(inst));
  if (res.lambda == 0) throw std::invalid_argument("lambda must be positive");
  auto enc = detail::encode_instance(inst, res.lambda, opt, res.stats);

  auto t0 = detail::Clock::now();
  ValueOrder order(enc.enlarged, opt.permutation_budget);
  SolverContext ctx{opt.mode, enc.enlarged.range(), &order};
  res.encoded = minplus_selfconv(enc.per_item, order, ctx, opt.minplus_bound);
  res.stats.seconds_solve = detail::seconds_since(t0);
  res.stats.max_exponent = ctx.max_observed;
  res.stats.exponents_observed = ctx.observed;
  res.values.reserve(res.encoded.size());
  for (const auto& e : res.encoded) res.values.push_back(true_value(enc.enlarged, e));
  res.gap_used = std::move(enc.gap);
  res.stats.seconds_total = detail::seconds_since(start);
  return res;
}

}  // namespace smalldoubling
