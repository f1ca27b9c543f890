#pragma once

// Runs the pipeline and the matching brute-force oracle on one instance.

#include "bigint.hpp"
#include "errors.hpp"
#include "instance.hpp"
#include "meta.hpp"
#include "oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smalldoubling {

struct VerifyOutcome {
  /// nullopt means the side reported the instance infeasible.
  std::optional<BigInt> meta_optimum, oracle_optimum;
  std::optional<BigInt> meta_count, oracle_count;
  /// Min-plus only: number of output positions that differ.
  std::size_t sequence_mismatches = 0;
  bool pass = false;
  std::string detail;
};

inline std::optional<OracleResult> run_oracle(const ProblemInstance& inst) {
  switch (inst.kind) {
    case ProblemKind::tsp: return tsp_bf(inst);
    case ProblemKind::maxcut: return maxcut_bf(inst);
    case ProblemKind::ewclique: return clique_bf(inst);
    case ProblemKind::steiner: return steiner_bf(inst);
    case ProblemKind::minplus: break;
  }
  throw std::invalid_argument("no scalar oracle for min-plus");
}

/// Optima must agree; in exact mode the optimal-solution counts must agree
/// as well (modulo p in modular mode).
inline VerifyOutcome verify_instance(const ProblemInstance& inst, const MetaOptions& opt = {}) {
  VerifyOutcome out;
  if (inst.kind == ProblemKind::minplus) {
    const auto got = run_minplus_meta(inst, opt).values;
    const auto want = minplus_naive(inst.sequence);
    if (got.size() != want.size()) {
      out.detail = "length " + std::to_string(got.size()) + " vs " + std::to_string(want.size());
      return out;
    }
    for (std::size_t i = 0; i < got.size(); ++i)
      if (got[i] != want[i]) ++out.sequence_mismatches;
    out.pass = out.sequence_mismatches == 0;
    if (!out.pass) out.detail = std::to_string(out.sequence_mismatches) + " positions differ";
    return out;
  }

  if (auto o = run_oracle(inst)) {
    out.oracle_optimum = o->optimum;
    out.oracle_count = o->count;
  }
  try {
    const auto r = run_meta(inst, opt);
    out.meta_optimum = r.optimum;
    out.meta_count = r.stats.optimum_count;
  } catch (const InfeasibleInstance&) {
  }

  if (!out.meta_optimum || !out.oracle_optimum) {
    out.pass = !out.meta_optimum && !out.oracle_optimum;
    if (!out.pass) out.detail = "feasibility differs";
    return out;
  }
  BigInt want_count = *out.oracle_count;
  if (opt.mode.modulus) want_count %= *opt.mode.modulus;
  out.pass = *out.meta_optimum == *out.oracle_optimum && *out.meta_count == want_count;
  if (!out.pass) out.detail = *out.meta_optimum == *out.oracle_optimum ? "counts differ" : "optima differ";
  return out;
}

}  // namespace smalldoubling
