#pragma once

#include "../bigint.hpp"
#include "../encoding.hpp"
#include "../errors.hpp"
#include "../polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace smalldoubling {

/// Per-call state shared between the meta-algorithm and a solver.
struct SolverContext {
  CoefficientMode mode;
  /// Every intermediate exponent must stay strictly below this (|G'|).
  std::optional<BigInt> exponent_bound;
  /// Rank oracle for solvers that compare values during their run.
  ValueOrder* order = nullptr;

  BigInt max_observed = 0;
  std::uint64_t observed = 0;

  void observe(const BigInt& exponent) {
    ++observed;
    if (exponent > max_observed) max_observed = exponent;
    if (exponent_bound && exponent >= *exponent_bound)
      throw BoundViolation("intermediate exponent " + exponent.str() + " reached the encoding range " +
                           exponent_bound->str());
  }
};

}  // namespace smalldoubling
