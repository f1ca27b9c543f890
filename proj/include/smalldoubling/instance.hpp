#pragma once

#include "additive.hpp"
#include "bigint.hpp"
#include "polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smalldoubling {

enum class ProblemKind { tsp, maxcut, ewclique, steiner, minplus };

inline const char* to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::tsp: return "tsp";
    case ProblemKind::maxcut: return "maxcut";
    case ProblemKind::ewclique: return "ewclique";
    case ProblemKind::steiner: return "steiner";
    case ProblemKind::minplus: return "minplus";
  }
  return "?";
}

inline std::optional<ProblemKind> parse_kind(const std::string& s) {
  if (s == "tsp") return ProblemKind::tsp;
  if (s == "maxcut") return ProblemKind::maxcut;
  if (s == "ewclique" || s == "clique") return ProblemKind::ewclique;
  if (s == "steiner") return ProblemKind::steiner;
  if (s == "minplus") return ProblemKind::minplus;
  return std::nullopt;
}

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  BigInt weight;
  bool operator==(const Edge&) const = default;
};

/// One weighted instance of any supported problem. Graph kinds use `n` and
/// `edges`; min-plus self-convolution uses `sequence`.
struct ProblemInstance {
  ProblemKind kind = ProblemKind::tsp;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::size_t k = 0;                   // clique size
  std::vector<std::size_t> terminals;  // Steiner terminals
  std::vector<BigInt> sequence;        // min-plus input
  std::optional<Gap> gap;              // user-supplied cover
  std::optional<std::uint64_t> seed;

  bool operator==(const ProblemInstance&) const = default;

  bool is_graph() const noexcept { return kind != ProblemKind::minplus; }

  /// Weights as they occur, one per edge or sequence position.
  std::vector<BigInt> raw_weights() const {
    if (!is_graph()) return sequence;
    std::vector<BigInt> w;
    w.reserve(edges.size());
    for (const auto& e : edges) w.push_back(e.weight);
    return w;
  }

  /// Distinct weights; {0} for an instance without weights.
  WeightSet weight_set() const {
    auto w = raw_weights();
    if (w.empty()) w.push_back(0);
    return WeightSet(std::move(w));
  }

  void validate() const {
    if (!is_graph()) {
      if (sequence.empty()) throw std::invalid_argument("min-plus instance needs a non-empty sequence");
      for (const auto& v : sequence)
        if (v < 0) throw std::invalid_argument("sequence values must be non-negative");
      return;
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges) {
      if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
      if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
      if (e.weight < 0) throw std::invalid_argument("edge weights must be non-negative");
      if (!seen.insert(std::minmax(e.u, e.v)).second)
        throw std::invalid_argument("parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    if (kind == ProblemKind::tsp && n < 3) throw std::invalid_argument("TSP needs n >= 3");
    if (kind == ProblemKind::ewclique && k < 1) throw std::invalid_argument("clique size k must be positive");
    if (kind == ProblemKind::steiner) {
      std::set<std::size_t> t(terminals.begin(), terminals.end());
      if (t.size() != terminals.size()) throw std::invalid_argument("duplicate Steiner terminal");
      if (t.size() < 2) throw std::invalid_argument("Steiner needs at least two terminals");
      for (auto v : t)
        if (v >= n) throw std::invalid_argument("Steiner terminal out of range");
    }
  }
};

/// Problem-specific data for the encoding: optimization sense and the
/// largest number of input weights any intermediate value of the solver sums.
struct SolverSpec {
  ProblemKind algorithm;
  Sense sense;

  /// TSP: n. Max-Cut: m. k-clique: 2*C(k,2). Steiner: 3(n-1). Min-plus: 2.
  std::uint64_t lambda_bound(const ProblemInstance& inst) const {
    std::uint64_t l = 1;
    switch (algorithm) {
      case ProblemKind::tsp: l = inst.n; break;
      case ProblemKind::maxcut: l = inst.edges.size(); break;
      case ProblemKind::ewclique: l = checked_mul(inst.k, inst.k - 1); break;
      // Dreyfus-Wagner candidates add a shortest path to two subtrees, each
      // at most n-1 edges.
      case ProblemKind::steiner: l = checked_mul(3, inst.n > 0 ? inst.n - 1 : 0); break;
      case ProblemKind::minplus: l = 2; break;
    }
    return l == 0 ? 1 : l;
  }
};

inline SolverSpec solver_spec_for(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::tsp:
    case ProblemKind::steiner:
    case ProblemKind::minplus: return {kind, Sense::minimize};
    case ProblemKind::maxcut:
    case ProblemKind::ewclique: return {kind, Sense::maximize};
  }
  throw std::invalid_argument("unknown problem kind");
}

}  // namespace smalldoubling
