#pragma once

#include "../errors.hpp"
#include "../instance.hpp"
#include "../polynomial.hpp"
#include "context.hpp"
#include "graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace smalldoubling {

inline constexpr std::size_t kMaxSteinerTerminals = 16;

/// Dreyfus-Wagner over encoded weights. Each state keeps only its
/// minimum-true-value term, compared through `ctx.order` (rank table when it
/// fits the budget). Returns the single term x^{opt} with coefficient 1.
/// Throws Disconnected if the terminals are not in one component.
inline SolutionPolynomial steiner_algebraic(const ProblemInstance& inst, std::span<const EncodedWeight> enc,
                                            SolverContext& ctx) {
  if (inst.kind != ProblemKind::steiner) throw std::invalid_argument("steiner_algebraic needs a Steiner instance");
  if (!ctx.order) throw std::invalid_argument("steiner_algebraic needs a value order in the context");
  const auto& terms = inst.terminals;
  if (terms.size() < 2) throw std::invalid_argument("Steiner needs at least two terminals");
  if (terms.size() > kMaxSteinerTerminals) throw TooLarge("too many Steiner terminals");
  ValueOrder& order = *ctx.order;
  order.request_ranks();

  const detail::EncodedGraph g(inst, enc);
  const std::size_t n = g.size();
  using Cell = std::optional<EncodedWeight>;
  auto relax = [&](Cell& into, EncodedWeight cand) {
    ctx.observe(cand.value);
    if (!into || order.less(cand, *into)) into = std::move(cand);
  };

  std::vector<Cell> dist(n * n);
  for (std::size_t v = 0; v < n; ++v) dist[v * n + v] = EncodedWeight(0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && g.has(u, v)) relax(dist[u * n + v], EncodedWeight(g.weight(u, v)));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i) {
      if (!dist[i * n + m]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (dist[m * n + j]) relax(dist[i * n + j], *dist[i * n + m] + *dist[m * n + j]);
    }

  const std::size_t kt = terms.size();
  const std::uint32_t full = (1u << kt) - 1;
  std::vector<Cell> dp((std::size_t{1} << kt) * n);
  for (std::size_t i = 0; i < kt; ++i)
    for (std::size_t v = 0; v < n; ++v) dp[(std::size_t{1} << i) * n + v] = dist[terms[i] * n + v];

  std::vector<Cell> merged(n);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    const std::uint32_t low = mask & (~mask + 1);
    for (std::size_t v = 0; v < n; ++v) {
      merged[v].reset();
      for (std::uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
        if (!(sub & low)) continue;  // each split once
        const Cell& a = dp[sub * n + v];
        const Cell& b = dp[(mask ^ sub) * n + v];
        if (a && b) relax(merged[v], *a + *b);
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      Cell& out = dp[mask * n + v];
      for (std::size_t u = 0; u < n; ++u)
        if (merged[u] && dist[u * n + v]) relax(out, *merged[u] + *dist[u * n + v]);
    }
  }

  const Cell& best = dp[full * n + terms[0]];
  if (!best) throw Disconnected("Steiner terminals are not connected");
  return SolutionPolynomial::monomial(best->value, 1, ctx.mode);
}

}  // namespace smalldoubling
