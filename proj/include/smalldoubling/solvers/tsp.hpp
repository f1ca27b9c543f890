#pragma once

#include "../errors.hpp"
#include "../instance.hpp"
#include "../polynomial.hpp"
#include "context.hpp"
#include "graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace smalldoubling {

inline constexpr std::size_t kMaxTspVertices = 16;

/// Held-Karp over polynomial-valued cells: cell (S, v) holds the generating
/// function of encoded weights of all Hamiltonian paths 0 -> ... -> v through
/// exactly S. Returns the tour polynomial with every undirected tour counted
/// once (directed closures are halved). Zero polynomial when no tour exists.
inline SolutionPolynomial tsp_algebraic(const ProblemInstance& inst, std::span<const EncodedWeight> enc,
                                        SolverContext& ctx) {
  if (inst.kind != ProblemKind::tsp) throw std::invalid_argument("tsp_algebraic needs a TSP instance");
  const std::size_t n = inst.n;
  if (n < 3) throw std::invalid_argument("TSP needs n >= 3");
  if (n > kMaxTspVertices) throw TooLarge("Held-Karp limited to " + std::to_string(kMaxTspVertices) + " vertices");
  const detail::EncodedGraph g(inst, enc);

  // vertices 1..n-1 map to bits 0..n-2
  const std::size_t m = n - 1;
  const std::uint32_t full = (1u << m) - 1;
  std::vector<SolutionPolynomial> dp((std::size_t{1} << m) * m, SolutionPolynomial(ctx.mode));
  auto cell = [&](std::uint32_t mask, std::size_t v) -> SolutionPolynomial& { return dp[mask * m + (v - 1)]; };

  for (std::size_t v = 1; v < n; ++v)
    if (g.has(0, v)) {
      cell(1u << (v - 1), v) = SolutionPolynomial::monomial(g.weight(0, v), 1, ctx.mode);
      ctx.observe(g.weight(0, v));
    }

  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (std::size_t v = 1; v < n; ++v) {
      if (!(mask & (1u << (v - 1)))) continue;
      const auto& from = cell(mask, v);
      if (from.is_zero()) continue;
      for (std::size_t u = 1; u < n; ++u) {
        if ((mask & (1u << (u - 1))) || !g.has(v, u)) continue;
        auto& to = cell(mask | (1u << (u - 1)), u);
        to.add_shifted(from, g.weight(v, u));
        ctx.observe(to.degree());
      }
    }
  }

  SolutionPolynomial tours(ctx.mode);
  for (std::size_t v = 1; v < n; ++v) {
    const auto& path = cell(full, v);
    if (path.is_zero() || !g.has(v, 0)) continue;
    tours.add_shifted(path, g.weight(v, 0));
    ctx.observe(tours.degree());
  }
  // each undirected tour was closed once per direction
  return tours.divided_by(2);
}

}  // namespace smalldoubling
