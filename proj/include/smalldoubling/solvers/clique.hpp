#pragma once

// Edge-weighted k-clique for k divisible by 3 via the auxiliary-graph
// reduction: nodes are (k/3)-cliques of G, two nodes are adjacent when their
// union is a (2k/3)-clique, and the edge weight is twice the cross weight
// plus both internal weights. Every triangle of H then weighs exactly twice
// the k-clique it spans.

#include "../errors.hpp"
#include "../instance.hpp"
#include "../polynomial.hpp"
#include "context.hpp"
#include "graph.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace smalldoubling {

struct CliqueAuxGraph {
  std::size_t part = 0;                        // k/3
  std::vector<std::vector<std::size_t>> nodes;  // part-cliques of G, sorted
  std::vector<BigInt> internal;                 // internal weight per node
  /// adj[i]: neighbours j > i with edge weight, ascending j.
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> adj;

  const BigInt* edge_weight(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    const auto& row = adj[i];
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const auto& p, std::size_t v) { return p.first < v; });
    return it != row.end() && it->first == j ? &it->second : nullptr;
  }
};

inline CliqueAuxGraph build_clique_aux_graph(const ProblemInstance& inst, std::span<const EncodedWeight> enc,
                                             std::size_t k) {
  if (k < 3 || k % 3 != 0) throw KNotDivisibleBy3("clique size " + std::to_string(k) + " is not a positive multiple of 3");
  const detail::EncodedGraph g(inst, enc);
  CliqueAuxGraph h;
  h.part = k / 3;

  std::vector<std::size_t> cur;
  auto extend = [&](auto&& self, std::size_t next) -> void {
    if (cur.size() == h.part) {
      h.nodes.push_back(cur);
      return;
    }
    for (std::size_t v = next; v < g.size(); ++v) {
      if (!std::all_of(cur.begin(), cur.end(), [&](std::size_t u) { return g.has(u, v); })) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  extend(extend, 0);

  h.internal.reserve(h.nodes.size());
  for (const auto& y : h.nodes) {
    BigInt w = 0;
    for (std::size_t a = 0; a < y.size(); ++a)
      for (std::size_t b = a + 1; b < y.size(); ++b) w += g.weight(y[a], y[b]);
    h.internal.push_back(std::move(w));
  }

  h.adj.resize(h.nodes.size());
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < h.nodes.size(); ++j) {
      BigInt cross = 0;
      bool ok = true;
      for (auto u : h.nodes[i]) {
        for (auto v : h.nodes[j]) {
          if (u == v || !g.has(u, v)) {
            ok = false;
            break;
          }
          cross += g.weight(u, v);
        }
        if (!ok) break;
      }
      if (ok) h.adj[i].emplace_back(j, 2 * cross + h.internal[i] + h.internal[j]);
    }
  }
  return h;
}

/// Calls fn(a, b, c, w_ab, w_bc, w_ca) for every triangle a < b < c of H.
template <class Fn>
void for_each_triangle(const CliqueAuxGraph& h, Fn&& fn) {
  for (std::size_t a = 0; a < h.adj.size(); ++a)
    for (const auto& [b, wab] : h.adj[a])
      for (const auto& [c, wbc] : h.adj[b])
        if (const BigInt* wca = h.edge_weight(a, c)) fn(a, b, c, wab, wbc, *wca);
}

/// Number of H-triangles spanning one k-clique: unordered splits of its k
/// vertices into three blocks of k/3.
inline BigInt clique_triangle_multiplicity(std::size_t k) {
  const std::size_t p = k / 3;
  BigInt r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= i;
  BigInt f = 1;
  for (std::size_t i = 2; i <= p; ++i) f *= i;
  return r / (f * f * f * 6);
}

/// Polynomial over H-triangle weights (twice the clique weight); one term per
/// triangle. Zero polynomial when G has no k-clique.
inline SolutionPolynomial ewclique_algebraic(const ProblemInstance& inst, std::span<const EncodedWeight> enc,
                                             std::size_t k, SolverContext& ctx) {
  if (inst.kind != ProblemKind::ewclique) throw std::invalid_argument("ewclique_algebraic needs a k-clique instance");
  const CliqueAuxGraph h = build_clique_aux_graph(inst, enc, k);
  std::vector<SolutionPolynomial::Term> terms;
  for (const auto& row : h.adj)
    for (const auto& [j, w] : row) ctx.observe(w);
  for_each_triangle(h, [&](std::size_t, std::size_t, std::size_t, const BigInt& ab, const BigInt& bc,
                           const BigInt& ca) {
    BigInt w = ab + bc + ca;
    ctx.observe(w);
    terms.emplace_back(std::move(w), 1);
  });
  return SolutionPolynomial::from_terms(std::move(terms), ctx.mode);
}

/// Maps triangle weights back to clique weights (exponents halved, exact by
/// additivity of the encoding) and counts each clique once.
inline SolutionPolynomial normalize_clique_polynomial(const SolutionPolynomial& p, std::size_t k) {
  std::vector<SolutionPolynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) throw std::logic_error("triangle exponent " + e.str() + " is odd");
    terms.emplace_back(e / 2, c);
  }
  return SolutionPolynomial::from_terms(std::move(terms), p.mode()).divided_by(clique_triangle_multiplicity(k));
}

}  // namespace smalldoubling
