#pragma once

// Brute-force reference solvers. They work on the original weights and share
// nothing with the algebraic solvers or the encoding.
//
// Counting conventions match the solvers:
//   TSP       each undirected tour once (start at 0, second vertex smaller
//             than the last one)
//   Max-Cut   each bipartition once (the side holding vertex 0 is S)
//   k-clique  each vertex set once
//   Steiner   count is always 1 (only the optimum value is tracked)

#include "bigint.hpp"
#include "errors.hpp"
#include "instance.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace smalldoubling {

struct OracleResult {
  BigInt optimum;
  BigInt count;
  bool operator==(const OracleResult&) const = default;
};

inline constexpr std::size_t kOracleTspMax = 10;
inline constexpr std::size_t kOracleMaxCutMax = 20;
inline constexpr std::uint64_t kOracleCliqueSubsets = 10'000'000;
inline constexpr std::size_t kOracleSteinerMax = 12;
inline constexpr std::size_t kOracleMinPlusMax = std::size_t{1} << 14;

namespace oracle_detail {

struct Matrix {
  std::size_t n;
  std::vector<std::optional<BigInt>> w;
  explicit Matrix(const ProblemInstance& inst) : n(inst.n), w(inst.n * inst.n) {
    for (const auto& e : inst.edges) {
      w[e.u * n + e.v] = e.weight;
      w[e.v * n + e.u] = e.weight;
    }
  }
  const std::optional<BigInt>& at(std::size_t u, std::size_t v) const { return w[u * n + v]; }
};

inline void offer(std::optional<OracleResult>& best, const BigInt& value, bool maximize) {
  if (!best || (maximize ? value > best->optimum : value < best->optimum))
    best = OracleResult{value, 1};
  else if (value == best->optimum)
    best->count += 1;
}

}  // namespace oracle_detail

/// Minimum Hamiltonian cycle; nullopt if none exists.
inline std::optional<OracleResult> tsp_bf(const ProblemInstance& inst) {
  inst.validate();
  if (inst.n > kOracleTspMax) throw TooLarge("tsp_bf handles at most " + std::to_string(kOracleTspMax) + " vertices");
  const oracle_detail::Matrix m(inst);
  std::vector<std::size_t> perm(inst.n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  std::optional<OracleResult> best;
  do {
    if (perm.front() > perm.back()) continue;
    BigInt total = 0;
    bool ok = true;
    std::size_t prev = 0;
    for (std::size_t i = 0; i <= perm.size() && ok; ++i) {
      const std::size_t next = i < perm.size() ? perm[i] : 0;
      const auto& w = m.at(prev, next);
      if (!w)
        ok = false;
      else
        total += *w;
      prev = next;
    }
    if (ok) oracle_detail::offer(best, total, false);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline OracleResult maxcut_bf(const ProblemInstance& inst) {
  inst.validate();
  if (inst.n > kOracleMaxCutMax)
    throw TooLarge("maxcut_bf handles at most " + std::to_string(kOracleMaxCutMax) + " vertices");
  if (inst.n == 0) return {0, 1};
  std::optional<OracleResult> best;
  const std::uint32_t masks = std::uint32_t{1} << (inst.n - 1);
  for (std::uint32_t rest = 0; rest < masks; ++rest) {
    const std::uint32_t side = (rest << 1) | 1u;
    BigInt cut = 0;
    for (const auto& e : inst.edges)
      if (((side >> e.u) ^ (side >> e.v)) & 1u) cut += e.weight;
    oracle_detail::offer(best, cut, true);
  }
  return *best;
}

/// Maximum-weight k-clique; nullopt if G has none.
inline std::optional<OracleResult> clique_bf(const ProblemInstance& inst, std::size_t k) {
  if (k == 0 || k > inst.n) return std::nullopt;
  {
    auto checked = inst;
    checked.k = k;
    checked.validate();
  }
  BigInt subsets = 1;
  for (std::size_t i = 0; i < k; ++i) subsets = subsets * (inst.n - i) / (i + 1);
  if (subsets > kOracleCliqueSubsets) throw TooLarge("clique_bf: C(n,k) = " + subsets.str() + " subsets");

  const oracle_detail::Matrix m(inst);
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  std::optional<OracleResult> best;
  while (true) {
    BigInt total = 0;
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a)
      for (std::size_t b = a + 1; b < k && ok; ++b) {
        const auto& w = m.at(pick[a], pick[b]);
        if (!w)
          ok = false;
        else
          total += *w;
      }
    if (ok) oracle_detail::offer(best, total, true);

    std::size_t i = k;
    while (i > 0 && pick[i - 1] == inst.n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

inline std::optional<OracleResult> clique_bf(const ProblemInstance& inst) { return clique_bf(inst, inst.k); }

/// Minimum Steiner tree: for every vertex set containing the terminals whose
/// induced subgraph is connected, the weight of its minimum spanning tree.
/// nullopt if the terminals are disconnected.
inline std::optional<OracleResult> steiner_bf(const ProblemInstance& inst, const std::vector<std::size_t>& terminals) {
  inst.validate();
  const std::size_t n = inst.n;
  if (n > kOracleSteinerMax) throw TooLarge("steiner_bf handles at most " + std::to_string(kOracleSteinerMax) + " vertices");
  const oracle_detail::Matrix m(inst);
  std::uint32_t required = 0;
  for (auto t : terminals) required |= std::uint32_t{1} << t;

  std::optional<BigInt> best;
  std::vector<std::size_t> members;
  std::vector<std::optional<BigInt>> key;
  std::vector<char> in_tree;
  for (std::uint32_t set = 0; set < (std::uint32_t{1} << n); ++set) {
    if ((set & required) != required) continue;
    members.clear();
    for (std::size_t v = 0; v < n; ++v)
      if ((set >> v) & 1u) members.push_back(v);
    // Prim on the induced subgraph
    key.assign(members.size(), std::nullopt);
    in_tree.assign(members.size(), 0);
    key[0] = BigInt(0);
    BigInt total = 0;
    bool connected = true;
    for (std::size_t round = 0; round < members.size(); ++round) {
      std::size_t pick = members.size();
      for (std::size_t i = 0; i < members.size(); ++i)
        if (!in_tree[i] && key[i] && (pick == members.size() || *key[i] < *key[pick])) pick = i;
      if (pick == members.size()) {
        connected = false;
        break;
      }
      in_tree[pick] = 1;
      total += *key[pick];
      for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& w = m.at(members[pick], members[i]);
        if (!in_tree[i] && w && (!key[i] || *w < *key[i])) key[i] = *w;
      }
    }
    if (connected && (!best || total < *best)) best = total;
  }
  if (!best) return std::nullopt;
  return OracleResult{*best, 1};
}

inline std::optional<OracleResult> steiner_bf(const ProblemInstance& inst) { return steiner_bf(inst, inst.terminals); }

/// c[k] = min_{i+j=k} a[i] + a[j], direct double loop.
template <class T>
std::vector<T> minplus_naive(const std::vector<T>& a) {
  if (a.size() > kOracleMinPlusMax) throw TooLarge("minplus_naive handles at most 2^14 values");
  if (a.empty()) return {};
  const std::size_t n = a.size();
  std::vector<std::optional<T>> best(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T s = a[i] + a[j];
      auto& cell = best[i + j];
      if (!cell || s < *cell) cell = std::move(s);
    }
  std::vector<T> out;
  out.reserve(best.size());
  for (auto& c : best) out.push_back(std::move(*c));
  return out;
}

}  // namespace smalldoubling
