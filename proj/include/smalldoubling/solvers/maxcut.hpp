#pragma once

#include "../errors.hpp"
#include "../instance.hpp"
#include "../polynomial.hpp"
#include "context.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace smalldoubling {

inline constexpr std::size_t kMaxCutVertices = 24;

/// Split-and-list Max-Cut. V is split into three consecutive blocks; every
/// edge is charged to one block pair (internal edges of block i go to pair
/// (i, i+1)), so the cut weight of S = S1 u S2 u S3 decomposes as
/// t12(S1,S2) + t23(S2,S3) + t31(S3,S1). The three pair tables are listed
/// and combined by exhaustive triple search. Each bipartition is counted once:
/// S is the side containing vertex 0.
inline SolutionPolynomial maxcut_algebraic(const ProblemInstance& inst, std::span<const EncodedWeight> enc,
                                           SolverContext& ctx) {
  if (inst.kind != ProblemKind::maxcut) throw std::invalid_argument("maxcut_algebraic needs a Max-Cut instance");
  if (enc.size() != inst.edges.size()) throw std::invalid_argument("one encoded weight per edge expected");
  const std::size_t n = inst.n;
  if (n > kMaxCutVertices) throw TooLarge("split-and-list limited to " + std::to_string(kMaxCutVertices) + " vertices");
  if (n == 0) return SolutionPolynomial::monomial(0, 1, ctx.mode);

  const std::size_t b1 = (n + 2) / 3;
  const std::size_t b2 = std::min(n, b1 + (n - b1 + 1) / 2);
  const std::array<std::size_t, 4> start{0, b1, b2, n};
  auto block_of = [&](std::size_t v) { return v < b1 ? 0u : (v < b2 ? 1u : 2u); };
  std::array<std::size_t, 3> size{};
  for (int i = 0; i < 3; ++i) size[i] = start[i + 1] - start[i];

  // table[p] is indexed by (subset of block p, subset of block p+1 mod 3)
  std::array<std::vector<BigInt>, 3> table;
  for (int p = 0; p < 3; ++p) table[p].assign((std::size_t{1} << size[p]) << size[(p + 1) % 3], BigInt(0));

  auto in_side = [&](std::size_t v, std::size_t sub_a, std::size_t sub_b, int p) {
    const unsigned blk = block_of(v);
    const std::size_t bit = v - start[blk];
    return blk == static_cast<unsigned>(p) ? ((sub_a >> bit) & 1) : ((sub_b >> bit) & 1);
  };

  for (std::size_t ei = 0; ei < inst.edges.size(); ++ei) {
    const auto& e = inst.edges[ei];
    const unsigned bu = block_of(e.u), bv = block_of(e.v);
    int p;
    if (bu == bv)
      p = static_cast<int>(bu);
    else if ((bu + 1) % 3 == bv)
      p = static_cast<int>(bu);
    else
      p = static_cast<int>(bv);
    const std::size_t na = std::size_t{1} << size[p];
    const std::size_t nb = std::size_t{1} << size[(p + 1) % 3];
    for (std::size_t sb = 0; sb < nb; ++sb)
      for (std::size_t sa = 0; sa < na; ++sa)
        if (in_side(e.u, sa, sb, p) != in_side(e.v, sa, sb, p)) table[p][(sb << size[p]) | sa] += enc[ei].value;
  }

  const std::size_t n1 = std::size_t{1} << size[0], n2 = std::size_t{1} << size[1], n3 = std::size_t{1} << size[2];
  SolutionPolynomial result(ctx.mode);
  std::vector<SolutionPolynomial::Term> batch;
  for (std::size_t s1 = 1; s1 < n1; s1 += 2) {  // vertex 0 is bit 0 of block 0
    batch.clear();
    for (std::size_t s2 = 0; s2 < n2; ++s2) {
      const BigInt& w12 = table[0][(s2 << size[0]) | s1];
      for (std::size_t s3 = 0; s3 < n3; ++s3) {
        BigInt w = w12 + table[1][(s3 << size[1]) | s2] + table[2][(s1 << size[2]) | s3];
        ctx.observe(w);
        batch.emplace_back(std::move(w), 1);
      }
    }
    result += SolutionPolynomial::from_terms(std::move(batch), ctx.mode);
    batch = {};
  }
  return result;
}

}  // namespace smalldoubling
