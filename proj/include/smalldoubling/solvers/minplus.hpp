#pragma once

// Min-plus self-convolution c[k] = min_{i+j=k} a[i] + a[j] over encoded
// values with a bounded range B.
//
// The presence vector of the encoded values is squared by an exact
// number-theoretic transform, which yields every attainable pair sum. Sums
// are then visited in increasing true-value order; for each one the output
// positions it reaches are found with word-parallel shift-or over per-value
// position bitsets, and only still-unassigned outputs take it.

#include "../bigint.hpp"
#include "../encoding.hpp"
#include "../errors.hpp"
#include "context.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace smalldoubling {

namespace detail::ntt {

inline constexpr std::uint32_t kMod = 998244353;  // 119 * 2^23 + 1
inline constexpr std::uint32_t kRoot = 3;
inline constexpr std::size_t kMaxLength = std::size_t{1} << 23;

inline std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (b %= kMod; e; e >>= 1, b = b * b % kMod)
    if (e & 1) r = r * b % kMod;
  return static_cast<std::uint32_t>(r);
}

inline void transform(std::vector<std::uint32_t>& a, bool invert) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t w = pow_mod(kRoot, (kMod - 1) / len);
    if (invert) w = pow_mod(w, kMod - 2);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t wn = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::uint32_t u = a[i + j];
        const std::uint32_t v = static_cast<std::uint32_t>(a[i + j + len / 2] * wn % kMod);
        a[i + j] = u + v < kMod ? u + v : u + v - kMod;
        a[i + j + len / 2] = u >= v ? u - v : u + kMod - v;
        wn = wn * w % kMod;
      }
    }
  }
  if (invert) {
    const std::uint64_t inv_n = pow_mod(n, kMod - 2);
    for (auto& x : a) x = static_cast<std::uint32_t>(x * inv_n % kMod);
  }
}

/// Exact square of a polynomial whose coefficients and result coefficients
/// stay below the modulus.
inline std::vector<std::uint32_t> square(const std::vector<std::uint32_t>& p) {
  if (p.empty()) return {};
  const std::size_t out = 2 * p.size() - 1;
  const std::size_t len = std::bit_ceil(out);
  if (len > kMaxLength) throw BoundExceeded("convolution length exceeds the transform limit");
  std::vector<std::uint32_t> a(p);
  a.resize(len, 0);
  transform(a, false);
  for (auto& x : a) x = static_cast<std::uint32_t>(std::uint64_t{x} * x % kMod);
  transform(a, true);
  a.resize(out);
  return a;
}

}  // namespace detail::ntt

inline constexpr std::uint64_t kDefaultMinPlusBound = std::uint64_t{1} << 22;

/// Returns 2n-1 encoded outputs, output k being the pair sum of least true
/// value (ties: smaller encoding) over i + j = k.
inline std::vector<EncodedWeight> minplus_selfconv(std::span<const EncodedWeight> seq, const ValueOrder& order,
                                                   SolverContext& ctx,
                                                   std::uint64_t bound_budget = kDefaultMinPlusBound) {
  if (seq.empty()) return {};
  const std::size_t n = seq.size();
  BigInt max_enc = 0;
  for (const auto& e : seq) {
    if (e.value < 0) throw std::invalid_argument("encoded values must be non-negative");
    max_enc = std::max(max_enc, e.value);
  }
  const BigInt bound = max_enc + 1;
  if (bound > bound_budget)
    throw BoundExceeded("encoded bound " + bound.str() + " exceeds budget " + std::to_string(bound_budget));
  const auto B = bound.convert_to<std::size_t>();

  std::vector<std::uint64_t> enc(n);
  for (std::size_t i = 0; i < n; ++i) enc[i] = seq[i].value.convert_to<std::uint64_t>();

  // distinct values and their position bitsets
  std::vector<std::uint64_t> values(enc);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<std::int64_t> slot(B, -1);
  for (std::size_t i = 0; i < values.size(); ++i) slot[values[i]] = static_cast<std::int64_t>(i);

  const std::size_t in_words = (n + 63) / 64;
  const std::size_t out_len = 2 * n - 1;
  const std::size_t out_words = (out_len + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(values.size(), std::vector<std::uint64_t>(in_words, 0));
  std::vector<std::vector<std::size_t>> positions(values.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(slot[enc[i]]);
    bits[s][i / 64] |= std::uint64_t{1} << (i % 64);
    positions[s].push_back(i);
  }

  std::vector<std::uint32_t> presence(B, 0);
  for (auto v : values) presence[v] = 1;
  const auto squared = detail::ntt::square(presence);

  std::vector<EncodedWeight> sums;
  for (std::size_t s = 0; s < squared.size(); ++s)
    if (squared[s] != 0) {
      sums.emplace_back(BigInt(s));
      ctx.observe(sums.back().value);
    }
  if (order.has_table()) {
    std::sort(sums.begin(), sums.end(), [&](const EncodedWeight& a, const EncodedWeight& b) { return order.less(a, b); });
  } else {
    // same (true value, encoding) order, decoding each sum once; word-sized
    // keys when the largest true value allows it
    const EnlargedGap& g = order.gap();
    BigInt top = 0;
    for (std::size_t i = 0; i < g.dim(); ++i) top += g.generators()[i] * g.enlarged_bounds()[i];
    auto reorder = [&](auto& keyed) {
      std::sort(keyed.begin(), keyed.end());
      std::vector<EncodedWeight> sorted;
      sorted.reserve(sums.size());
      for (const auto& [tv, i] : keyed) sorted.push_back(std::move(sums[i]));
      sums = std::move(sorted);
    };
    if (g.fits_u64() && top < (BigInt(1) << 126)) {
      std::vector<unsigned __int128> gens;
      for (const auto& x : g.generators()) gens.push_back(x.convert_to<unsigned __int128>());
      std::vector<std::pair<unsigned __int128, std::size_t>> keyed;
      keyed.reserve(sums.size());
      for (std::size_t i = 0; i < sums.size(); ++i) {
        auto rest = sums[i].value.convert_to<std::uint64_t>();
        unsigned __int128 tv = 0;
        for (std::size_t j = g.dim(); j-- > 0;) {
          const std::uint64_t radix = g.enlarged_bounds()[j] + 1;
          tv += gens[j] * (rest % radix);
          rest /= radix;
        }
        keyed.emplace_back(tv, i);
      }
      reorder(keyed);
    } else {
      std::vector<std::pair<BigInt, std::size_t>> keyed;
      keyed.reserve(sums.size());
      for (std::size_t i = 0; i < sums.size(); ++i) keyed.emplace_back(order.value_of(sums[i]), i);
      reorder(keyed);
    }
  }

  std::vector<std::uint64_t> unassigned(out_words, ~std::uint64_t{0});
  if (out_len % 64) unassigned.back() = (std::uint64_t{1} << (out_len % 64)) - 1;
  std::size_t remaining = out_len;
  std::vector<std::uint64_t> reach(out_words);
  std::vector<EncodedWeight> out(out_len);

  auto shift_or = [&](const std::vector<std::uint64_t>& src, std::size_t shift) {
    const std::size_t ws = shift / 64, bs = shift % 64;
    for (std::size_t w = 0; w < in_words; ++w) {
      if (!src[w]) continue;
      reach[w + ws] |= src[w] << bs;
      if (bs && w + ws + 1 < out_words) reach[w + ws + 1] |= src[w] >> (64 - bs);
    }
  };

  // Finishing phase: once the outputs still open are cheaper to resolve one
  // by one than the projected pair work, pick each one's best pair directly
  // by its sum's rank in the sorted order.
  auto finish_directly = [&](std::size_t from) {
    std::vector<std::uint32_t> rank_of(2 * B - 1, std::numeric_limits<std::uint32_t>::max());
    for (std::size_t r = from; r < sums.size(); ++r)
      rank_of[sums[r].value.convert_to<std::size_t>()] = static_cast<std::uint32_t>(r);
    for (std::size_t w = 0; w < out_words; ++w)
      for (std::uint64_t open = unassigned[w]; open; open &= open - 1) {
        const std::size_t k = w * 64 + std::countr_zero(open);
        std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
        for (std::size_t i = k < n ? 0 : k - n + 1; 2 * i <= k; ++i) best = std::min(best, rank_of[enc[i] + enc[k - i]]);
        out[k] = sums[best];
      }
  };

  std::uint64_t work = 0;
  for (std::size_t idx = 0; idx < sums.size(); ++idx) {
    if (remaining == 0) break;
    if (idx >= 64 && remaining * (n / 2 + 1) < work / idx * (sums.size() - idx)) {
      finish_directly(idx);
      return out;
    }
    const auto& sum = sums[idx];
    const auto s = sum.value.convert_to<std::uint64_t>();
    std::fill(reach.begin(), reach.end(), 0);
    work += out_words;
    for (auto v1 : values) {
      if (2 * v1 > s) break;
      const std::uint64_t v2 = s - v1;
      if (v2 >= B || slot[v2] < 0) continue;
      const auto a = static_cast<std::size_t>(slot[v1]);
      const auto b = static_cast<std::size_t>(slot[v2]);
      const auto& pa = positions[a];
      const auto& pb = positions[b];
      const std::size_t lo = std::min(pa.size(), pb.size());
      ++work;
      if (pa.size() * pb.size() <= lo * in_words) {
        work += pa.size() * pb.size();
        // sparse values: mark i + j directly
        for (auto i : pa)
          for (auto j : pb) reach[(i + j) / 64] |= std::uint64_t{1} << ((i + j) % 64);
      } else {
        work += lo * in_words;
        const bool a_small = pa.size() <= pb.size();
        for (auto i : a_small ? pa : pb) shift_or(bits[a_small ? b : a], i);
      }
    }
    for (std::size_t w = 0; w < out_words; ++w) {
      std::uint64_t fresh = reach[w] & unassigned[w];
      unassigned[w] &= ~fresh;
      while (fresh) {
        const int bit = std::countr_zero(fresh);
        fresh &= fresh - 1;
        out[w * 64 + bit] = sum;
        --remaining;
      }
    }
  }
  return out;
}

}  // namespace smalldoubling
