#pragma once

// Desk-scale GAP cover search for weight sets, dimension <= 3.
//
// The search shifts the set either by nothing or by its minimum (the shift
// becomes an extra leading dimension with generator min(a) and bound 1),
// then tries dimension 1, 2, 3 in turn. Dimension 1 uses the GCD of the
// shifted set. Higher dimensions draw generator candidates from the small
// pairwise differences of the set and represent every element greedily
// (largest coordinate on the largest generator first). The first dimension
// admitting a cover within the volume budget wins; inside that dimension the
// smallest volume wins, ties going to the unshifted form and then to the
// earlier candidate.

#include "additive.hpp"
#include "bigint.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <type_traits>
#include <optional>
#include <vector>

namespace smalldoubling {

namespace detail::cover {

template <class Int>
Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

template <class Int>
Int mod(const Int& a, const Int& m) {
  Int r = a % m;
  return r < 0 ? Int(r + m) : r;
}

// Inverse of a modulo m, gcd(a, m) == 1, m >= 1.
template <class Int>
Int inverse(Int a, Int m) {
  if (m == 1) return 0;
  Int r0 = m, r1 = mod(a, m);
  Int s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Int s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return mod(s0, m);
}

inline constexpr std::size_t kDifferenceWindow = 128;
inline constexpr std::size_t kSmallCandidates2 = 8;
inline constexpr std::size_t kLargeCandidates2 = 128;
inline constexpr std::size_t kCandidates3[3] = {16, 12, 6};  // x1, x2, x3 pools
inline constexpr std::uint64_t kDescentCap3 = 16;

template <class Int>
struct Cover {
  std::vector<Int> generators;  // descending
  std::vector<std::uint64_t> bounds;
  BigInt volume;
};

template <class Int>
struct Rep2 {
  Int x1, x2, g, m, inv;
  Rep2(Int a, Int b) : x1(a), x2(b) {
    g = gcd(x1, x2);
    m = x2 / g;
    inv = inverse(Int(x1 / g), m);
  }
  // Greedy representation c = x1*l1 + x2*l2 with l1 maximal.
  bool operator()(const Int& c, Int& l1, Int& l2) const {
    if (c < 0 || c % g != 0) return false;
    Int t = c / x1;
    Int r = mod(Int(mod(Int(c / g), m) * inv), m);
    l1 = t - mod(Int(t - r), m);
    if (l1 < 0) return false;
    l2 = (c - x1 * l1) / x2;
    return true;
  }
};

template <class Int>
Int to_int(const BigInt& v) {
  if constexpr (std::is_same_v<Int, BigInt>)
    return v;
  else
    return static_cast<Int>(v.convert_to<long long>());
}

template <class Int>
BigInt to_big(const Int& v) {
  if constexpr (std::is_same_v<Int, BigInt>)
    return v;
  else
    return BigInt(static_cast<long long>(v));
}

// Tracks the running bounding box and aborts once it exceeds `limit`.
struct BoxTracker {
  std::vector<std::uint64_t> bounds;
  BigInt limit;
  explicit BoxTracker(std::size_t d, BigInt lim) : bounds(d, 0), limit(std::move(lim)) {}
  template <class Int>
  bool extend(std::size_t i, const Int& l) {
    const BigInt big = to_big(l);
    if (big > limit) return false;
    auto v = big.template convert_to<std::uint64_t>();
    if (v > bounds[i]) bounds[i] = v;
    return volume() <= limit;
  }
  BigInt volume() const {
    BigInt v = 1;
    for (auto b : bounds) v *= BigInt(b) + 1;
    return v;
  }
};

template <class Int>
std::optional<Cover<Int>> try_cover1(const std::vector<Int>& set, const BigInt& limit) {
  Int g = 0;
  for (const auto& c : set) g = gcd(g, c);
  if (g == 0) return Cover<Int>{{Int(1)}, {0}, BigInt(1)};
  Int l = set.back() / g;
  BoxTracker box(1, limit);
  if (!box.extend(0, l)) return std::nullopt;
  return Cover<Int>{{g}, box.bounds, box.volume()};
}

template <class Int>
std::optional<Cover<Int>> try_cover2(const std::vector<Int>& set, const Int& x1, const Int& x2,
                                     const BigInt& limit) {
  Rep2<Int> rep(x1, x2);
  BoxTracker box(2, limit);
  Int l1, l2;
  for (const auto& c : set) {
    if (!rep(c, l1, l2)) return std::nullopt;
    if (!box.extend(0, l1) || !box.extend(1, l2)) return std::nullopt;
  }
  return Cover<Int>{{x1, x2}, box.bounds, box.volume()};
}

template <class Int>
std::optional<Cover<Int>> try_cover3(const std::vector<Int>& set, const Int& x1, const Int& x2,
                                     const Int& x3, const BigInt& limit) {
  Rep2<Int> rep(x2, x3);
  BoxTracker box(3, limit);
  Int l2, l3;
  for (const auto& c : set) {
    Int top = c / x1;
    bool ok = false;
    for (std::uint64_t step = 0; step <= kDescentCap3 && step <= top; ++step) {
      Int l1 = top - Int(step);
      if (rep(Int(c - x1 * l1), l2, l3)) {
        if (!box.extend(0, l1) || !box.extend(1, l2) || !box.extend(2, l3)) return std::nullopt;
        ok = true;
        break;
      }
    }
    if (!ok) return std::nullopt;
  }
  return Cover<Int>{{x1, x2, x3}, box.bounds, box.volume()};
}

// Smallest distinct positive differences between nearby elements, plus the
// elements themselves.
template <class Int>
std::vector<Int> difference_candidates(const std::vector<Int>& set) {
  std::vector<Int> diffs;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] > 0) diffs.push_back(set[i]);
    for (std::size_t j = i + 1; j < set.size() && j <= i + kDifferenceWindow; ++j) diffs.push_back(set[j] - set[i]);
  }
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  return diffs;
}

template <class Int>
std::vector<Int> take_not_multiple(const std::vector<Int>& pool, std::initializer_list<Int> of, std::size_t k,
                                   const Int& above) {
  std::vector<Int> out;
  for (const auto& v : pool) {
    if (out.size() == k) break;
    if (v <= above) continue;
    bool multiple = false;
    for (const auto& x : of) multiple = multiple || v % x == 0;
    if (!multiple) out.push_back(v);
  }
  return out;
}

template <class Int>
std::optional<Cover<Int>> best_cover(const std::vector<Int>& set, std::size_t dim, const BigInt& limit) {
  if (dim == 1) return try_cover1(set, limit);
  auto pool = difference_candidates(set);
  std::optional<Cover<Int>> best;
  BigInt cur = limit;
  auto consider = [&](std::optional<Cover<Int>> c) {
    if (c && (!best || c->volume < best->volume)) {
      cur = c->volume;
      best = std::move(c);
    }
  };
  if (dim == 2) {
    for (std::size_t s = 0; s < std::min(pool.size(), kSmallCandidates2); ++s) {
      const Int x2 = pool[s];
      for (const auto& x1 : take_not_multiple(pool, {x2}, kLargeCandidates2, x2))
        consider(try_cover2(set, x1, x2, cur));
    }
  } else {
    for (std::size_t s = 0; s < std::min(pool.size(), kCandidates3[2]); ++s) {
      const Int x3 = pool[s];
      for (const auto& x2 : take_not_multiple(pool, {x3}, kCandidates3[1], x3))
        for (const auto& x1 : take_not_multiple(pool, {x2, x3}, kCandidates3[0], x2))
          consider(try_cover3(set, x1, x2, x3, cur));
    }
  }
  return best;
}

template <class Int>
Gap search(const WeightSet& a, std::size_t max_dim, const BigInt& volume_budget) {
  struct Variant {
    BigInt offset;
    std::vector<Int> reduced;  // shifted elements divided by their gcd
    Int scale;
  };
  std::vector<Variant> variants;
  auto make_variant = [&](const BigInt& offset) {
    std::vector<Int> shifted;
    shifted.reserve(a.size());
    for (const auto& v : a.elements()) shifted.push_back(to_int<Int>(BigInt(v - offset)));
    Int g = 0;
    for (const auto& v : shifted) g = gcd(g, v);
    if (g == 0) g = 1;
    for (auto& v : shifted) v /= g;
    variants.push_back({offset, std::move(shifted), g});
  };
  make_variant(0);
  if (a.min() > 0 && a.size() > 1) make_variant(a.min());

  for (std::size_t dim = 1; dim <= max_dim; ++dim) {
    std::optional<Gap> best;
    BigInt best_volume = 0;
    for (const auto& var : variants) {
      const BigInt factor = var.offset > 0 ? 2 : 1;
      BigInt limit = volume_budget / factor;
      if (best) limit = std::min(limit, BigInt((best_volume - 1) / factor));
      if (limit < 1) continue;
      auto cover = best_cover(var.reduced, dim, limit);
      if (!cover) continue;
      std::vector<BigInt> gens;
      std::vector<std::uint64_t> bounds;
      if (var.offset > 0) {
        gens.push_back(var.offset);
        bounds.push_back(1);
      }
      for (std::size_t i = 0; i < cover->generators.size(); ++i) {
        gens.push_back(to_big(cover->generators[i]) * to_big(var.scale));
        bounds.push_back(cover->bounds[i]);
      }
      best = Gap(std::move(gens), std::move(bounds));
      best_volume = cover->volume * factor;
    }
    if (best) return *best;
  }
  throw NoCoverFound("no GAP of dimension <= " + std::to_string(max_dim) + " and volume <= " +
                     volume_budget.str() + " covers the weight set");
}

}  // namespace detail::cover

/// Finds a GAP containing every element of `a` with dimension at most
/// `max_dim` (a translation adds one fixed leading dimension) and volume at
/// most `volume_budget`. Throws NoCoverFound otherwise.
inline Gap gap_cover_search(const WeightSet& a, std::size_t max_dim, const BigInt& volume_budget) {
  if (max_dim < 1 || max_dim > 3) throw std::invalid_argument("max_dim must lie in [1, 3]");
  if (a.max() == 0) return Gap({BigInt(1)}, {0});
  if (a.max() < (BigInt(1) << 62)) return detail::cover::search<__int128>(a, max_dim, volume_budget);
  return detail::cover::search<BigInt>(a, max_dim, volume_budget);
}

}  // namespace smalldoubling
