#pragma once

// Sumsets, doubling constants and generalized arithmetic progressions.

#include "bigint.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace smalldoubling {

/// Non-empty, strictly increasing set of non-negative integer weights.
class WeightSet {
 public:
  /// Sorts and deduplicates; rejects empty input and negative values.
  explicit WeightSet(std::vector<BigInt> values) : elements_(std::move(values)) {
    if (elements_.empty()) throw std::invalid_argument("WeightSet must be non-empty");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.front() < 0) throw std::invalid_argument("WeightSet elements must be non-negative");
  }
  WeightSet(std::initializer_list<BigInt> values) : WeightSet(std::vector<BigInt>(values)) {}

  const std::vector<BigInt>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const BigInt& min() const noexcept { return elements_.front(); }
  const BigInt& max() const noexcept { return elements_.back(); }

  bool contains(const BigInt& v) const { return std::binary_search(elements_.begin(), elements_.end(), v); }

  /// Position of `v` in the sorted element list, if present.
  std::optional<std::size_t> index_of(const BigInt& v) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
    if (it == elements_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool operator==(const WeightSet&) const = default;

 private:
  std::vector<BigInt> elements_;
};

/// G = { x_1 l_1 + ... + x_d l_d : 0 <= l_i <= L_i }.
struct Gap {
  std::vector<BigInt> generators;
  std::vector<std::uint64_t> bounds;

  Gap() = default;
  Gap(std::vector<BigInt> gens, std::vector<std::uint64_t> bnds)
      : generators(std::move(gens)), bounds(std::move(bnds)) {
    validate();
  }

  std::size_t dim() const noexcept { return generators.size(); }

  /// Number of coordinate tuples, prod (L_i + 1).
  BigInt volume() const {
    BigInt v = 1;
    for (auto b : bounds) v *= BigInt(b) + 1;
    return v;
  }

  void validate() const {
    if (generators.empty()) throw std::invalid_argument("Gap dimension must be positive");
    if (generators.size() != bounds.size())
      throw std::invalid_argument("Gap generators and bounds differ in length");
    for (const auto& g : generators)
      if (g <= 0) throw std::invalid_argument("Gap generators must be positive");
  }

  bool operator==(const Gap&) const = default;
};

/// GAP coordinates <l_1, ..., l_d> of one element.
struct CoordTuple {
  std::vector<std::uint64_t> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  auto operator<=>(const CoordTuple&) const = default;
};

inline std::string to_string(const Gap& g) {
  std::string s = "d=" + std::to_string(g.dim()) + " x=";
  for (std::size_t i = 0; i < g.dim(); ++i) s += (i ? "," : "") + g.generators[i].str();
  s += " L=";
  for (std::size_t i = 0; i < g.dim(); ++i) s += (i ? "," : "") + std::to_string(g.bounds[i]);
  return s;
}

inline std::string to_string(const CoordTuple& t) {
  std::string s = "<";
  for (std::size_t i = 0; i < t.dim(); ++i) s += (i ? "," : "") + std::to_string(t.coords[i]);
  return s + ">";
}

/// Sum x_i l_i of a coordinate tuple.
inline BigInt evaluate(const Gap& g, const CoordTuple& t) {
  if (t.dim() != g.dim()) throw std::invalid_argument("coordinate tuple dimension mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < g.dim(); ++i) s += g.generators[i] * t.coords[i];
  return s;
}

/// A + B = { a + b }.
inline WeightSet sumset(const WeightSet& a, const WeightSet& b) {
  std::vector<BigInt> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) sums.push_back(x + y);
  return WeightSet(std::move(sums));
}

/// hA = (h-1)A + A, 1A = A.
inline WeightSet hfold(const WeightSet& a, unsigned h) {
  if (h == 0) throw std::invalid_argument("hfold requires h >= 1");
  WeightSet acc = a;
  for (unsigned i = 1; i < h; ++i) acc = sumset(acc, a);
  return acc;
}

/// |A + A| / |A| as an exact rational.
inline Rational doubling_constant(const WeightSet& a) {
  return Rational(BigInt(sumset(a, a).size()), BigInt(a.size()));
}

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

namespace detail {

// Visits every tuple of the box in lexicographic order (dimension 0 outermost)
// with its sum. The visitor returns false to stop. Prefixes whose sum already
// exceeds `cap` are skipped when a cap is given.
template <class Visitor>
bool visit_box(const Gap& g, std::size_t dim, const BigInt& base, CoordTuple& t,
               const std::optional<BigInt>& cap, Visitor& visit) {
  if (dim == g.dim()) return visit(t, base);
  BigInt s = base;
  for (std::uint64_t l = 0;; ++l, s += g.generators[dim]) {
    if (cap && s > *cap) break;
    t.coords[dim] = l;
    if (!visit_box(g, dim + 1, s, t, cap, visit)) return false;
    if (l == g.bounds[dim]) break;
  }
  t.coords[dim] = 0;
  return true;
}

}  // namespace detail

/// Materializes every element of the GAP (deduplicated).
inline WeightSet gap_enumerate(const Gap& g, std::uint64_t budget = kDefaultEnumerationBudget) {
  g.validate();
  const BigInt vol = g.volume();
  if (vol > budget)
    throw BudgetExceeded("GAP volume " + vol.str() + " exceeds enumeration budget " + std::to_string(budget));
  std::vector<BigInt> out;
  out.reserve(vol.convert_to<std::size_t>());
  CoordTuple t{std::vector<std::uint64_t>(g.dim(), 0)};
  auto collect = [&](const CoordTuple&, const BigInt& s) {
    out.push_back(s);
    return true;
  };
  detail::visit_box(g, 0, BigInt(0), t, std::nullopt, collect);
  return WeightSet(std::move(out));
}

/// Coordinates of every weight of `a` inside `g`, in the order of
/// `a.elements()`. Each weight gets its lexicographically smallest tuple.
/// Walks the box in lexicographic order, pruning prefixes whose sum already
/// exceeds max(a); `budget` caps the number of visited tuples.
inline std::vector<CoordTuple> get_gap_coordinates(const WeightSet& a, const Gap& g,
                                                   std::uint64_t budget = kDefaultEnumerationBudget) {
  g.validate();
  std::vector<std::optional<CoordTuple>> found(a.size());
  std::size_t remaining = a.size();
  std::uint64_t visited = 0;
  bool over_budget = false;
  CoordTuple t{std::vector<std::uint64_t>(g.dim(), 0)};
  auto index = [&](const CoordTuple& tuple, const BigInt& s) {
    if (++visited > budget) {
      over_budget = true;
      return false;
    }
    if (auto pos = a.index_of(s); pos && !found[*pos]) {
      found[*pos] = tuple;
      if (--remaining == 0) return false;
    }
    return true;
  };
  detail::visit_box(g, 0, BigInt(0), t, a.max(), index);
  if (remaining != 0) {
    if (over_budget)
      throw BudgetExceeded("coordinate search visited more than " + std::to_string(budget) + " tuples");
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!found[i]) throw NotCovered("weight " + a.elements()[i].str() + " is not in GAP " + to_string(g));
  }
  std::vector<CoordTuple> out;
  out.reserve(a.size());
  for (auto& f : found) out.push_back(std::move(*f));
  return out;
}

}  // namespace smalldoubling
