#pragma once

// Order-aware mixed-radix encoding of GAP coordinate tuples.
//
// Coordinates are first enlarged by a per-problem factor lambda so that every
// sum the solver forms stays inside the box; the encoding is then additive
// (kappa(a + b) = kappa(a) + kappa(b)) and injective on that box. The
// encoding follows lexicographic order of tuples, not the order of the values
// they stand for, so comparisons go through `true_value` or a rank table.

#include "additive.hpp"
#include "bigint.hpp"
#include "errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace smalldoubling {

/// A GAP whose bounds were multiplied by lambda; defines the encoding range.
class EnlargedGap {
 public:
  EnlargedGap(Gap base, std::uint64_t lambda) : base_(std::move(base)), lambda_(lambda) {
    base_.validate();
    if (lambda_ == 0) throw std::invalid_argument("lambda must be positive");
    range_ = 1;
    for (auto b : base_.bounds) {
      const std::uint64_t e = checked_mul(b, lambda_);
      enlarged_.push_back(e);
      radices_.push_back(BigInt(e) + 1);
      range_ *= radices_.back();
    }
    fits_u64_ = range_ <= std::numeric_limits<std::uint64_t>::max();
  }

  const Gap& base() const noexcept { return base_; }
  std::uint64_t lambda() const noexcept { return lambda_; }
  std::size_t dim() const noexcept { return base_.dim(); }
  const std::vector<std::uint64_t>& enlarged_bounds() const noexcept { return enlarged_; }
  const std::vector<BigInt>& generators() const noexcept { return base_.generators; }
  /// Radix of dimension i, lambda*L_i + 1.
  const BigInt& radix(std::size_t i) const { return radices_.at(i); }
  /// |G'| = prod (lambda*L_i + 1); every encoding is strictly below it.
  const BigInt& range() const noexcept { return range_; }
  /// Whether every encoding fits in 64 bits, enabling word-sized decoding.
  bool fits_u64() const noexcept { return fits_u64_; }

 private:
  Gap base_;
  std::uint64_t lambda_;
  std::vector<std::uint64_t> enlarged_;
  std::vector<BigInt> radices_;
  BigInt range_;
  bool fits_u64_ = false;
};

/// An integer produced by `kappa`; sums of encodings are encodings of sums.
struct EncodedWeight {
  BigInt value;

  EncodedWeight() = default;
  explicit EncodedWeight(BigInt v) : value(std::move(v)) {}

  friend EncodedWeight operator+(const EncodedWeight& a, const EncodedWeight& b) {
    return EncodedWeight(a.value + b.value);
  }
  bool operator==(const EncodedWeight&) const = default;
  auto operator<=>(const EncodedWeight& o) const { return value.compare(o.value) <=> 0; }
};

inline EnlargedGap enlarge(const Gap& g, std::uint64_t lambda) { return EnlargedGap(g, lambda); }

/// Mixed-radix encoding, dimension 1 most significant.
inline EncodedWeight kappa(const EnlargedGap& g, const CoordTuple& t) {
  if (t.dim() != g.dim()) throw std::invalid_argument("coordinate tuple dimension mismatch");
  BigInt e = 0;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (t.coords[i] > g.enlarged_bounds()[i])
      throw OutOfBounds(i, "coordinate " + std::to_string(t.coords[i]) + " of dimension " + std::to_string(i) +
                               " exceeds enlarged bound " + std::to_string(g.enlarged_bounds()[i]));
    // l_d + (L_d + 1) * kappa(first d-1 dimensions), unrolled
    e = e * g.radix(i) + t.coords[i];
  }
  return EncodedWeight(std::move(e));
}

inline CoordTuple kappa_inv(const EnlargedGap& g, const EncodedWeight& e) {
  if (e.value < 0 || e.value >= g.range())
    throw OutOfRange("encoded value " + e.value.str() + " outside [0, " + g.range().str() + ")");
  CoordTuple t{std::vector<std::uint64_t>(g.dim(), 0)};
  if (g.fits_u64()) {
    auto rest = e.value.convert_to<std::uint64_t>();
    for (std::size_t i = g.dim(); i-- > 0;) {
      const std::uint64_t radix = g.enlarged_bounds()[i] + 1;
      t.coords[i] = rest % radix;
      rest /= radix;
    }
    return t;
  }
  BigInt rest = e.value;
  for (std::size_t i = g.dim(); i-- > 0;) {
    BigInt q, r;
    boost::multiprecision::divide_qr(rest, g.radix(i), q, r);
    t.coords[i] = r.convert_to<std::uint64_t>();
    rest = std::move(q);
  }
  return t;
}

/// Original-scale value sum x_i l_i of an encoding.
inline BigInt true_value(const EnlargedGap& g, const EncodedWeight& e) {
  return evaluate(g.base(), kappa_inv(g, e));
}

inline constexpr std::uint64_t kDefaultPermutationBudget = 10'000'000;

/// Every encoding of the enlarged box sorted by (true value, encoding).
class PermutationTable {
 public:
  struct Entry {
    std::uint64_t encoded;
    BigInt true_value;
  };

  PermutationTable(std::vector<Entry> sorted, std::vector<std::uint64_t> rank_of)
      : sorted_(std::move(sorted)), rank_of_(std::move(rank_of)) {}

  const std::vector<Entry>& sorted_entries() const noexcept { return sorted_; }
  std::size_t size() const noexcept { return sorted_.size(); }

  std::uint64_t rank(const EncodedWeight& e) const {
    if (e.value < 0 || e.value >= rank_of_.size())
      throw OutOfRange("encoded value " + e.value.str() + " outside the permutation table");
    return rank_of_[e.value.convert_to<std::size_t>()];
  }

 private:
  std::vector<Entry> sorted_;
  std::vector<std::uint64_t> rank_of_;
};

/// Enumerates the whole enlarged box (odometer order equals encoding order),
/// evaluates each tuple and sorts by (true value, encoding).
inline PermutationTable build_permutation(const EnlargedGap& g,
                                          std::uint64_t budget = kDefaultPermutationBudget) {
  if (g.range() > budget)
    throw BudgetExceeded("enlarged GAP volume " + g.range().str() + " exceeds permutation budget " +
                         std::to_string(budget));
  const auto n = g.range().convert_to<std::uint64_t>();
  std::vector<PermutationTable::Entry> entries;
  entries.reserve(n);
  std::vector<std::uint64_t> digits(g.dim(), 0);
  BigInt value = 0;
  for (std::uint64_t e = 0; e < n; ++e) {
    entries.push_back({e, value});
    for (std::size_t i = g.dim(); i-- > 0;) {
      if (digits[i] < g.enlarged_bounds()[i]) {
        ++digits[i];
        value += g.generators()[i];
        break;
      }
      value -= g.generators()[i] * digits[i];
      digits[i] = 0;
    }
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.true_value != b.true_value) return a.true_value < b.true_value;
    return a.encoded < b.encoded;
  });
  std::vector<std::uint64_t> rank_of(n);
  for (std::uint64_t r = 0; r < n; ++r) rank_of[entries[r].encoded] = r;
  return PermutationTable(std::move(entries), std::move(rank_of));
}

/// Total order on encodings by (true value, encoding). Uses a rank table once
/// one has been requested and fits the budget; otherwise decodes and
/// evaluates. Both routes give the same order.
class ValueOrder {
 public:
  explicit ValueOrder(const EnlargedGap& g, std::uint64_t permutation_budget = kDefaultPermutationBudget)
      : gap_(&g), budget_(permutation_budget) {}

  const EnlargedGap& gap() const noexcept { return *gap_; }

  /// Builds the rank table if it fits the budget. Returns whether it exists.
  bool request_ranks() {
    if (!table_ && !table_refused_) {
      if (gap_->range() <= budget_)
        table_.emplace(build_permutation(*gap_, budget_));
      else
        table_refused_ = true;
    }
    return table_.has_value();
  }

  bool has_table() const noexcept { return table_.has_value(); }
  const PermutationTable* table() const noexcept { return table_ ? &*table_ : nullptr; }

  bool less(const EncodedWeight& a, const EncodedWeight& b) const {
    if (table_) return table_->rank(a) < table_->rank(b);
    const BigInt ta = true_value(*gap_, a);
    const BigInt tb = true_value(*gap_, b);
    if (ta != tb) return ta < tb;
    return a.value < b.value;
  }

  BigInt value_of(const EncodedWeight& e) const { return true_value(*gap_, e); }

 private:
  const EnlargedGap* gap_;
  std::uint64_t budget_;
  std::optional<PermutationTable> table_;
  bool table_refused_ = false;
};

}  // namespace smalldoubling
