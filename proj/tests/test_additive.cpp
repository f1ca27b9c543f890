#include "smalldoubling/additive.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace smalldoubling;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

// Independent h-fold sumset: every multiset of size h by recursion over sets.
std::set<BigInt> hfold_by_hand(const std::vector<BigInt>& a, unsigned h) {
  std::set<BigInt> cur{0};
  for (unsigned i = 0; i < h; ++i) {
    std::set<BigInt> next;
    for (const auto& s : cur)
      for (const auto& x : a) next.insert(s + x);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TEST(WeightSet, SortsAndDeduplicates) {
  WeightSet a(big({8, 2, 4, 2, 6}));
  EXPECT_EQ(a.elements(), big({2, 4, 6, 8}));
  EXPECT_EQ(a.min(), 2);
  EXPECT_EQ(a.max(), 8);
  EXPECT_EQ(a.index_of(6), 2u);
  EXPECT_FALSE(a.index_of(5));
}

TEST(WeightSet, RejectsEmptyAndNegative) {
  EXPECT_THROW(WeightSet(std::vector<BigInt>{}), std::invalid_argument);
  EXPECT_THROW(WeightSet(big({1, -3})), std::invalid_argument);
}

TEST(Sumset, EvenNumbers) {
  WeightSet a{2, 4, 6, 8};
  EXPECT_EQ(sumset(a, a).elements(), big({4, 6, 8, 10, 12, 14, 16}));
}

TEST(Sumset, ZeroIdentity) { EXPECT_EQ(sumset(WeightSet{0}, WeightSet{0}).elements(), big({0})); }

TEST(Sumset, SidonLikeSetHasTenSums) {
  WeightSet a{3, 5, 9, 17};
  EXPECT_EQ(sumset(a, a).size(), 10u);
}

TEST(Hfold, Examples) {
  EXPECT_EQ(hfold(WeightSet{2, 4}, 1).elements(), big({2, 4}));
  EXPECT_EQ(hfold(WeightSet{0, 1}, 3).elements(), big({0, 1, 2, 3}));
  WeightSet a{2, 4, 6, 8};
  EXPECT_EQ(hfold(a, 2), sumset(a, a));
  EXPECT_THROW(hfold(a, 0), std::invalid_argument);
}

TEST(Hfold, MatchesMultisetEnumeration) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 40; ++round) {
    std::vector<BigInt> v;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) v.push_back(BigInt(rng() % 50));
    const unsigned h = 1 + static_cast<unsigned>(rng() % 4);
    const auto want = hfold_by_hand(v, h);
    const auto got = hfold(WeightSet(v), h).elements();
    EXPECT_EQ(std::vector<BigInt>(want.begin(), want.end()), got);
  }
}

TEST(Doubling, Examples) {
  EXPECT_EQ(doubling_constant(WeightSet{2, 4, 6, 8}), Rational(7, 4));
  EXPECT_EQ(doubling_constant(WeightSet{5}), Rational(1));
  EXPECT_EQ(doubling_constant(WeightSet{3, 5, 9, 17}), Rational(10, 4));
}

TEST(Doubling, ArithmeticProgressionIsTwoMinusOneOverN) {
  for (long long n : {1, 2, 7, 100}) {
    std::vector<BigInt> v;
    for (long long i = 0; i < n; ++i) v.push_back(BigInt(1'000'000'000'000LL) + 13 * i);
    EXPECT_EQ(doubling_constant(WeightSet(v)), Rational(2 * n - 1, n));
  }
}

TEST(Doubling, BoundedByOneAndSidonValue) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    std::vector<BigInt> v;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 12); ++i) v.push_back(BigInt(rng() % 1000));
    WeightSet a(v);
    const auto n = static_cast<long long>(a.size());
    const auto c = doubling_constant(a);
    EXPECT_GE(c, Rational(1));
    EXPECT_LE(c, Rational(n * (n + 1) / 2, n));
  }
}

TEST(GapEnumerate, Examples) {
  EXPECT_EQ(gap_enumerate(Gap({2}, {3})).elements(), big({0, 2, 4, 6}));
  EXPECT_EQ(gap_enumerate(Gap({3, 10}, {2, 1})).elements(), big({0, 3, 6, 10, 13, 16}));
  EXPECT_EQ(gap_enumerate(Gap({1}, {0})).elements(), big({0}));
}

TEST(GapEnumerate, BudgetExceeded) {
  EXPECT_THROW(gap_enumerate(Gap({1, 1000}, {999, 999}), 1000), BudgetExceeded);
}

TEST(Gap, Validation) {
  EXPECT_THROW(Gap({}, {}), std::invalid_argument);
  EXPECT_THROW(Gap({3}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(Gap({0}, {2}), std::invalid_argument);
  EXPECT_EQ(Gap({3, 10}, {2, 1}).volume(), 6);
}

TEST(GapCoordinates, Examples) {
  const Gap g({3, 10}, {2, 1});
  EXPECT_EQ(get_gap_coordinates(WeightSet{13}, g), (std::vector<CoordTuple>{CoordTuple{{1, 1}}}));
  EXPECT_EQ(get_gap_coordinates(WeightSet{6}, g), (std::vector<CoordTuple>{CoordTuple{{2, 0}}}));
  EXPECT_EQ(get_gap_coordinates(WeightSet{0}, Gap({5, 7, 9}, {1, 2, 3})),
            (std::vector<CoordTuple>{CoordTuple{{0, 0, 0}}}));
}

TEST(GapCoordinates, NotCovered) {
  EXPECT_THROW(get_gap_coordinates(WeightSet{4}, Gap({3, 10}, {2, 1})), NotCovered);
  EXPECT_THROW(get_gap_coordinates(WeightSet{17}, Gap({3, 10}, {2, 1})), NotCovered);
}

TEST(GapCoordinates, EvaluateBackToWeights) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    const std::size_t d = 1 + rng() % 3;
    std::vector<BigInt> gens;
    std::vector<std::uint64_t> bounds;
    for (std::size_t i = 0; i < d; ++i) {
      gens.push_back(BigInt(1 + rng() % 1'000'000'000'000ULL));
      bounds.push_back(rng() % 6);
    }
    const Gap g(gens, bounds);
    const auto all = gap_enumerate(g).elements();
    std::vector<BigInt> pick;
    for (const auto& x : all)
      if (rng() % 2) pick.push_back(x);
    if (pick.empty()) pick.push_back(all.front());
    const WeightSet a(pick);
    const auto coords = get_gap_coordinates(a, g);
    ASSERT_EQ(coords.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(evaluate(g, coords[i]), a.elements()[i]);
      for (std::size_t j = 0; j < d; ++j) EXPECT_LE(coords[i].coords[j], bounds[j]);
    }
  }
}

TEST(GapCoordinates, LexicographicallySmallestTuple) {
  // 6 = 3*2 = 6*1: both tuples lie in the box, the smaller one wins.
  const auto c = get_gap_coordinates(WeightSet{6}, Gap({3, 6}, {2, 1}));
  EXPECT_EQ(c[0], (CoordTuple{{0, 1}}));
}

TEST(Formatting, GapAndTuple) {
  EXPECT_EQ(to_string(Gap({3, 10}, {2, 1})), "d=2 x=3,10 L=2,1");
  EXPECT_EQ(to_string(CoordTuple{{1, 2}}), "<1,2>");
}
