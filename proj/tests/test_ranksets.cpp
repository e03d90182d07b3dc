#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rankvar/ranksets.hpp"

using namespace rankvar;

namespace {

RankSet rs(int n, std::vector<std::pair<int, int>> v) { return make_rank_set(n, v); }

std::vector<int> colors_of(const RankSet& M, const std::vector<std::pair<int, int>>& order) {
  auto C = assign_colors(M);
  std::vector<int> out;
  for (auto [l, r] : order)
    for (std::size_t i = 0; i < M.intervals().size(); ++i)
      if (M.intervals()[i] == Interval{l, r}) out.push_back(C.colors[i]);
  return out;
}

}  // namespace

TEST(MakeRankSet, Examples) {
  EXPECT_NO_THROW(rs(8, {{1, 7}, {2, 6}, {3, 4}, {4, 5}, {6, 8}}));
  EXPECT_NO_THROW(rs(4, {{2, 2}, {1, 1}}));
  try {
    rs(5, {{1, 3}, {1, 4}});
    FAIL();
  } catch (const validation_error& e) {
    EXPECT_EQ(e.kind(), violation::duplicate_left_endpoint);
  }
}

TEST(MakeRankSet, ViolationKinds) {
  auto kind = [](int n, std::vector<std::pair<int, int>> v) {
    try {
      rs(n, v);
    } catch (const validation_error& e) {
      return e.kind();
    }
    return violation::bad_shape;
  };
  EXPECT_EQ(kind(5, {{1, 3}, {2, 3}}), violation::duplicate_right_endpoint);
  EXPECT_EQ(kind(5, {{3, 2}}), violation::reversed_interval);
  EXPECT_EQ(kind(5, {{0, 2}}), violation::endpoint_out_of_range);
  EXPECT_EQ(kind(5, {{2, 6}}), violation::endpoint_out_of_range);
  EXPECT_EQ(kind(5, {}), violation::empty_rank_set);
}

TEST(MakeRankSet, SetSemantics) {
  EXPECT_EQ(rs(8, {{6, 8}, {1, 7}, {4, 5}, {2, 6}, {3, 4}}), rs(8, {{1, 7}, {2, 6}, {3, 4}, {4, 5}, {6, 8}}));
}

TEST(AssignColors, Examples) {
  auto M = rs(8, {{1, 7}, {2, 6}, {3, 4}, {4, 5}, {6, 8}});
  EXPECT_EQ(colors_of(M, {{1, 7}, {2, 6}, {3, 4}, {4, 5}, {6, 8}}), (std::vector<int>{3, 2, 1, 1, 3}));
  EXPECT_EQ(assign_colors(M).m, 3);
  auto N = rs(7, {{1, 2}, {3, 4}, {6, 6}, {5, 7}});
  EXPECT_EQ(colors_of(N, {{1, 2}, {3, 4}, {6, 6}, {5, 7}}), (std::vector<int>{2, 2, 1, 2}));
  EXPECT_EQ(assign_colors(N).m, 2);
  auto A = rs(6, {{1, 3}, {2, 4}, {5, 6}});
  EXPECT_EQ(assign_colors(A).m, 1);
}

TEST(AssignColors, StrictContainmentLowersColorAndKjIncreases) {
  for (const auto& M : oracle::rank_sets_upto(6)) {
    auto C = assign_colors(M);
    const auto& W = M.intervals();
    for (std::size_t i = 0; i < W.size(); ++i)
      for (std::size_t j = 0; j < W.size(); ++j)
        if (i != j && W[i].subset_of(W[j])) EXPECT_LT(C.colors[i], C.colors[j]);
    for (int j = 1; j < C.m; ++j) EXPECT_LT(C.k_at(j), C.k_at(j + 1));
    EXPECT_EQ(C.k_at(C.m), M.k());
    EXPECT_GE(C.k_at(1), 1);
  }
}

TEST(Dimension, Examples) {
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(dimension(full_staircase(k, n)), k * (n - k));
  EXPECT_EQ(dimension(rs(4, {{2, 3}, {1, 1}})), 1);
  EXPECT_EQ(dimension(rs(4, {{2, 4}, {1, 3}})), 4);
}

TEST(Dimension, BoundsAndNaiveAgreement) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      for (const auto& M : all_rank_sets(k, n)) {
        const int d = dimension(M);
        EXPECT_EQ(d, oracle::naive_dimension(M));
        EXPECT_GE(d, 0);
        EXPECT_LE(d, k * (n - k));
        EXPECT_EQ(d == k * (n - k), M == full_staircase(k, n));
      }
}

TEST(GenericRank, Examples) {
  auto M = rs(10, {{1, 6}, {3, 4}, {5, 10}, {7, 8}});
  std::vector<int> all{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  EXPECT_EQ(generic_rank(M, std::span<const int>(all)), 4);
  EXPECT_EQ(generic_rank(M, std::span<const int>{}), 0);
  std::vector<int> S{3, 4, 5, 6, 7, 8, 9, 10};
  int direct = 0;
  for (const auto& w : M.intervals()) {
    bool in = true;
    for (int x = w.l; x <= w.r; ++x) in = in && std::find(S.begin(), S.end(), x) != S.end();
    direct += in;
  }
  EXPECT_EQ(direct, 3);
  EXPECT_EQ(generic_rank(M, std::span<const int>(S)), direct);
}

TEST(GenericRank, MonotoneInS) {
  for (const auto& M : all_rank_sets(3, 6))
    for (IndexMask S = 0; S < 64; ++S)
      for (int x = 0; x < 6; ++x) EXPECT_LE(generic_rank(M, S), generic_rank(M, S | (IndexMask{1} << x)));
}

TEST(GenericIntersectionDim, MatchesRandomPoint) {
  std::mt19937 rng(7);
  for (const auto& M : oracle::rank_sets_upto(5)) {
    auto prof = oracle::random_point_profile(M, rng);
    for (IndexMask S = 0; S < prof.size(); ++S) {
      EXPECT_EQ(generic_intersection_dim(M, S), prof[S]);
      EXPECT_GE(generic_intersection_dim(M, S), generic_rank(M, S));
    }
  }
}

TEST(Normalize, Examples) {
  auto N = normalize(10, {{3, 4}, {3, 4}, {5, 10}, {7, 8}});
  ASSERT_TRUE(N);
  EXPECT_EQ(*N, rs(10, {{3, 3}, {4, 4}, {5, 10}, {7, 8}}));
  auto M = rs(8, {{1, 7}, {2, 6}, {3, 4}, {4, 5}, {6, 8}});
  EXPECT_EQ(normalize(8, M.intervals()), M);
  EXPECT_FALSE(normalize(5, {{3, 3}, {3, 3}}).has_value());
}

TEST(Normalize, IdempotentAndValid) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int k = 1 + static_cast<int>(rng() % n);
    std::vector<Interval> v;
    for (int i = 0; i < k; ++i) {
      int a = 1 + static_cast<int>(rng() % n), b = 1 + static_cast<int>(rng() % n);
      v.push_back({std::min(a, b), std::max(a, b)});
    }
    for (auto order : {normalize_order::smallest_first, normalize_order::largest_first}) {
      auto N = normalize(n, v, order);
      if (!N) continue;
      EXPECT_EQ(N->k(), k);
      EXPECT_EQ(normalize(n, N->intervals(), order), N);
    }
  }
}

TEST(RankVarietyContains, Examples) {
  auto M = rs(10, {{1, 6}, {3, 4}, {5, 10}, {7, 8}});
  EXPECT_TRUE(rank_variety_contains(M, M));
  EXPECT_TRUE(rank_variety_contains(rs(10, {{3, 3}, {4, 4}, {5, 10}, {7, 8}}), M));
  EXPECT_FALSE(rank_variety_contains(M, rs(10, {{3, 3}, {4, 4}, {5, 10}, {7, 8}})));
  EXPECT_FALSE(rank_variety_contains(rs(3, {{1, 1}}), rs(3, {{2, 2}})));
  EXPECT_FALSE(rank_variety_contains(rs(3, {{2, 2}}), rs(3, {{1, 1}})));
  EXPECT_THROW(rank_variety_contains(rs(3, {{1, 1}}), rs(4, {{1, 1}})), rankvar::domain_error);
  EXPECT_THROW(rank_variety_contains(full_staircase(2, 15), full_staircase(2, 15)), capability_error);
}

TEST(RankVarietyContains, MatchesRandomPointOracle) {
  std::mt19937 rng(3);
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      auto sets = all_rank_sets(k, n);
      for (const auto& a : sets)
        for (const auto& b : sets) EXPECT_EQ(rank_variety_contains(a, b), oracle::random_point_contained(a, b, rng));
    }
}

// Comparing generic ranks alone gives the same verdict as the exact
// intersection-dimension test on every pair up to n = 6.
TEST(RankVarietyContains, AgreesWithCountComparison) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      auto sets = all_rank_sets(k, n);
      for (const auto& a : sets)
        for (const auto& b : sets) {
          bool counts = true;
          for (IndexMask S = 0; S < (IndexMask{1} << n) && counts; ++S) counts = generic_rank(a, S) >= generic_rank(b, S);
          ASSERT_EQ(rank_variety_contains(a, b), counts) << render_text(a) << " in " << render_text(b);
        }
    }
}

TEST(ReverseBasis, PreservesDimension) {
  for (const auto& M : oracle::rank_sets_upto(6)) {
    EXPECT_EQ(dimension(reverse_basis(M)), dimension(M));
    EXPECT_EQ(reverse_basis(reverse_basis(M)), M);
  }
}
