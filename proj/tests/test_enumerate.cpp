#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rankvar/rankvar.hpp"

using namespace rankvar;

namespace {

const std::vector<std::vector<std::string>> kTwoFourTable = {
    {"(2,1)", "(3,1)", "(4,1)", "(3,2)", "(4,2)", "(4,3)"},
    {"(2 3,1)", "(3 4,1)", "(3,1 2)", "(4,1 2)", "(2,1 2 3)", "(3 4,2)", "(4,2 3)", "(3,2 3 4)"},
    {"(2 3 4,1)", "(2 3,1 2)", "(3 4,1 2)", "(4,1 2 3)", "(2,1 2 3 4)", "(3,1 2 3 4)", "(3 4,2 3)"},
    {"(2 3 4,1 2)", "(3 4,1 2 3)", "(2 3,1 2 3 4)"},
    {"(2 3 4,1 2 3)"}};

std::string squash(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

}  // namespace

TEST(Enumerate, TwoFourTableByDimension) {
  std::map<int, std::set<std::string>> got;
  for (const auto& M : all_rank_sets(2, 4)) got[dimension(M)].insert(squash(render_paper(M)));
  ASSERT_EQ(got.size(), kTwoFourTable.size());
  for (std::size_t d = 0; d < kTwoFourTable.size(); ++d) {
    std::set<std::string> want;
    for (const auto& s : kTwoFourTable[d]) want.insert(squash(s));
    EXPECT_EQ(got[static_cast<int>(d)], want) << "dim " << d;
    for (const auto& s : kTwoFourTable[d]) EXPECT_EQ(dimension(parse_paper_notation(s, 4)), static_cast<int>(d)) << s;
  }
}

TEST(Enumerate, MatchesNaiveEnumeration) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(all_rank_sets(k, n), oracle::naive_rank_sets(k, n)) << k << "," << n;
}

TEST(Enumerate, IncrementalDimensionIsCorrect) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k)
      for_each_rank_set(k, n, [&](const std::vector<Interval>& w, int d) {
        EXPECT_EQ(d, dimension(RankSet(n, w)));
      });
}

TEST(Enumerate, Counts) {
  const std::vector<long long> totals{1, 4, 14, 51, 202, 876, 4139};
  for (int n = 1; n <= 7; ++n) {
    long long total = 0;
    for (int k = 1; k <= n; ++k) total += static_cast<long long>(all_rank_sets(k, n).size());
    EXPECT_EQ(total, totals[static_cast<std::size_t>(n - 1)]);
  }
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(all_rank_sets(1, n).size(), static_cast<std::size_t>(n * (n + 1) / 2));
    EXPECT_EQ(all_rank_sets(n, n).size(), 1u);
  }
}

TEST(GPoly, TwoFour) {
  QPolynomial want{6, 8, 7, 3, 1};
  EXPECT_EQ(g_poly_direct(2, 4), want);
  EXPECT_EQ(g_poly_recurrence(2, 4), want);
}

TEST(GPoly, DirectEqualsRecurrence) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(g_poly_direct(k, n), g_poly_recurrence(k, n)) << k << "," << n;
}

TEST(GPoly, DegreeAndTopCoefficient) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      auto g = g_poly_direct(k, n);
      EXPECT_EQ(g.degree(), k * (n - k));
      EXPECT_EQ(g.coefficient(k * (n - k)), 1);
      EXPECT_EQ(g.eval(1), static_cast<long long>(all_rank_sets(k, n).size()));
    }
  EXPECT_EQ(g_poly_direct(1, 3), (QPolynomial{3, 2, 1}));
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(g_poly_direct(n, n), QPolynomial{1});
}

TEST(Stirling, SmallValues) {
  EXPECT_EQ(q_stirling(5, 3).eval(1), 25);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(q_stirling(n, 1), QPolynomial{1});
    EXPECT_EQ(q_stirling(n, n), QPolynomial::monomial(binom2(n)));
    EXPECT_TRUE(q_stirling(n, 0).is_zero());
  }
  EXPECT_EQ(q_stirling(0, 0), QPolynomial{1});
  EXPECT_TRUE(q_stirling(3, 4).is_zero());
}

TEST(Stirling, DivisibleByBinomialPower) {
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_GE(q_stirling(n, k).q_adic_valuation(), binom2(k));
}

TEST(Stirling, Identity) {
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_TRUE(verify_stirling_identity(k, n)) << k << "," << n;
}

TEST(Adjudication, OnlyExclusiveUnitAgrees) {
  auto rep = adjudicate_conventions(6);
  ASSERT_EQ(rep.candidates.size(), 4u);
  ASSERT_TRUE(rep.adopted);
  EXPECT_EQ(rep.adopted->bracket, bracket_convention::exclusive);
  EXPECT_EQ(rep.adopted->base, base_convention::unit);
  int agreeing = 0;
  for (const auto& c : rep.candidates) {
    EXPECT_EQ(c.checked, 21);
    agreeing += c.all_agree();
    if (!c.all_agree()) EXPECT_FALSE(c.first_mismatch.empty() && c.stirling_agreements == c.stirling_checked);
  }
  EXPECT_EQ(agreeing, 1);
}

TEST(QBracket, Conventions) {
  EXPECT_EQ(q_bracket(3, bracket_convention::exclusive), (QPolynomial{1, 1, 1}));
  EXPECT_EQ(q_bracket(3, bracket_convention::inclusive), (QPolynomial{1, 1, 1, 1}));
  EXPECT_TRUE(q_bracket(0, bracket_convention::exclusive).is_zero());
}
