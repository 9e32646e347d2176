#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scc/concave.hpp"

namespace scc {
namespace {

std::int64_t tri(std::int64_t a) { return a * (a + 1) / 2; }

TEST(EnumerateScc, SmallWeights) {
  const auto zero = enumerate_scc(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].center, 0);
  EXPECT_EQ(zero[0].rank(), 0);

  const auto one = enumerate_scc(1);
  std::multiset<std::vector<std::int64_t>> parts;
  for (const auto& c : one) parts.insert(c.parts());
  EXPECT_EQ(parts, (std::multiset<std::vector<std::int64_t>>{{1}, {0, 1}, {1, 0}}));
  for (const auto& c : one) {
    if (c.parts() == std::vector<std::int64_t>{0, 1}) EXPECT_EQ(c.rank(), 1);
    if (c.parts() == std::vector<std::int64_t>{1, 0}) EXPECT_EQ(c.rank(), -1);
  }

  std::multiset<std::int64_t> ranks;
  for (const auto& c : enumerate_scc(2)) ranks.insert(c.rank());
  EXPECT_EQ(ranks, (std::multiset<std::int64_t>{-1, 0, 0, 1}));
}

TEST(EnumerateScc, EachCompositionValidUniqueAndOfRightWeight) {
  for (std::int64_t n = 0; n <= 18; ++n) {
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& c : enumerate_scc(n)) {
      ASSERT_TRUE(c.is_valid());
      ASSERT_EQ(c.weight(), n);
      ASSERT_TRUE(seen.insert(c.parts()).second) << "duplicate at n=" << n;
    }
  }
}

TEST(EnumerateScc, MatchesRawSequenceScan) {
  for (int n = 0; n <= 14; ++n) {
    std::map<int, std::uint64_t> by_rank;
    for (const auto& c : enumerate_scc(n)) ++by_rank[static_cast<int>(c.rank())];
    ASSERT_EQ(by_rank, testing::raw_rank_counts(n, true)) << n;
  }
}

TEST(EnumerateScc, RejectsOutOfBound) {
  EXPECT_THROW(enumerate_scc(41), std::out_of_range);
  EXPECT_THROW(enumerate_scc(-1), std::out_of_range);
  EXPECT_THROW(rank_table_oracle(41), std::out_of_range);
}

TEST(SCComposition, Validity) {
  EXPECT_TRUE((SCComposition{{5, 3}, 1, {2, 4}}).is_valid());
  EXPECT_FALSE((SCComposition{{3, 5}, 1, {}}).is_valid());
  EXPECT_FALSE((SCComposition{{3}, 3, {}}).is_valid());
  EXPECT_FALSE((SCComposition{{}, 1, {4, 2}}).is_valid());
  EXPECT_EQ((SCComposition{{5, 3}, 1, {2, 4}}).rank(), 0);
  EXPECT_EQ((SCComposition{{5, 3}, 1, {2, 4}}).weight(), 15);
}

TEST(RankTableOracle, Examples) {
  const auto t = rank_table_oracle(2);
  EXPECT_EQ(t.count(0, 2), 2);
  EXPECT_EQ(t.count(1, 2), 1);
  EXPECT_EQ(t.count(-1, 2), 1);
  EXPECT_EQ(t.count(0, 0), 1);
  EXPECT_EQ(t.count(1, 1), 1);
  EXPECT_EQ(t.count(5, 2), 0);
  EXPECT_EQ(t.count(0, 9), 0);
}

TEST(RankTable, SetRejectsOutsideSupport) {
  RankTable t(5);
  EXPECT_THROW(t.set(-1, 3, 1), std::out_of_range);
  EXPECT_THROW(t.set(3, 5, 1), std::out_of_range);
  EXPECT_NO_THROW(t.set(2, 5, 1));
  EXPECT_EQ(t.count(-2, 5), 1);
}

TEST(VdSeries, AndrewsExamples) {
  const auto s = vd_andrews(2);
  EXPECT_EQ(s[0], 1);
  EXPECT_EQ(s[1], 3);
  EXPECT_EQ(s[2], 4);
}

TEST(VdSeries, ProductExamples) {
  const auto s = vd_product(2);
  EXPECT_EQ(s[0], 1);
  EXPECT_EQ(s[2], 4);
  // Contributions 3 + 0 + 1 to q^2 from c = 0, 1, 2.
  const auto c0 = poch_neg(1, 2) * poch_neg(1, 2);
  const auto c1 = poch_neg(2, 1) * poch_neg(2, 1);
  EXPECT_EQ(c0[2], 3);
  EXPECT_EQ(c1[1], 0);
}

TEST(VdSeries, AndrewsEqualsProductTo200) {
  const auto a = vd_andrews(200);
  EXPECT_EQ(a, vd_product(200));
  EXPECT_EQ(a[200], mpz_class("22901269832624"));
}

TEST(VdSeries, MatchesRawScan) {
  const auto a = vd_andrews(14);
  for (int n = 0; n <= 14; ++n) ASSERT_EQ(a[n], testing::raw_count(n, true)) << n;
}

TEST(VConcave, MatchesRawScan) {
  const auto v = v_concave(14);
  EXPECT_EQ(v[0], 1);
  EXPECT_EQ(v[1], 3);
  EXPECT_EQ(v[2], 6);
  for (int n = 0; n <= 14; ++n) ASSERT_EQ(v[n], testing::raw_count(n, false)) << n;
}

TEST(VdmGenfunc, Examples) {
  const auto t = vdm_genfunc(6);
  EXPECT_EQ(t.count(0, 2), 2);
  EXPECT_EQ(t.count(1, 1), 1);
  EXPECT_EQ(t.count(3, 5), 0);
  EXPECT_EQ(t.count(3, 6), 1);
}

TEST(VdmGenfunc, SeriesSymmetricAndSupported) {
  const auto s = vdm_genfunc_series(60);
  for (std::int64_t n = 0; n <= 60; ++n) {
    for (const auto& [m, c] : s.at(n)) {
      ASSERT_EQ(s.coeff(n, -m), c);
      ASSERT_GT(sgn(c), 0);
      ASSERT_GE(n, tri(m < 0 ? -m : m));
    }
  }
}

TEST(Prop1, Examples) {
  PartitionCache cache;
  EXPECT_EQ(vdm_prop1(0, 2, cache), 2);
  EXPECT_EQ(vdm_prop1(1, 1, cache), 1);
  EXPECT_EQ(vdm_prop1(-1, 1, cache), 1);
  EXPECT_EQ(vdm_prop1(3, -1, cache), 0);
  // 2|ell| + 4 > N leaves only p(N).
  for (std::int64_t ell = 0; ell <= 10; ++ell) {
    for (std::int64_t N = 0; N < 2 * ell + 4; ++N) ASSERT_EQ(vdm_prop1(ell, N, cache), cache(N));
  }
}

TEST(Region, Examples) {
  PartitionCache cache;
  EXPECT_EQ(vdm_region(2, 3, cache), 1);
  EXPECT_EQ(vdm_region(0, 3, cache), 3);
  EXPECT_EQ(vdm_region(5, 10, cache), 0);
  EXPECT_THROW(vdm_region(0, 4, cache), std::domain_error);
  EXPECT_THROW(vdm_region(2, 11, cache), std::domain_error);
  EXPECT_THROW(vdm_region(1, -1, cache), std::domain_error);
}

TEST(Telescoped, EqualsProp1) {
  PartitionCache cache;
  EXPECT_EQ(vdm_telescoped(0, 2, cache), 2);
  EXPECT_EQ(vdm_telescoped(1, 1, cache), 1);
  EXPECT_EQ(vdm_telescoped(0, 0, cache), 1);
  EXPECT_THROW(vdm_telescoped(-1, 3, cache), std::invalid_argument);
  for (std::int64_t ell = 0; ell <= 40; ell += 3) {
    for (std::int64_t N = -3; N <= 2000; N += 37) {
      ASSERT_EQ(vdm_telescoped(ell, N, cache), vdm_prop1(ell, N, cache)) << ell << ' ' << N;
    }
  }
}

TEST(VdFast, Examples) {
  PartitionCache cache;
  EXPECT_EQ(vd_fast(0, cache), 1);
  EXPECT_EQ(vd_fast(2, cache), 4);
  EXPECT_EQ(vd_fast(200, cache), vd_andrews(200)[200]);
}

TEST(VdFast, AgreesWithAndrewsTo400) {
  PartitionCache cache;
  const auto a = vd_andrews(400);
  for (std::int64_t n = 0; n <= 400; ++n) ASSERT_EQ(vd_fast(n, cache), a[n]) << n;
}

TEST(RankTables, GenfuncEqualsProp1To120) {
  PartitionCache cache;
  EXPECT_EQ(vdm_genfunc(120), rank_table_prop1(120, cache));
}

TEST(RankTables, ColumnSumsAndSupport) {
  PartitionCache cache;
  const auto t = rank_table_prop1(60, cache);
  for (std::int64_t n = 0; n <= 60; ++n) {
    ASSERT_EQ(t.column_total(n), vd_fast(n, cache));
    for (std::int64_t m = -12; m <= 12; ++m) {
      ASSERT_EQ(sgn(t.count(m, n)) == 0, n < tri(m < 0 ? -m : m)) << m << ' ' << n;
    }
  }
}

}  // namespace
}  // namespace scc
