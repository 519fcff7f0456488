#include "starpir/privacy.hpp"

#include <gtest/gtest.h>

#include <bit>

#include "starpir/builders.hpp"
#include "starpir/families.hpp"

namespace starpir {
namespace {

const Field kGf2 = Field::prime(2);

std::vector<std::uint64_t> nonzero_supports(const LinearCode& c) {
  std::vector<std::uint64_t> out;
  for_each_support(c, kDefaultCodewordBudget, [&](std::uint64_t m) {
    if (m) out.push_back(m);
  });
  return out;
}

TEST(ProtectsSet, Examples) {
  const LinearCode rm14 = reed_muller(1, 4);
  EXPECT_TRUE(protects_set(rm14, IndexSet{}));
  for_each_combination(16, 3, [&](const std::vector<std::size_t>& c) {
    EXPECT_TRUE(protects_set(rm14, IndexSet(c)));
    return true;
  });
  // Minimum-weight words of RM(2,4) are 2-flats: points 0000, 0001, 0010, 0011
  // sit in columns 15, 14, 13, 12.
  EXPECT_FALSE(protects_set(rm14, IndexSet{12, 13, 14, 15}));
  EXPECT_THROW(protects_set(rm14, IndexSet{16}), ValidationError);
}

TEST(ProtectsSet, AgreesWithDualSupports) {
  const std::vector<LinearCode> codes = {reed_muller(1, 4), reed_muller(1, 3), repetition(kGf2, 6), fixture("C1"),
                                         reed_solomon(Field::prime(7), 7, 3)};
  for (const LinearCode& d : codes) {
    const auto supports = nonzero_supports(dual(d));
    for (std::size_t t = 0; t <= std::min<std::size_t>(d.length(), 6); ++t)
      for_each_combination(d.length(), t, [&](const std::vector<std::size_t>& c) {
        const IndexSet set(c);
        const std::uint64_t mask = set.mask();
        const bool contains_support =
            std::any_of(supports.begin(), supports.end(), [mask](std::uint64_t s) { return (s & mask) == s; });
        EXPECT_EQ(protects_set(d, set), !contains_support);
        return true;
      });
  }
}

TEST(CollusionParameter, Examples) {
  EXPECT_EQ(collusion_parameter(repetition(kGf2, 7)), 1u);
  EXPECT_EQ(collusion_parameter(reed_muller(1, 4)), 3u);
  EXPECT_EQ(collusion_parameter(reed_muller(2, 5)), 7u);
  EXPECT_EQ(collusion_parameter(reed_muller(4, 4)), 16u);
  // MDS [7,3]: dual is [7,4,4]
  EXPECT_EQ(collusion_parameter(reed_solomon(Field::prime(7), 7, 3)), 3u);
}

TEST(UnprotectedCount, ReedMuller14) {
  const LinearCode rm14 = reed_muller(1, 4);
  EXPECT_EQ(unprotected_count(rm14, 3), 0u);
  EXPECT_EQ(unprotected_count(rm14, 4), 140u);
  EXPECT_EQ(unprotected_count(rm14, 4), weight_count(reed_muller(2, 4), 4));
  EXPECT_EQ(unprotected_count(rm14, 5), 1680u);
  EXPECT_EQ(binomial(16, 5) - 1680, 2688u);
  EXPECT_LE(unprotected_count(rm14, 6), 9240u);
}

TEST(UnprotectedCount, PrunedSearchMatchesRankOracle) {
  const std::vector<LinearCode> codes = {reed_muller(1, 4), reed_muller(1, 3), reed_muller(2, 4),
                                         repetition(kGf2, 9), fixture("C2"), reed_solomon(Field::prime(11), 10, 4),
                                         reed_solomon(Field::binary(4), 9, 4)};
  for (const LinearCode& d : codes)
    for (std::size_t t = 0; t <= d.length(); ++t)
      if (binomial(d.length(), t) <= 20000)
        EXPECT_EQ(unprotected_count(d, t), unprotected_count_by_rank(d, t)) << "t = " << t;
}

TEST(UnprotectedCount, Budget) {
  EXPECT_THROW(unprotected_count_by_rank(reed_muller(1, 5), 8, 1000), BudgetExceeded);
  EXPECT_THROW(unprotected_count(reed_muller(1, 5), 8, 1000), BudgetExceeded);
}

TEST(MinWeightCount, Formula) {
  for (int m = 0; m <= 8; ++m) EXPECT_EQ(min_weight_count_rm(0, m), 1u);
  EXPECT_EQ(min_weight_count_rm(2, 4), 140u);
  EXPECT_EQ(min_weight_count_rm(1, 3), 14u);
  for (int m = 1; m <= 5; ++m)
    for (int rho = 0; rho <= m; ++rho) {
      const LinearCode c = reed_muller(rho, m);
      if (c.dimension() > 20) continue;
      EXPECT_EQ(min_weight_count_rm(rho, m), weight_count(c, std::size_t{1} << (m - rho))) << rho << "," << m;
    }
  EXPECT_THROW(min_weight_count_rm(3, 2), ValidationError);
}

TEST(CollusionBoundTest, ReedMuller14) {
  const auto t4 = collusion_bound(1, 4, 4);
  EXPECT_EQ(t4.count, 140u);
  EXPECT_EQ(t4.total, 1820u);
  EXPECT_TRUE(t4.tight);
  EXPECT_EQ(Rational(1) - t4.probability, Rational(1680, 1820));

  const auto t5 = collusion_bound(1, 4, 5);
  EXPECT_EQ(t5.count, 1680u);
  EXPECT_TRUE(t5.tight);

  const auto t6 = collusion_bound(1, 4, 6);
  EXPECT_EQ(t6.count, 9240u);
  EXPECT_FALSE(t6.tight);

  EXPECT_THROW(collusion_bound(1, 4, 3), ValidationError);
  EXPECT_THROW(collusion_bound(4, 4, 16), ValidationError);
}

TEST(CollusionBoundTest, ExactCountNeverExceedsBound) {
  for (int m = 2; m <= 5; ++m)
    for (int r = 0; r < m; ++r) {
      const LinearCode d = reed_muller(r, m);
      for (std::size_t t = std::size_t{1} << (r + 1); t <= (std::size_t{1} << m); ++t) {
        if (binomial(std::size_t{1} << m, t) > 300000) continue;
        const auto bound = collusion_bound(r, m, t);
        const auto exact = unprotected_count(d, t);
        EXPECT_LE(exact, bound.count) << r << "," << m << " t=" << t;
        if (bound.tight) EXPECT_EQ(exact, bound.count) << r << "," << m << " t=" << t;
      }
    }
}

// Two distinct minimum-weight words of RM(rho, m) meet in a flat of
// dimension at most m - rho - 1.
TEST(MinWeightSupports, UnionLaw) {
  for (int m = 1; m <= 4; ++m)
    for (int rho = 0; rho <= m; ++rho) {
      const LinearCode c = reed_muller(rho, m);
      const int d = 1 << (m - rho);
      std::vector<std::uint64_t> minimal;
      for (auto s : nonzero_supports(c))
        if (std::popcount(s) == d) minimal.push_back(s);
      for (std::size_t a = 0; a < minimal.size(); ++a)
        for (std::size_t b = a + 1; b < minimal.size(); ++b)
          if (minimal[a] != minimal[b]) EXPECT_GE(std::popcount(minimal[a] | minimal[b]), 2 * d - d / 2);
    }
}

TEST(CollusionReportTest, Fields) {
  const auto report = collusion_report(reed_muller(1, 4), 5, RmSpec{1, 4}, true);
  EXPECT_EQ(report.total, 4368u);
  EXPECT_EQ(*report.unprotected, 1680u);
  EXPECT_EQ(*report.protected_fraction, Rational(2688, 4368));
  ASSERT_TRUE(report.bound);
  EXPECT_EQ(report.bound->count, 1680u);

  const auto below = collusion_report(reed_muller(1, 4), 3, RmSpec{1, 4}, true);
  EXPECT_EQ(*below.protected_fraction, Rational(1));
  EXPECT_FALSE(below.bound);

  const auto bound_only = collusion_report(reed_muller(1, 4), 6, RmSpec{1, 4}, false);
  EXPECT_FALSE(bound_only.unprotected);
  EXPECT_EQ(bound_only.bound->count, 9240u);
  EXPECT_THROW(collusion_report(reed_muller(1, 4), 17, std::nullopt, true), ValidationError);
}

RetrievalPlan tiny_plan() {
  const LinearCode rep = repetition(kGf2, 4);
  return plan_from_sets(rep, rep, {IndexSet{0}}, {IndexSet{0}});
}

TEST(QueryDistribution, TinyInstance) {
  const RetrievalPlan plan = tiny_plan();
  const auto single = exhaustive_query_distribution(plan, 2, IndexSet{0});
  EXPECT_EQ(single.runs, 4u);
  EXPECT_TRUE(*single.identical);
  EXPECT_EQ(single.tv_distance, 0.0);

  const auto pair = exhaustive_query_distribution(plan, 2, IndexSet{0, 1});
  EXPECT_FALSE(*pair.identical);
  EXPECT_EQ(pair.tv_distance, 1.0);

  EXPECT_TRUE(*exhaustive_query_distribution(plan, 2, IndexSet{}).identical);
  EXPECT_TRUE(*exhaustive_query_distribution(plan, 3, IndexSet{2}).identical);
}

TEST(QueryDistribution, ProtectedCoalitionsArePrivate) {
  const LinearCode c = reed_muller(1, 2);
  const LinearCode d = reed_muller(0, 2);
  const RetrievalPlan plan = plan_auto(c, d).plan;
  ASSERT_LE(plan.s() * plan.b() * 2, 20u);
  for (std::size_t t = 0; t <= 2; ++t)
    for_each_combination(4, t, [&](const std::vector<std::size_t>& set) {
      const IndexSet coalition(set);
      const auto audit = exhaustive_query_distribution(plan, 2, coalition);
      EXPECT_EQ(*audit.identical, protects_set(d, coalition)) << coalition.to_string();
      return true;
    });
}

TEST(QueryDistribution, Sampled) {
  const RetrievalPlan plan = tiny_plan();
  const auto single = sampled_query_distribution(plan, 2, IndexSet{1}, 4000, 3);
  EXPECT_FALSE(single.identical);
  EXPECT_EQ(single.runs, 4000u);
  EXPECT_LT(single.tv_distance, 0.05);
  EXPECT_GT(sampled_query_distribution(plan, 2, IndexSet{0, 3}, 4000, 3).tv_distance, 0.95);
}

TEST(QueryDistribution, Budget) {
  const LinearCode rm = reed_muller(1, 4);
  EXPECT_THROW(exhaustive_query_distribution(plan_basic(rm, rm), 2, IndexSet{0}), BudgetExceeded);
}

}  // namespace
}  // namespace starpir
