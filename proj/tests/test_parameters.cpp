#include <gtest/gtest.h>

#include <cmath>

#include "knapkit/generators.hpp"
#include "knapkit/parameters.hpp"
#include "oracles.hpp"

using namespace knapkit;

TEST(Profile, KpExample) {
  const auto p = extract_profile(KpInstance({4, 3, 5}, {3, 2, 4}, 5));
  EXPECT_EQ(p.kind, ProblemKind::kKp);
  EXPECT_EQ(p.n, 3u);
  EXPECT_EQ(p.p_max, 5);
  EXPECT_EQ(p.p_min, 3);
  EXPECT_EQ(p.s_max, 4);
  EXPECT_EQ(p.s_min, 2);
  EXPECT_EQ(p.val, 3);
  EXPECT_EQ(p.max_val, 5);
  EXPECT_EQ(p.sizevar, 3u);
  EXPECT_EQ(p.pvar, 3u);
  EXPECT_EQ(p.sum_profits, 12);
  EXPECT_EQ(p.sum_sizes, 9);
  EXPECT_FALSE(p.threshold);
}

TEST(Profile, AllOnes) {
  const auto p = extract_profile(KpInstance({1}, {1}, 1));
  EXPECT_EQ(p.val, 1);
  EXPECT_EQ(p.max_val, 1);
  EXPECT_EQ(p.sizevar, 1u);
  EXPECT_EQ(p.pvar, 1u);
}

TEST(Profile, FigureOne) {
  const auto p = extract_profile(independent_set_to_dkp(figure_one_graph()));
  EXPECT_EQ(p.n, 6u);
  EXPECT_EQ(p.d, 7u);
  EXPECT_EQ(p.p_max, 1);
  EXPECT_EQ(p.s_max, 1);
  EXPECT_EQ(p.c_max, 1);
  EXPECT_EQ(p.s_min, 0);
}

TEST(Profile, ThresholdCountsTowardsVal) {
  const KpInstance x({1}, {1}, 1);
  const auto p = extract_profile(x, Value{100});
  EXPECT_EQ(p.threshold, Value{100});
  EXPECT_EQ(p.val, 7);
  EXPECT_EQ(p.max_val, 100);
}

TEST(Profile, MkpFields) {
  const auto p = extract_profile(MkpInstance({3, 3, 4}, {2, 2, 3}, {4, 3}));
  EXPECT_EQ(p.m, 2u);
  EXPECT_EQ(p.c_max, 4);
  EXPECT_EQ(p.c_min, 3);
  EXPECT_EQ(p.sizevar, 2u);
  EXPECT_EQ(p.pvar, 2u);
}

TEST(ProfileProperty, ValBoundsMaxAndBitSize) {
  oracle::Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const AnyInstance xs[] = {oracle::random_kp(rng), oracle::random_dkp(rng),
                              oracle::random_mkp(rng)};
    for (const auto& x : xs) {
      const auto p = extract_profile(x);
      EXPECT_LE(static_cast<double>(p.max_val), std::ldexp(1.0, p.val));
      EXPECT_LE(p.val, p.bit_size);
      EXPECT_LE(p.sizevar, p.n);
      EXPECT_LE(p.pvar, p.n);
      EXPECT_EQ(p.bit_size, bit_size(x));
    }
  }
}

TEST(Plan, CapacityDpWhenCapacitySmall) {
  std::vector<Value> profits(30, 1'000'000), sizes(30, 7);
  profits[0] = 3;
  const auto plan = plan_solver(extract_profile(KpInstance(profits, sizes, 100)));
  EXPECT_EQ(plan.algorithm, Algorithm::kKpDpCapacity);
  EXPECT_DOUBLE_EQ(plan.predicted_cost, 3000.0);
}

TEST(Plan, BruteForceWhenCapacityHuge) {
  std::vector<Value> profits(10, 1'000'000), sizes(10, 300'000'000);
  const auto plan = plan_solver(extract_profile(KpInstance(profits, sizes, 1'000'000'000)));
  EXPECT_EQ(plan.algorithm, Algorithm::kKpBruteForce);
  EXPECT_DOUBLE_EQ(plan.predicted_cost, 10.0 * 1024.0);
}

TEST(Plan, ProfitDpWhenProfitsSmall) {
  std::vector<Value> profits(30, 1), sizes(30, 300'000);
  const auto plan = plan_solver(extract_profile(KpInstance(profits, sizes, 1'000'000)));
  EXPECT_EQ(plan.algorithm, Algorithm::kKpDpProfit);
}

TEST(Plan, DkpSingleDimensionUsesCapacityDp) {
  const DkpInstance x({4, 3, 5}, {{3, 2, 4}}, {5});
  EXPECT_EQ(plan_solver(extract_profile(x)).algorithm, Algorithm::kDkpDp);
}

TEST(Plan, ThresholdEnablesXp) {
  // 40 items, huge capacities in 3 dimensions: only the k-route is cheap.
  std::vector<Value> profits(40, 1);
  std::vector<std::vector<Value>> sizes(3, std::vector<Value>(40, 1'000'000));
  const DkpInstance x(profits, sizes, {10'000'000, 10'000'000, 10'000'000});
  EXPECT_EQ(plan_solver(extract_profile(x)).algorithm, Algorithm::kDkpBruteForce);
  EXPECT_EQ(plan_solver(extract_profile(x, Value{2})).algorithm, Algorithm::kDkpXp);
}

TEST(Plan, NoThresholdNoThresholdRoutes) {
  const auto costs = candidate_costs(extract_profile(KpInstance({1}, {1}, 1)));
  for (const auto& c : costs) EXPECT_NE(c.algorithm, Algorithm::kKpFptasDecision);
}

TEST(Plan, Deterministic) {
  oracle::Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto x = oracle::random_mkp(rng);
    EXPECT_EQ(plan_solver(extract_profile(x)), plan_solver(extract_profile(x)));
  }
}

TEST(Plan, TieGoesToEarlierPriority) {
  // n = 2, c = 3, p_max = 2: n*c = 6 and n^2*p_max = 8, n*2^n = 8.
  // c = 4 makes n*c = 8 tie the other two.
  const auto plan = plan_solver(extract_profile(KpInstance({2, 2}, {3, 3}, 4)));
  EXPECT_EQ(plan.algorithm, Algorithm::kKpDpCapacity);
}

TEST(Bell, Estimate) {
  EXPECT_DOUBLE_EQ(bell_estimate(0), 1.0);
  EXPECT_DOUBLE_EQ(bell_estimate(5), 52.0);
  EXPECT_DOUBLE_EQ(bell_estimate(10), 115975.0);
}
