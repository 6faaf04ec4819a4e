#include <gtest/gtest.h>

#include "knapkit/kp_solvers.hpp"
#include "oracles.hpp"

using namespace knapkit;

namespace {

KpInstance small_kp() { return KpInstance({4, 3, 5}, {3, 2, 4}, 5); }

}  // namespace

TEST(KpDpCapacity, Examples) {
  const auto s = kp_dp_capacity(small_kp());
  EXPECT_EQ(s.profit, 7);
  EXPECT_EQ(s.items, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(kp_dp_capacity(KpInstance({1}, {1}, 1)).profit, 1);
  EXPECT_EQ(kp_dp_capacity(KpInstance({3, 3}, {2, 2}, 2)).profit, 3);
}

TEST(KpDpCapacity, MemoryCeiling) {
  SolverLimits limits;
  limits.memory_ceiling = 17;  // needs 3 * 6 = 18
  EXPECT_THROW(kp_dp_capacity(small_kp(), limits), ResourceError);
  limits.memory_ceiling = 18;
  EXPECT_NO_THROW(kp_dp_capacity(small_kp(), limits));
  try {
    limits.memory_ceiling = 1;
    kp_dp_capacity(small_kp(), limits);
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("3*6"), std::string::npos) << e.what();
  }
}

TEST(KpDpProfit, Examples) {
  EXPECT_EQ(kp_dp_profit(small_kp()).profit, 7);
  EXPECT_EQ(kp_dp_profit(KpInstance({1}, {1}, 1)).profit, 1);
  EXPECT_EQ(kp_dp_profit(KpInstance({2, 5}, {1, 2}, 3)).profit, 7);
}

TEST(KpDpProfit, UpperBoundAndCeiling) {
  EXPECT_EQ(kp_dp_profit(small_kp(), Value{7}).profit, 7);
  SolverLimits limits;
  limits.memory_ceiling = 10;
  EXPECT_THROW(kp_dp_profit(small_kp(), std::nullopt, limits), ResourceError);
}

TEST(KpBrute, Examples) {
  EXPECT_EQ(kp_bruteforce(small_kp()).profit, 7);
  EXPECT_EQ(kp_bruteforce(KpInstance({1, 2}, {5, 5}, 5)).profit, 2);
  EXPECT_EQ(kp_bruteforce(KpInstance({4}, {6}, 5)).profit, 0);
  EXPECT_EQ(kp_bruteforce(KpInstance({4}, {5}, 5)).profit, 4);
}

TEST(KpBrute, EnumerationCap) {
  std::vector<Value> ones(26, 1);
  EXPECT_THROW(kp_bruteforce(KpInstance(ones, ones, 3)), ResourceError);
}

TEST(KpBrute, TieBreakIsLexicographic) {
  // {0} and {1,2} both reach 4; {0} is lexicographically smaller.
  const auto s = kp_bruteforce(KpInstance({4, 2, 2}, {2, 1, 1}, 2));
  EXPECT_EQ(s.items, std::vector<std::size_t>{0});
}

TEST(KpFptas, Examples) {
  EXPECT_EQ(kp_fptas(small_kp(), 0.01).profit, 7);
  EXPECT_EQ(kp_fptas(KpInstance({1000}, {3}, 5), 0.9).profit, 1000);
  EXPECT_THROW(kp_fptas(small_kp(), 0.0), ArgumentError);
  EXPECT_THROW(kp_fptas(small_kp(), 1.0), ArgumentError);
  EXPECT_THROW(kp_fptas(small_kp(), -0.5), ArgumentError);
}

TEST(KpFptas, ScaledRegime) {
  // Large profits force a real scaling factor.
  const KpInstance x({100000, 99999, 60000, 40001}, {5, 5, 3, 2}, 10);
  const double scale = fptas_scale(x, 0.5);
  EXPECT_GT(scale, 1.0);
  const auto a = kp_fptas(x, 0.5);
  const Value opt = oracle::kp_opt(x);
  EXPECT_LE(a.profit, opt);
  EXPECT_GE(static_cast<double>(a.profit) * 1.5, static_cast<double>(opt));
  EXPECT_TRUE(evaluate(x, a).feasible);
  EXPECT_EQ(evaluate(x, a).profit, a.profit);
}

TEST(KpDecide, Examples) {
  for (auto s : {KpStrategy::kAuto, KpStrategy::kDpCapacity, KpStrategy::kDpProfit,
                 KpStrategy::kFptasK, KpStrategy::kBrute}) {
    const auto yes = kp_decide(small_kp(), 7, s);
    EXPECT_TRUE(yes.answer) << to_string(s);
    ASSERT_TRUE(yes.witness);
    EXPECT_GE(yes.witness->profit, 7);
    EXPECT_TRUE(evaluate(small_kp(), *yes.witness).feasible);
    const auto no = kp_decide(small_kp(), 8, s);
    EXPECT_FALSE(no.answer) << to_string(s);
    EXPECT_FALSE(no.witness);
    EXPECT_TRUE(kp_decide(small_kp(), 1, s).answer);
  }
  EXPECT_THROW(kp_decide(small_kp(), 0), ArgumentError);
}

TEST(KpDecide, StrategyNames) {
  for (auto s : {KpStrategy::kAuto, KpStrategy::kDpCapacity, KpStrategy::kDpProfit,
                 KpStrategy::kFptasK, KpStrategy::kBrute}) {
    EXPECT_EQ(parse_kp_strategy(to_string(s)), s);
  }
  EXPECT_THROW(parse_kp_strategy("greedy"), ArgumentError);
}

TEST(KpProperty, SolversAgreeWithOracle) {
  oracle::Rng rng(301);
  for (int t = 0; t < 500; ++t) {
    const auto x = oracle::random_kp(rng);
    const Value opt = oracle::kp_opt(x);
    for (const auto& s : {kp_dp_capacity(x), kp_dp_profit(x), kp_bruteforce(x)}) {
      ASSERT_EQ(s.profit, opt);
      const auto e = evaluate(x, s);
      ASSERT_TRUE(e.feasible);
      ASSERT_EQ(e.profit, opt);
    }
  }
}

TEST(KpProperty, FptasGuarantee) {
  oracle::Rng rng(302);
  for (int t = 0; t < 500; ++t) {
    // wide profit range so scaling is active on many instances
    const auto x = oracle::random_kp(rng, 12, t % 2 ? 20 : 5000);
    const Value opt = oracle::kp_opt(x);
    for (double eps : {0.5, 0.25, 0.1}) {
      const auto a = kp_fptas(x, eps);
      ASSERT_LE(a.profit, opt);
      ASSERT_GE(static_cast<double>(a.profit) * (1.0 + eps), static_cast<double>(opt));
      ASSERT_TRUE(evaluate(x, a).feasible);
    }
  }
}

TEST(KpProperty, DecisionStrategiesAgree) {
  oracle::Rng rng(303);
  for (int t = 0; t < 500; ++t) {
    const auto x = oracle::random_kp(rng, 10, t % 2 ? 20 : 500);
    const Value opt = oracle::kp_opt(x);
    const Value k = rng.between(1, x.total_profit());
    for (auto s : {KpStrategy::kAuto, KpStrategy::kDpCapacity, KpStrategy::kDpProfit,
                   KpStrategy::kFptasK, KpStrategy::kBrute}) {
      const auto r = kp_decide(x, k, s);
      ASSERT_EQ(r.answer, opt >= k) << to_string(s) << " k=" << k;
      if (r.answer) {
        ASSERT_TRUE(evaluate(x, *r.witness).feasible);
        ASSERT_GE(r.witness->profit, k);
      }
    }
  }
}
