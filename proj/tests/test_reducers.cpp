#include <gtest/gtest.h>

#include <cmath>

#include "knapkit/generators.hpp"
#include "knapkit/reducers.hpp"
#include "oracles.hpp"

using namespace knapkit;

namespace {

std::vector<Value> values(std::span<const Value> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(ReduceKp, KeepsBestPerSize) {
  const KpInstance x({5, 4, 3, 2, 1}, {1, 1, 1, 1, 1}, 3);
  const auto r = reduce_kp_by_capacity(x);
  EXPECT_EQ(values(r.instance.profits()), (std::vector<Value>{5, 4, 3}));
  EXPECT_EQ(r.removed_items, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(oracle::kp_opt(x), 12);
  EXPECT_EQ(oracle::kp_opt(r.instance), 12);
  EXPECT_EQ(r.rule, "kp-capacity");
}

TEST(ReduceKp, FixedPoint) {
  const KpInstance x({4, 3, 5}, {3, 2, 4}, 5);
  const auto r = reduce_kp_by_capacity(x);
  EXPECT_EQ(r.instance, x);
  EXPECT_TRUE(r.removed_items.empty());
}

TEST(ReduceKp, HalfCapacityItems) {
  const KpInstance x({7, 6, 5}, {2, 2, 2}, 4);
  const auto r = reduce_kp_by_capacity(x);
  EXPECT_EQ(values(r.instance.profits()), (std::vector<Value>{7, 6}));
  EXPECT_EQ(oracle::kp_opt(r.instance), 13);
  EXPECT_EQ(oracle::kp_opt(x), 13);
}

TEST(ReduceKp, ProfitTieKeepsLowerIndex) {
  const KpInstance x({3, 3, 3}, {2, 2, 2}, 4);
  EXPECT_EQ(reduce_kp_by_capacity(x).kept_items, (std::vector<std::size_t>{0, 1}));
}

TEST(ReduceKp, UnitCapacityBoundIsNotStrict) {
  // c = 1 gives c (ln c + 1) = 1 while one item may remain.
  const auto r = reduce_kp_by_capacity(KpInstance({2, 1}, {1, 1}, 1));
  EXPECT_EQ(r.achieved, 1u);
  EXPECT_DOUBLE_EQ(r.bound, 1.0);
  EXPECT_FALSE(r.bound_strict);
  EXPECT_TRUE(r.within_bound());
}

TEST(ReduceKp, AllRemovedIsContractError) {
  EXPECT_THROW(reduce_kp_by_capacity(KpInstance({1}, {5}, 3)), ContractError);
}

TEST(ReduceDkp, SharedVectorCappedByTightestDimension) {
  const DkpInstance x({9, 8, 7, 6}, {{1, 1, 1, 1}, {1, 1, 1, 1}}, {2, 3});
  const auto r = reduce_dkp_by_size_vectors(x);
  EXPECT_EQ(values(r.instance.profits()), (std::vector<Value>{9, 8}));
  EXPECT_EQ(oracle::dkp_opt(r.instance), oracle::dkp_opt(x));
}

TEST(ReduceDkp, FigureOneUnchanged) {
  const auto x = independent_set_to_dkp(figure_one_graph());
  const auto r = reduce_dkp_by_size_vectors(x);
  EXPECT_EQ(r.instance, x);
}

TEST(ReduceDkp, ZeroEntriesDoNotLimit) {
  // vector (0, 1): only dimension 2 counts, floor(3 / 1) = 3
  const DkpInstance x({1, 2, 3, 4}, {{0, 0, 0, 0}, {1, 1, 1, 1}}, {1, 3});
  EXPECT_EQ(reduce_dkp_by_size_vectors(x).achieved, 3u);
}

TEST(ReduceDkp, SingleDimensionMatchesKp) {
  oracle::Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const auto kp = oracle::random_kp(rng);
    const auto n = normalize(kp);
    if (!n.instance) continue;
    const auto& x = *n.instance;
    const DkpInstance d(values(x.profits()), {values(x.sizes())}, {x.capacity()});
    EXPECT_EQ(reduce_dkp_by_size_vectors(d).kept_items,
              reduce_kp_by_capacity(x).kept_items);
  }
}

TEST(ReduceMkp, CapacitySumExample) {
  const MkpInstance x({6, 5, 4, 3, 2, 1}, {1, 1, 1, 1, 1, 1}, {3, 2});
  const auto r = reduce_mkp_by_capacity_sum(x);
  EXPECT_EQ(r.achieved, 5u);
  EXPECT_EQ(r.removed_items, std::vector<std::size_t>{5});
  EXPECT_EQ(oracle::mkp_opt(r.instance), oracle::mkp_opt(x));
}

TEST(ReduceMkp, SingleKnapsackMatchesKp) {
  oracle::Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    const auto kp = oracle::random_kp(rng);
    const auto n = normalize(kp);
    if (!n.instance) continue;
    const auto& x = *n.instance;
    const MkpInstance m(values(x.profits()), values(x.sizes()), {x.capacity()});
    EXPECT_EQ(reduce_mkp_by_capacity_sum(m).kept_items,
              reduce_kp_by_capacity(x).kept_items);
  }
}

TEST(ReduceMkp, DistinctSizesUpToCapacityUnchanged) {
  const MkpInstance x({1, 2, 3}, {2, 3, 4}, {4, 1});
  EXPECT_EQ(reduce_mkp_by_capacity_sum(x).instance, x);
}

TEST(ReduceThreshold, ClassCap) {
  const MkpInstance x({1, 1, 1, 1}, {4, 2, 1, 3}, {5});
  const auto r = reduce_mkp_by_profit_threshold(x, 2);
  EXPECT_EQ(values(r.instance.sizes()), (std::vector<Value>{2, 1}));
  EXPECT_EQ(r.rule, "mkp-profit-threshold");
}

TEST(ReduceThreshold, KOneKeepsOneItem) {
  const MkpInstance x({3, 1, 2, 1}, {4, 2, 1, 3}, {5});
  const auto r = reduce_mkp_by_profit_threshold(x, 1);
  EXPECT_EQ(r.achieved, 1u);
  EXPECT_EQ(values(r.instance.sizes()), std::vector<Value>{1});
}

TEST(ReduceThreshold, LargeProfitsCollapse) {
  const MkpInstance x({5, 4}, {2, 1}, {3});
  const auto r = reduce_mkp_by_profit_threshold(x, 3);
  EXPECT_EQ(r.kept_items, std::vector<std::size_t>{1});
}

TEST(ReduceThreshold, RejectsNonPositiveK) {
  EXPECT_THROW(reduce_mkp_by_profit_threshold(MkpInstance({1}, {1}, {1}), 0),
               ArgumentError);
}

TEST(Trim, DropsSmallestProfit) {
  const KpInstance x({1, 1, 1}, {1, 1, 1}, 3);
  const auto out = trim_solution(x, PackingSolution::subset({0, 1, 2}, 3), 2);
  EXPECT_EQ(out.items.size(), 2u);
  EXPECT_EQ(out.profit, 2);
}

TEST(Trim, ShortSolutionUnchanged) {
  const KpInstance x({4, 3, 5}, {3, 2, 4}, 5);
  const auto in = PackingSolution::subset({0, 1}, 7);
  EXPECT_EQ(trim_solution(x, in, 5), in);
}

TEST(Trim, StepwiseRemoval) {
  const DkpInstance x({5, 1, 1, 1}, {{1, 1, 1, 1}}, {4});
  const auto out = trim_solution(x, PackingSolution::subset({0, 1, 2, 3}, 8), 3);
  EXPECT_EQ(out.items, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(out.profit, 7);
  EXPECT_TRUE(evaluate(x, out).feasible);
}

TEST(Trim, KeepsKnapsackLabels) {
  const MkpInstance x({1, 1, 1}, {1, 1, 1}, {2, 1});
  const auto out =
      trim_solution(x, PackingSolution::assignment({0, 1, 2}, {0, 0, 1}, 3), 2);
  EXPECT_EQ(out.items, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(out.knapsacks, (std::vector<std::size_t>{0, 0}));
}

TEST(Trim, ContractViolations) {
  const KpInstance x({4, 3, 5}, {3, 2, 4}, 5);
  EXPECT_THROW(trim_solution(x, PackingSolution::subset({0, 2}, 9), 1), ContractError);
  EXPECT_THROW(trim_solution(x, PackingSolution::subset({0}, 4), 5), ContractError);
}

// Random property suites: normalized inputs, brute-force oracles.

TEST(ReducerProperty, KpPreservesOptIdempotentAndBounded) {
  oracle::Rng rng(101);
  int checked = 0;
  while (checked < 500) {
    const auto n = normalize(oracle::random_kp(rng));
    if (!n.instance) continue;
    const auto& x = *n.instance;
    const auto r = reduce_kp_by_capacity(x);
    ASSERT_EQ(oracle::kp_opt(r.instance), oracle::kp_opt(x));
    EXPECT_TRUE(r.within_bound()) << r.achieved << " vs " << r.bound;
    EXPECT_EQ(reduce_kp_by_capacity(r.instance).instance, r.instance);
    EXPECT_LE(r.achieved, x.item_count());
    for (std::size_t t = 0; t < r.kept_items.size(); ++t) {
      EXPECT_EQ(r.instance.profit(t), x.profit(r.kept_items[t]));
      EXPECT_EQ(r.instance.size(t), x.size(r.kept_items[t]));
    }
    ++checked;
  }
}

TEST(ReducerProperty, DkpPreservesOptIdempotentAndBounded) {
  oracle::Rng rng(102);
  int checked = 0;
  while (checked < 500) {
    const auto n = normalize(oracle::random_dkp(rng));
    if (!n.instance) continue;
    const auto& x = *n.instance;
    const auto r = reduce_dkp_by_size_vectors(x);
    ASSERT_EQ(oracle::dkp_opt(r.instance), oracle::dkp_opt(x));
    EXPECT_TRUE(r.within_bound());
    EXPECT_EQ(reduce_dkp_by_size_vectors(r.instance).instance, r.instance);
    ++checked;
  }
}

TEST(ReducerProperty, MkpPreservesOptIdempotentAndBounded) {
  oracle::Rng rng(103);
  int checked = 0;
  while (checked < 500) {
    // more items than the capacity sum allows per size
    const auto n = normalize(oracle::random_mkp(rng, 10, 3, 5));
    if (!n.instance) continue;
    const auto& x = *n.instance;
    const auto r = reduce_mkp_by_capacity_sum(x);
    ASSERT_EQ(oracle::mkp_opt(r.instance), oracle::mkp_opt(x));
    EXPECT_TRUE(r.within_bound());
    EXPECT_EQ(reduce_mkp_by_capacity_sum(r.instance).instance, r.instance);
    ++checked;
  }
}

TEST(ReducerProperty, ThresholdPreservesDecisions) {
  oracle::Rng rng(104);
  for (int t = 0; t < 500; ++t) {
    const auto x = oracle::random_mkp(rng, 9, 3, 6);
    const Value opt = oracle::mkp_opt(x);
    const Value k = rng.between(1, std::max<Value>(1, opt + 1));
    const auto r = reduce_mkp_by_profit_threshold(x, k);
    ASSERT_EQ(oracle::mkp_opt(r.instance) >= k, opt >= k) << "k=" << k;
    EXPECT_TRUE(r.within_bound());
    EXPECT_EQ(reduce_mkp_by_profit_threshold(r.instance, k).instance, r.instance);
  }
}

TEST(ReducerProperty, BoundFormulas) {
  const auto kp = reduce_kp_by_capacity(KpInstance({1}, {1}, 10));
  EXPECT_DOUBLE_EQ(kp.bound, 10.0 * (std::log(10.0) + 1.0));
  const auto dkp = reduce_dkp_by_size_vectors(DkpInstance({1}, {{1}, {1}}, {2, 3}));
  EXPECT_DOUBLE_EQ(dkp.bound, 2.0 * (3.0 * 4.0 - 1.0));
  const auto mkp = reduce_mkp_by_capacity_sum(MkpInstance({1}, {1}, {3, 4}));
  EXPECT_DOUBLE_EQ(mkp.bound, 7.0 * (std::log(4.0) + 1.0));
  const auto thr = reduce_mkp_by_profit_threshold(MkpInstance({1}, {1}, {3}), 4);
  EXPECT_DOUBLE_EQ(thr.bound, 4.0 + 4.0 * (std::log(4.0) + 1.0));
}
