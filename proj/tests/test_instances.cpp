#include <gtest/gtest.h>

#include "knapkit/instances.hpp"
#include "knapkit/kp_solvers.hpp"
#include "knapkit/mkp_solvers.hpp"
#include "knapkit/dkp_solvers.hpp"
#include "knapkit/generators.hpp"
#include "oracles.hpp"

using namespace knapkit;

namespace {

KpInstance small_kp() { return KpInstance({4, 3, 5}, {3, 2, 4}, 5); }

}  // namespace

TEST(Instances, RejectsInvalidKp) {
  EXPECT_THROW(KpInstance({}, {}, 1), ArgumentError);
  EXPECT_THROW(KpInstance({1, 2}, {1}, 1), ArgumentError);
  EXPECT_THROW(KpInstance({0}, {1}, 1), ArgumentError);
  EXPECT_THROW(KpInstance({1}, {0}, 1), ArgumentError);
  EXPECT_THROW(KpInstance({1}, {1}, 0), ArgumentError);
}

TEST(Instances, RejectsInvalidDkp) {
  // item 2 has an all-zero size vector
  EXPECT_THROW(DkpInstance({1, 1}, {{1, 0}, {1, 0}}, {1, 1}), ArgumentError);
  EXPECT_THROW(DkpInstance({1}, {{-1}}, {1}), ArgumentError);
  EXPECT_THROW(DkpInstance({1}, {{1}}, {0}), ArgumentError);
  EXPECT_THROW(DkpInstance({1}, {{1}, {1}}, {1}), ArgumentError);
  EXPECT_NO_THROW(DkpInstance({1, 1}, {{1, 0}, {0, 1}}, {1, 1}));
}

TEST(Instances, RejectsInvalidMkp) {
  EXPECT_THROW(MkpInstance({1}, {1}, {}), ArgumentError);
  EXPECT_THROW(MkpInstance({1}, {1}, {0}), ArgumentError);
  EXPECT_THROW(MkpInstance({1}, {0}, {1}), ArgumentError);
}

TEST(Instances, SumOverflowIsReported) {
  const Value big = std::numeric_limits<Value>::max() / 2 + 1;
  EXPECT_THROW(KpInstance({big, big}, {1, 1}, 1), OverflowError);
}

TEST(Evaluate, KpExample) {
  const auto e = evaluate(small_kp(), PackingSolution::subset({0, 1}, 7));
  EXPECT_TRUE(e.feasible);
  EXPECT_EQ(e.profit, 7);
  const auto over = evaluate(small_kp(), PackingSolution::subset({0, 2}, 9));
  EXPECT_FALSE(over.feasible);
  EXPECT_EQ(over.profit, 9);
}

TEST(Evaluate, EmptySubsetIsFeasible) {
  const auto e = evaluate(small_kp(), PackingSolution::subset({}, 0));
  EXPECT_TRUE(e.feasible);
  EXPECT_EQ(e.profit, 0);
}

TEST(Evaluate, FigureOneIndependentSet) {
  const auto x = independent_set_to_dkp(figure_one_graph());
  const auto e = evaluate(x, PackingSolution::subset({0, 3, 5}, 3));
  EXPECT_TRUE(e.feasible);
  EXPECT_EQ(e.profit, 3);
  EXPECT_FALSE(evaluate(x, PackingSolution::subset({0, 1}, 2)).feasible);
}

TEST(Evaluate, OutOfRangeIsStructural) {
  EXPECT_THROW(evaluate(small_kp(), PackingSolution::subset({3}, 0)), StructuralError);
  const MkpInstance m({1, 1}, {1, 1}, {2});
  EXPECT_THROW(evaluate(m, PackingSolution::assignment({0}, {1}, 1)), StructuralError);
  EXPECT_THROW(evaluate(m, PackingSolution::subset({0}, 1)), StructuralError);
  EXPECT_THROW(evaluate(small_kp(), PackingSolution::assignment({0}, {0}, 4)),
               StructuralError);
}

TEST(Evaluate, MkpDisjointnessAndCapacity) {
  const MkpInstance m({3, 3, 4}, {2, 2, 3}, {4, 3});
  EXPECT_TRUE(evaluate(m, PackingSolution::assignment({0, 1, 2}, {0, 0, 1}, 10)).feasible);
  EXPECT_FALSE(evaluate(m, PackingSolution::assignment({0, 1, 2}, {0, 1, 1}, 10)).feasible);
  PackingSolution twice;
  twice.kind = SolutionKind::kAssignment;
  twice.items = {0, 0};
  twice.knapsacks = {0, 1};
  EXPECT_FALSE(evaluate(m, twice).feasible);
}

TEST(BitSize, SpecValues) {
  EXPECT_EQ(bit_size(KpInstance({1}, {1}, 1)), 4);
  EXPECT_EQ(bit_size(KpInstance({5}, {1}, 1)), 6);
  EXPECT_EQ(bit_size(MkpInstance({2, 2}, {2, 2}, {2, 2})), 14);
}

TEST(BitSize, EncodingLength) {
  EXPECT_EQ(encoding_length(0), 1);
  EXPECT_EQ(encoding_length(1), 1);
  EXPECT_EQ(encoding_length(2), 2);
  EXPECT_EQ(encoding_length(7), 3);
  EXPECT_EQ(encoding_length(8), 4);
  EXPECT_EQ(encoding_length(std::numeric_limits<Value>::max()), 63);
}

TEST(BitSize, ZeroSizeCountsOneBit) {
  // n + profits + sizes (two entries, one zero) + capacity
  const DkpInstance x({1}, {{1}, {0}}, {1, 1});
  EXPECT_EQ(bit_size(x), 1 + 1 + 2 + 2);
}

TEST(BitSize, GrowsWithEveryItem) {
  oracle::Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto x = oracle::random_kp(rng);
    std::vector<Value> p(x.profits().begin(), x.profits().end());
    std::vector<Value> s(x.sizes().begin(), x.sizes().end());
    p.push_back(rng.between(1, 20));
    s.push_back(rng.between(1, 20));
    EXPECT_LT(bit_size(x), bit_size(KpInstance(p, s, x.capacity())));
  }
}

TEST(Normalize, DropsOversizedAndDetectsAllFit) {
  const auto out = normalize(KpInstance({1, 3}, {9, 2}, 5));
  EXPECT_EQ(out.verdict, Verdict::kTrivialAllFit);
  EXPECT_EQ(out.trivial_profit, 3);
  EXPECT_EQ(out.removed_items, std::vector<std::size_t>{0});
  EXPECT_EQ(out.kept_items, std::vector<std::size_t>{1});
}

TEST(Normalize, LeavesStandardInstanceAlone) {
  const auto out = normalize(small_kp());
  EXPECT_EQ(out.verdict, Verdict::kProceed);
  ASSERT_TRUE(out.instance);
  EXPECT_EQ(*out.instance, small_kp());
  EXPECT_TRUE(out.removed_items.empty());
}

TEST(Normalize, MkpNothingFits) {
  const auto out = normalize(MkpInstance({2}, {7}, {5, 6}));
  EXPECT_EQ(out.verdict, Verdict::kEmpty);
  EXPECT_FALSE(out.instance);
  EXPECT_EQ(out.removed_items, std::vector<std::size_t>{0});
}

TEST(Normalize, MkpDropsSurplusKnapsacks) {
  // m = 4 > n = 2: keep the two largest; the 1-capacity bag is below s_min.
  const auto out = normalize(MkpInstance({1, 1}, {2, 3}, {1, 3, 2, 4}));
  EXPECT_EQ(out.kept_knapsacks, (std::vector<std::size_t>{1, 3}));
  ASSERT_TRUE(out.instance);
  EXPECT_EQ(out.instance->knapsack_count(), 2u);
}

TEST(Normalize, DkpDropsItemsTooLargeInAnyDimension) {
  const DkpInstance x({1, 2, 3}, {{1, 3, 1}, {1, 1, 2}}, {2, 2});
  const auto out = normalize(x);
  EXPECT_EQ(out.removed_items, std::vector<std::size_t>{1});
  EXPECT_EQ(out.verdict, Verdict::kProceed);
}

TEST(Normalize, RestoreMapsIndicesBack) {
  const MkpInstance x({5, 1, 5}, {3, 9, 3}, {3, 3});
  const auto out = normalize(x);
  ASSERT_TRUE(out.instance);
  const auto solved = mkp_dp(*out.instance);
  const auto restored = restore_solution(out, solved);
  EXPECT_EQ(restored.items, (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(evaluate(x, restored).feasible);
  EXPECT_EQ(evaluate(x, restored).profit, 10);
}

TEST(NormalizeProperty, PreservesOptimum) {
  oracle::Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto kp = oracle::random_kp(rng);
    const auto nk = normalize(kp);
    const Value kept = nk.instance ? oracle::kp_opt(*nk.instance) : 0;
    EXPECT_EQ(kept, oracle::kp_opt(kp));
    if (nk.verdict == Verdict::kTrivialAllFit) EXPECT_EQ(nk.trivial_profit, kept);

    const auto dkp = oracle::random_dkp(rng, 9);
    const auto nd = normalize(dkp);
    EXPECT_EQ(nd.instance ? oracle::dkp_opt(*nd.instance) : 0, oracle::dkp_opt(dkp));

    const auto mkp = oracle::random_mkp(rng, 6, 4);
    const auto nm = normalize(mkp);
    const Value mk = nm.instance ? oracle::mkp_opt(*nm.instance) : 0;
    EXPECT_EQ(mk, oracle::mkp_opt(mkp));
    if (nm.verdict == Verdict::kTrivialAllFit) EXPECT_EQ(nm.trivial_profit, mk);
  }
}
