#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "generators.hpp"
#include "hookbound/dimensions.hpp"
#include "hookbound/excited.hpp"
#include "oracles.hpp"

namespace hookbound {
namespace {

const Partition kLambda{5, 5, 5, 2};
const Partition kMu{3, 2, 1, 1};

ExcitedDiagram origin(const Partition& mu) { return {mu.boxes(), mu}; }

std::set<Box> as_set(const std::vector<Box>& v) { return {v.begin(), v.end()}; }

TEST(Excited, WorkedExampleCountAndSum) {
  const auto all = enumerate_excited(kLambda, kMu);
  EXPECT_EQ(all.size(), 8u);
  EXPECT_EQ(excited_sum(kLambda, kMu), 413280);
  EXPECT_EQ(naruse_ratio(kLambda, kMu), Rational(1230, 291720));
  EXPECT_EQ(skew_dim_naruse(kLambda, kMu), 1230);
}

TEST(Excited, WorkedExampleOriginHooks) {
  // Hooks of lambda over the boxes of mu in row-major order.
  const std::vector<int> expected{8, 7, 5, 7, 6, 6, 2};
  const auto boxes = kMu.boxes();
  ASSERT_EQ(boxes.size(), expected.size());
  for (std::size_t i = 0; i < boxes.size(); ++i)
    EXPECT_EQ(hook_length(kLambda, boxes[i]), expected[i]);
  EXPECT_EQ(hook_product(kLambda, boxes), 8 * 7 * 5 * 7 * 6 * 6 * 2);
}

TEST(Excited, OriginIsFirstAndAllDistinct) {
  const auto all = enumerate_excited(kLambda, kMu);
  EXPECT_EQ(all.front().boxes, kMu.boxes());
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].boxes, all[i].boxes);
}

TEST(Excited, ExcitableBoxes) {
  // [2,2] \ nothing else: only (1,1) of [1] can move, to (2,2).
  const Partition square{2, 2};
  const auto movable = excitable_boxes(square, origin(Partition{1}));
  ASSERT_EQ(movable.size(), 1u);
  EXPECT_EQ(movable.front(), (Box{1, 1}));
  const ExcitedDiagram moved = excite(origin(Partition{1}), {1, 1});
  EXPECT_EQ(moved.boxes, (std::vector<Box>{{2, 2}}));
  EXPECT_TRUE(excitable_boxes(square, moved).empty());
  // Blocked by a neighbour.
  EXPECT_TRUE(excitable_boxes(square, origin(Partition{2})).size() == 0);
}

TEST(Excited, BoxOutsideLambdaRejected) {
  EXPECT_THROW(excitable_boxes(Partition{2}, origin(Partition{1, 1})), std::invalid_argument);
  EXPECT_THROW(enumerate_excited(Partition{2}, Partition{1, 1}), std::invalid_argument);
  EXPECT_THROW(excited_sum(Partition{2}, Partition{3}), std::invalid_argument);
}

TEST(Excited, EmptyMu) {
  const auto all = enumerate_excited(kLambda, Partition{});
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all.front().boxes.empty());
  EXPECT_EQ(excited_sum(kLambda, Partition{}), 1);
  EXPECT_EQ(naruse_ratio(kLambda, Partition{}), 1);
}

TEST(Excited, FullMuHasOneDiagram) {
  EXPECT_EQ(enumerate_excited(kLambda, kLambda).size(), 1u);
  EXPECT_EQ(naruse_ratio(kLambda, kLambda), Rational(1, dim_hlf(kLambda)));
}

TEST(Excited, MatchesDefinitionOracle) {
  for (int n = 1; n <= 8; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      for (const Partition& mu : sub_partitions(lambda)) {
        const auto expected = testing::excited_sets(lambda, mu);
        std::set<std::set<Box>> got;
        for (const auto& e : enumerate_excited(lambda, mu)) got.insert(as_set(e.boxes));
        EXPECT_EQ(got, expected) << lambda.to_string() << " " << mu.to_string();
      }
    });
  }
}

TEST(Excited, SingleBoxSumIsN) {
  for (int n = 1; n <= 20; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      EXPECT_EQ(excited_sum(lambda, Partition{1}), n);
    });
  }
}

TEST(Excited, ConjugationSymmetry) {
  for (int n = 1; n <= 9; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      const Partition lc = conjugate(lambda);
      for (const Partition& mu : sub_partitions(lambda)) {
        const Partition mc = conjugate(mu);
        EXPECT_EQ(enumerate_excited(lambda, mu).size(), enumerate_excited(lc, mc).size());
        EXPECT_EQ(excited_sum(lambda, mu), excited_sum(lc, mc));
      }
    });
  }
}

TEST(Excited, SumBetweenMaxTermAndCountTimesMaxTerm) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Partition lambda = testing::random_partition(rng, 6 + trial % 10);
    for (const Partition& mu : sub_partitions(lambda, std::min(4, lambda.size()))) {
      BigInt max_term = 0;
      const auto all = enumerate_excited(lambda, mu);
      for (const auto& e : all) max_term = std::max(max_term, hook_product(lambda, e.boxes));
      const BigInt sum = excited_sum(lambda, mu);
      EXPECT_LE(max_term, sum);
      EXPECT_LE(sum, max_term * all.size());
    }
  }
}

TEST(Excited, NaruseRatioMatchesTableauOracle) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Partition lambda = testing::random_partition(rng, 10 + trial % 6);
    const auto subs = sub_partitions(lambda);
    const Partition& mu = subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng)];
    const Rational expected(BigInt(testing::count_skew_tableaux(lambda, mu)),
                            BigInt(testing::count_skew_tableaux(lambda, Partition{})));
    EXPECT_EQ(naruse_ratio(lambda, mu), expected);
  }
}

TEST(Excited, ClosureOfArbitraryStart) {
  // A single box at (1,2) of [3,3] can reach (2,3) only.
  const auto closure = excitation_closure(Partition{3, 3}, {{1, 2}});
  ASSERT_EQ(closure.size(), 2u);
  EXPECT_EQ(closure[0], (std::vector<Box>{{1, 2}}));
  EXPECT_EQ(closure[1], (std::vector<Box>{{2, 3}}));
}

TEST(ExcitedSumCache, AgreesAndMemoises) {
  ExcitedSumCache cache;
  EXPECT_EQ(cache.excited_sum(kLambda, kMu), 413280);
  EXPECT_EQ(cache.naruse_ratio(kLambda, kMu), naruse_ratio(kLambda, kMu));
  EXPECT_EQ(cache.size(), 1u);
  cache.excited_sum(kLambda, Partition{1});
  EXPECT_EQ(cache.size(), 2u);
}

}  // namespace
}  // namespace hookbound
