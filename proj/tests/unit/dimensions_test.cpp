#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "hookbound/dimensions.hpp"
#include "hookbound/excited.hpp"
#include "oracles.hpp"

namespace hookbound {
namespace {

TEST(SkewShape, RejectsNonContainment) {
  EXPECT_THROW(SkewShape(Partition{3, 1}, Partition{2, 2}), std::invalid_argument);
  EXPECT_EQ(SkewShape(Partition{4, 4}, Partition{2, 2}).size(), 4);
  EXPECT_EQ(SkewShape(Partition{4, 4}, Partition{2, 2}).to_string(), "[4,4]\\[2,2]");
}

TEST(DimHlf, KnownValues) {
  EXPECT_EQ(dim_hlf(Partition{}), 1);
  EXPECT_EQ(dim_hlf(Partition{1}), 1);
  EXPECT_EQ(dim_hlf(Partition{3, 2}), 5);
  EXPECT_EQ(dim_hlf(Partition{4, 4}), 14);  // Catalan number
  EXPECT_EQ(dim_hlf(Partition{5, 5, 5, 2}), 291720);
}

TEST(DimHlf, SumOfSquaresIsGroupOrder) {
  for (int n = 0; n <= 12; ++n) {
    BigInt total = 0;
    for_each_partition(n, [&](const Partition& p) { total += dim_hlf(p) * dim_hlf(p); });
    EXPECT_EQ(total, factorial(static_cast<std::uint32_t>(n))) << n;
  }
}

TEST(DimHlf, ConjugationInvariant) {
  for (int n = 1; n <= 25; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      EXPECT_EQ(dim_hlf(p), dim_hlf(conjugate(p)));
    });
  }
}

TEST(DimHlf, MatchesTableauCountOracle) {
  for (int n = 1; n <= 12; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      EXPECT_EQ(dim_hlf(p), testing::count_skew_tableaux(p, Partition{}));
    });
  }
}

TEST(SkewDim, WorkedExample) {
  const SkewShape s(Partition{5, 5, 5, 2}, Partition{3, 2, 1, 1});
  EXPECT_EQ(skew_dim_oracle(s), 1230);
  EXPECT_EQ(skew_dim_det(s), 1230);
  EXPECT_EQ(testing::count_skew_tableaux(s.outer(), s.inner()), 1230u);
}

TEST(SkewDim, SmallShapes) {
  const SkewShape s(Partition{4, 4}, Partition{2, 2});
  EXPECT_EQ(skew_dim_oracle(s), 2);
  EXPECT_EQ(skew_dim_det(s), 2);
  const SkewShape full(Partition{3, 2}, Partition{3, 2});
  EXPECT_EQ(skew_dim_oracle(full), 1);
  EXPECT_EQ(skew_dim_det(full), 1);
  // Disconnected: two single boxes
  const SkewShape apart(Partition{2, 1}, Partition{1});
  EXPECT_EQ(skew_dim_det(apart), 2);
}

TEST(SkewDim, OracleBound) {
  const SkewShape big(Partition{10, 10}, Partition{});
  EXPECT_THROW(skew_dim_oracle(big), std::domain_error);
  EXPECT_EQ(skew_dim_oracle(big, 20), dim_hlf(Partition{10, 10}));
}

TEST(SkewDim, ThreeMethodsAgree) {
  for (int n = 1; n <= 9; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      for (const Partition& mu : sub_partitions(lambda)) {
        const SkewShape s(lambda, mu);
        const BigInt oracle = skew_dim_oracle(s);
        EXPECT_EQ(oracle, testing::count_skew_tableaux(lambda, mu));
        EXPECT_EQ(skew_dim_det(s), oracle) << s.to_string();
        EXPECT_EQ(skew_dim_naruse(lambda, mu), oracle) << s.to_string();
      }
    });
  }
}

TEST(SkewDim, DeterminantOnRandomLargerShapes) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const Partition lambda = testing::random_partition(rng, 14 + trial % 6);
    const auto subs = sub_partitions(lambda);
    const Partition& mu = subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng)];
    EXPECT_EQ(skew_dim_det(SkewShape(lambda, mu)),
              BigInt(testing::count_skew_tableaux(lambda, mu)));
  }
}

TEST(SkewDim, SkewByOneBoxIsBranching) {
  // d_{lambda \ [1]} = d_lambda
  for (int n = 1; n <= 10; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      EXPECT_EQ(skew_dim_det(SkewShape(lambda, Partition{1})), dim_hlf(lambda));
    });
  }
}

}  // namespace
}  // namespace hookbound
