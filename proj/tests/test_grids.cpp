// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "angleforge/errors.hpp"
#include "angleforge/grids.hpp"
#include "support/oracles.hpp"

namespace angleforge {
namespace {

AlgebraicContext pi4() { return AlgebraicContext::create({-1, 1}, 1, {Rational(1, 2), Rational(3, 2)}); }
AlgebraicContext sqrt2() { return AlgebraicContext::create({-2, 0, 1}, 1, {Rational(1), Rational(2)}); }
AlgebraicContext cubic() {
  return AlgebraicContext::create({-1, -1, 0, 1}, 2, {Rational(13, 10), Rational(14, 10)});
}

AlgebraicInt el(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return AlgebraicInt(std::move(v));
}

TEST(Grids, Examples) {
  const auto k = gen_K(pi4(), 2);
  ASSERT_EQ(k.size(), 5u);
  EXPECT_EQ(k.front(), el({-2}));
  EXPECT_EQ(k.back(), el({2}));
  EXPECT_EQ(gen_K(sqrt2(), 1).size(), 9u);
  EXPECT_EQ(gen_K(sqrt2(), 0), std::vector<AlgebraicInt>{el({0, 0})});
  EXPECT_EQ(gen_G(pi4(), 1).size(), 9u);
  EXPECT_EQ(gen_G(sqrt2(), 1).size(), 81u);
  EXPECT_EQ(gen_G(pi4(), 0).size(), 1u);
}

TEST(Grids, SizesMatchClosedFormsAndAreLexicographic) {
  for (const auto& ctx : {pi4(), sqrt2(), cubic()}) {
    for (std::uint64_t t = 0; t <= 3; ++t) {
      const auto k = gen_K(ctx, t);
      EXPECT_EQ(BigInt(static_cast<unsigned long>(k.size())), box_size(ctx.degree(), t));
      EXPECT_TRUE(std::is_sorted(k.begin(), k.end()));
      EXPECT_EQ(std::adjacent_find(k.begin(), k.end()), k.end());
      for (const auto& x : k) EXPECT_TRUE(x.in_box(BigInt(static_cast<unsigned long>(t))));
      if (ctx.degree() <= 2) {
        const auto g = gen_G(ctx, t);
        EXPECT_EQ(BigInt(static_cast<unsigned long>(g.size())), grid_size(ctx.degree(), t));
        EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
      }
    }
  }
}

TEST(Grids, CardinalityGuard) {
  EXPECT_THROW(gen_K(sqrt2(), 10, 100), BudgetExceeded);
  EXPECT_THROW(gen_G(sqrt2(), 2, 624), BudgetExceeded);
  EXPECT_EQ(gen_G(sqrt2(), 2, 625).size(), 625u);
  EXPECT_THROW(gen_G(cubic(), 1000), BudgetExceeded);
}

TEST(Grids, PositiveKExamples) {
  EXPECT_EQ(positive_K(pi4(), 2), (std::vector<AlgebraicInt>{el({1}), el({2})}));
  EXPECT_TRUE(positive_K(pi4(), 0).empty());
  EXPECT_TRUE(positive_K(sqrt2(), 0).empty());
}

TEST(Grids, PositiveKSqrtTwoByFloatingOracle) {
  const auto ctx = sqrt2();
  const auto a = testing::alpha_value(ctx);
  std::vector<AlgebraicInt> expected;
  for (long a0 = -1; a0 <= 1; ++a0)
    for (long a1 = -1; a1 <= 1; ++a1)
      if (testing::value(el({a0, a1}), a) > 0) expected.push_back(el({a0, a1}));
  // {sqrt2 - 1, sqrt2, 1, 1 + sqrt2}
  ASSERT_EQ(expected.size(), 4u);
  EXPECT_EQ(positive_K(ctx, 1), expected);
}

TEST(Grids, SignTrichotomyAndNegationSymmetry) {
  for (const auto& ctx : {pi4(), sqrt2(), cubic()}) {
    for (std::uint64_t t = 0; t <= 2; ++t) {
      const auto pos = positive_K(ctx, t);
      std::set<AlgebraicInt> rebuilt(pos.begin(), pos.end());
      rebuilt.insert(ctx.zero());
      for (const auto& x : pos) EXPECT_TRUE(rebuilt.insert(-x).second);
      const auto all = gen_K(ctx, t);
      EXPECT_EQ(rebuilt, std::set<AlgebraicInt>(all.begin(), all.end()));
    }
  }
}

}  // namespace
}  // namespace angleforge
