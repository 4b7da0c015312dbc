// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

#include "angleforge/construction.hpp"
#include "angleforge/errors.hpp"
#include "support/oracles.hpp"

namespace angleforge {
namespace {

AlgebraicContext pi4() { return AlgebraicContext::create({-1, 1}, 1, {Rational(1, 2), Rational(3, 2)}); }
AlgebraicContext sqrt2() { return AlgebraicContext::create({-2, 0, 1}, 1, {Rational(1), Rational(2)}); }
// tan(theta) = 2/3
AlgebraicContext two_thirds() { return AlgebraicContext::create({-2, 1}, 3, {Rational(1), Rational(3)}); }

using IntTriple = std::array<long, 6>;

// The whole construction redone for d = 1 with machine integers: lattice
// points, slope-deduplicated direction families and scalings 1..floor(t/k).
// The rotor is b + i c with tan(theta) = c / b.
std::set<IntTriple> int_oracle(long t, long c, long b) {
  std::set<std::pair<long, long>> used;
  std::set<IntTriple> out;
  for (long k = 1; k <= t; ++k) {
    const long quota = (2 * k) * (2 * k) - (2 * k - 2) * (2 * k - 2);
    std::vector<std::pair<long, long>> family;
    for (long x = -2 * k; x <= 2 * k && static_cast<long>(family.size()) < quota; ++x) {
      for (long y = -2 * k; y <= 2 * k && static_cast<long>(family.size()) < quota; ++y) {
        if (x == 0 && y == 0) continue;
        const long g = std::gcd(std::abs(x), std::abs(y));
        long px = x / g, py = y / g;
        if (py < 0 || (py == 0 && px < 0)) px = -px, py = -py;
        if (used.insert({px, py}).second) family.emplace_back(x, y);
      }
    }
    EXPECT_EQ(static_cast<long>(family.size()), quota);
    const long m = t / k;
    for (auto [vx, vy] : family) {
      const long wx = b * vx - c * vy, wy = c * vx + b * vy;
      for (long l1 = 1; l1 <= m; ++l1)
        for (long l2 = 1; l2 <= m; ++l2)
          for (long zx = -t; zx <= t; ++zx)
            for (long zy = -t; zy <= t; ++zy)
              EXPECT_TRUE(out.insert({zx, zy, zx + l1 * vx, zy + l1 * vy, zx + l2 * wx, zy + l2 * wy}).second);
    }
  }
  return out;
}

long as_long(const AlgebraicInt& x) { return x[0].get_si(); }

std::set<IntTriple> as_int_set(const TripleFamily& fam) {
  std::set<IntTriple> s;
  for (const auto& tr : fam.triples) {
    s.insert({as_long(tr.apex.re), as_long(tr.apex.im), as_long(tr.p1.re), as_long(tr.p1.im), as_long(tr.p2.re),
              as_long(tr.p2.im)});
  }
  return s;
}

TEST(Construction, DryRunCounts) {
  EXPECT_EQ(expected_count(pi4(), 1), 36);
  // |G_1| * |T_1| * P_1^2 = 81 * 16 * 4^2
  EXPECT_EQ(expected_count(sqrt2(), 1), BigInt(81 * 16 * 16));
  EXPECT_THROW(expected_count(pi4(), 0), InputError);
}

TEST(Construction, MatchesIntegerOracleForRightIsoscelesAngle) {
  const auto ctx = pi4();
  for (long t = 1; t <= 3; ++t) {
    const auto fam = generate(ctx, t);
    const auto oracle = int_oracle(t, 1, 1);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(fam.triples.size())), expected_count(ctx, t));
    EXPECT_EQ(as_int_set(fam), oracle) << "t = " << t;
  }
  // 25 apexes, |T_1| P_1^2 + |T_2| P_2^2 = 4 * 4 + 12 * 1.
  EXPECT_EQ(generate(ctx, 2).triples.size(), 700u);
}

TEST(Construction, MatchesIntegerOracleForRationalTangent) {
  const auto ctx = two_thirds();
  for (long t = 1; t <= 2; ++t) EXPECT_EQ(as_int_set(generate(ctx, t)), int_oracle(t, 2, 3));
}

TEST(Construction, InvariantsHoldForQuadraticContext) {
  const auto ctx = sqrt2();
  const auto fam = generate(ctx, 1);
  ASSERT_EQ(fam.triples.size(), 20736u);
  EXPECT_TRUE(std::is_sorted(fam.triples.begin(), fam.triples.end()));
  EXPECT_TRUE(std::is_sorted(fam.points.begin(), fam.points.end()));
  const BigInt radius = containment_radius(ctx, 1);
  for (const auto& p : fam.points) EXPECT_TRUE(p.in_grid(radius));

  // Angle check by floating point on a stride of the triples.
  using testing::Float;
  const Float a = testing::alpha_value(ctx);
  const Float theta = boost::multiprecision::atan(a / testing::to_float(ctx.b()));
  const Float two_pi = 2 * boost::math::constants::pi<Float>();
  for (std::size_t i = 0; i < fam.triples.size(); i += 37) {
    const auto& tr = fam.triples[i];
    auto arg = [&](const PlanePoint& p) {
      return boost::multiprecision::atan2(testing::value(p.im, a) - testing::value(tr.apex.im, a),
                                          testing::value(p.re, a) - testing::value(tr.apex.re, a));
    };
    Float diff = arg(tr.p2) - arg(tr.p1);
    if (diff < 0) diff += two_pi;
    EXPECT_LT(abs(diff - theta), Float("1e-50"));
  }
  for (std::size_t i = 0; i < fam.triples.size(); ++i) {
    const auto& idx = fam.indices[i];
    EXPECT_EQ(fam.points[idx[0]], fam.triples[i].apex);
    EXPECT_EQ(fam.points[idx[1]], fam.triples[i].p1);
    EXPECT_EQ(fam.points[idx[2]], fam.triples[i].p2);
  }
}

TEST(Construction, ProvenanceReproducesTriples) {
  const auto ctx = pi4();
  const auto fam = generate(ctx, 3);
  const PlanePoint turn = rotor(ctx);
  for (std::size_t i = 0; i < fam.triples.size(); ++i) {
    const auto& pr = fam.provenance[i];
    const auto& tr = fam.triples[i];
    EXPECT_EQ(tr.p1, c_add(tr.apex, c_scale(ctx, pr.lambda1, pr.v)));
    EXPECT_EQ(tr.p2, c_add(tr.apex, c_scale(ctx, pr.lambda2, c_mul(ctx, turn, pr.v))));
    EXPECT_GT(ctx.sign(pr.lambda1), 0);
    EXPECT_TRUE(pr.lambda2.in_box(BigInt(static_cast<unsigned long>(3 / pr.k))));
  }
}

TEST(Construction, GrowthBound) {
  const auto ctx = pi4();
  EXPECT_EQ(growth_lower_bound(ctx, 1), 0.0L);
  EXPECT_NEAR(static_cast<double>(growth_lower_bound(ctx, 2)), 16 * std::log(2.0), 1e-9);
  EXPECT_NEAR(static_cast<double>(growth_lower_bound(ctx, 3)), 81 * std::log(3.0), 1e-9);
  for (std::uint64_t t = 1; t <= 12; ++t) {
    EXPECT_GE(static_cast<long double>(expected_count(ctx, t).get_d()), growth_lower_bound(ctx, t));
  }
  for (std::uint64_t t = 1; t <= 5; ++t) {
    EXPECT_GE(static_cast<long double>(expected_count(sqrt2(), t).get_d()), growth_lower_bound(sqrt2(), t));
  }
}

TEST(Construction, SizeForN) {
  const auto ctx = pi4();
  ASSERT_EQ(ctx.c3(), 361);
  EXPECT_EQ(size_for_n(ctx, 5776), 3u);
  EXPECT_EQ(size_for_n(ctx, 5777), 4u);
  EXPECT_EQ(size_for_n(ctx, 362), 1u);
  EXPECT_THROW(size_for_n(ctx, 361), InputError);
  for (long n = 362; n < 40000; n += 97) {
    const BigInt t = size_for_n(ctx, n);
    EXPECT_LT(ctx.c3() * t * t, n);
    EXPECT_LE(n, ctx.c3() * (t + 1) * (t + 1));
  }
}

TEST(Construction, ScalingBoundBelowGrowthBound) {
  // For n in (C3 t^{2d}, C3 (t+1)^{2d}] the construction at t already beats the
  // guarantee expressed in n.
  const auto ctx = pi4();
  for (long n = 1500; n < 200000; n += 1013) {
    const auto t = size_for_n(ctx, n);
    EXPECT_LE(scaling_lower_bound(ctx, n), growth_lower_bound(ctx, t) + 1e-9L) << n;
  }
}

TEST(Construction, ContainmentRadius) {
  EXPECT_EQ(containment_radius(pi4(), 1), 1 + 2 * 1 * 2 * 2);
  EXPECT_EQ(containment_radius(pi4(), 3), 3 * (1 + 2 * 1 * 2 * 2));
  // Every point of the t = 3 union fits the bound and the bound is not slack
  // by more than the growth constants suggest.
  const auto fam = generate(pi4(), 3);
  BigInt worst = 0;
  for (const auto& p : fam.points) worst = std::max(worst, p.g_norm());
  EXPECT_LE(worst, containment_radius(pi4(), 3));
  EXPECT_GT(worst, 3);
}

TEST(Construction, RadiusUsesTheNormOfTheRotor) {
  // tan(theta) = 5: alpha = 5 is the integer 5, so b + i alpha lies in G_5,
  // not G_max(|b|, 1). The point 1 + (1 + 5i)(-2 - 2i) = 9 - 12i shows it.
  const auto ctx = AlgebraicContext::create({-5, 1}, 1, {Rational(4), Rational(6)});
  EXPECT_EQ(ctx.rotor_norm(), 5);
  const auto fam = generate(ctx, 1);
  BigInt worst = 0;
  for (const auto& p : fam.points) worst = std::max(worst, p.g_norm());
  EXPECT_EQ(worst, 13);
  EXPECT_GT(worst, 1 + 2 * 1 * ctx.c2() * ctx.c2());
  EXPECT_LE(worst, containment_radius(ctx, 1));
}

TEST(Construction, Budgets) {
  ConstructionLimits tight;
  tight.triple_budget = 35;
  EXPECT_THROW(generate(pi4(), 1, tight), BudgetExceeded);
  tight.triple_budget = 36;
  EXPECT_EQ(generate(pi4(), 1, tight).triples.size(), 36u);
  EXPECT_THROW(generate(pi4(), 0), InputError);
}

TEST(Construction, Deterministic) {
  const auto a = generate(pi4(), 2);
  const auto b = generate(pi4(), 2);
  EXPECT_EQ(a.triples, b.triples);
  EXPECT_EQ(a.points, b.points);
}

}  // namespace
}  // namespace angleforge
