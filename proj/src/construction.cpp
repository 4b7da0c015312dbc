// SPDX-License-Identifier: Apache-2.0

#include "angleforge/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "angleforge/errors.hpp"

namespace angleforge {

namespace {

long double to_long_double(const BigInt& z) {
  // mpz_get_d loses nothing that matters for bounds of this size.
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

}  // namespace

BigInt expected_count(const AlgebraicContext& ctx, std::uint64_t t) {
  if (t < 1) throw InputError("expected_count: t must be at least 1");
  const std::size_t d = ctx.degree();
  BigInt sum = 0;
  for (std::uint64_t k = 1; k <= t; ++k) {
    const BigInt positives = (box_size(d, t / k) - 1) / 2;
    sum += t_quota(d, k) * positives * positives;
  }
  return grid_size(d, t) * sum;
}

BigInt containment_radius(const AlgebraicContext& ctx, std::uint64_t t) {
  return (1 + 2 * ctx.rotor_norm() * ctx.c2() * ctx.c2()) * BigInt(static_cast<unsigned long>(t));
}

long double growth_lower_bound(const AlgebraicContext& ctx, std::uint64_t t) {
  if (t < 1) throw InputError("growth_lower_bound: t must be at least 1");
  const long double tt = static_cast<long double>(t);
  return std::pow(tt, static_cast<long double>(4 * ctx.degree())) * std::log(tt);
}

long double scaling_lower_bound(const AlgebraicContext& ctx, const BigInt& n) {
  const auto d = static_cast<long double>(ctx.degree());
  const long double nn = to_long_double(n);
  const long double c3 = to_long_double(ctx.c3());
  return nn * nn / (2 * d * c3 * c3 * std::pow(2.0L, 4 * d)) * std::log(nn / (std::pow(2.0L, 2 * d) * c3));
}

std::uint64_t size_for_n(const AlgebraicContext& ctx, const BigInt& n) {
  if (n <= ctx.c3()) {
    throw InputError("size_for_n: n = " + n.get_str() + " does not exceed C3 = " + ctx.c3().get_str());
  }
  // C3 t^{2d} < n  <=>  t^{2d} <= floor((n - 1) / C3); take the largest such t.
  BigInt q = (n - 1) / ctx.c3();
  BigInt t;
  mpz_root(t.get_mpz_t(), q.get_mpz_t(), 2 * ctx.degree());
  if (!t.fits_ulong_p()) throw InputError("size_for_n: t out of range");
  return t.get_ui();
}

TripleFamily generate(const AlgebraicContext& ctx, std::uint64_t t, const ConstructionLimits& limits) {
  if (t < 1) throw InputError("generate: t must be at least 1");
  const BigInt expected = expected_count(ctx, t);
  if (expected > BigInt(static_cast<unsigned long>(limits.triple_budget))) {
    throw BudgetExceeded("generate: " + expected.get_str() + " triples exceed the budget of " +
                         std::to_string(limits.triple_budget));
  }

  const auto apexes = gen_G(ctx, t, limits.grid_limit);
  const DirectionFamily dirs = select_T(ctx, t, limits.grid_limit);
  const PlanePoint turn = rotor(ctx);

  std::vector<Triple> triples;
  std::vector<TripleProvenance> provenance;
  triples.reserve(expected.get_ui());
  provenance.reserve(expected.get_ui());
  for (std::uint64_t k = 1; k <= t; ++k) {
    const auto scalings = positive_K(ctx, t / k, limits.grid_limit);
    for (const auto& v : dirs.families[k - 1]) {
      const PlaneVector turned = c_mul(ctx, turn, v);
      for (const auto& l1 : scalings) {
        const PlaneVector step1 = c_scale(ctx, l1, v);
        for (const auto& l2 : scalings) {
          const PlaneVector step2 = c_scale(ctx, l2, turned);
          for (const auto& z : apexes) {
            triples.push_back({z, c_add(z, step1), c_add(z, step2)});
            provenance.push_back({k, v, l1, l2});
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(triples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return triples[a] < triples[b]; });

  TripleFamily out;
  out.t = t;
  out.triples.reserve(triples.size());
  out.provenance.reserve(triples.size());
  for (std::size_t i : order) {
    out.triples.push_back(std::move(triples[i]));
    out.provenance.push_back(std::move(provenance[i]));
  }

  for (std::size_t i = 1; i < out.triples.size(); ++i) {
    if (out.triples[i - 1] == out.triples[i]) {
      throw InvariantViolation("generate: duplicate triple with apex " + out.triples[i].apex.to_string());
    }
  }
  if (BigInt(static_cast<unsigned long>(out.triples.size())) != expected) {
    throw InvariantViolation("generate: emitted " + std::to_string(out.triples.size()) +
                             " triples, expected " + expected.get_str());
  }
  if (static_cast<long double>(out.triples.size()) < growth_lower_bound(ctx, t)) {
    throw InvariantViolation("generate: fewer than t^{4d} ln t triples");
  }

  const BigInt radius = containment_radius(ctx, t);
  for (const auto& tr : out.triples) {
    if (angle_at(ctx, tr.apex, tr.p1, tr.p2) != AngleMatch::theta_plus) {
      throw InvariantViolation("generate: triple at apex " + tr.apex.to_string() + " does not span theta");
    }
    out.points.push_back(tr.apex);
    out.points.push_back(tr.p1);
    out.points.push_back(tr.p2);
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  for (const auto& p : out.points) {
    if (!p.in_grid(radius)) {
      throw InvariantViolation("generate: point " + p.to_string() + " escapes G_" + radius.get_str());
    }
  }

  auto index_of = [&](const PlanePoint& p) {
    return static_cast<std::size_t>(std::lower_bound(out.points.begin(), out.points.end(), p) -
                                    out.points.begin());
  };
  out.indices.reserve(out.triples.size());
  for (const auto& tr : out.triples) {
    out.indices.push_back({index_of(tr.apex), index_of(tr.p1), index_of(tr.p2)});
  }
  return out;
}

}  // namespace angleforge
