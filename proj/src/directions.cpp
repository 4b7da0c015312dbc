// SPDX-License-Identifier: Apache-2.0

#include "angleforge/directions.hpp"

#include <algorithm>
#include <set>

#include "angleforge/errors.hpp"

namespace angleforge {

namespace {

int half_plane(const AlgebraicContext& ctx, const PlaneVector& v) {
  const int s = ctx.sign(v.im);
  if (s != 0) return s > 0 ? 0 : 1;
  return ctx.sign(v.re) > 0 ? 0 : 1;
}

// Strict "argument less than" for vectors in the same half plane.
struct SameHalfLess {
  const AlgebraicContext* ctx;
  bool operator()(const PlaneVector& a, const PlaneVector& b) const {
    return cross_sign(*ctx, a, b) > 0;
  }
};

}  // namespace

Ray make_ray(const AlgebraicContext& ctx, PlaneVector v) {
  if (v.is_zero()) throw std::invalid_argument("direction of the zero vector");
  const int h = half_plane(ctx, v);
  return {std::move(v), h};
}

std::weak_ordering compare_rays(const AlgebraicContext& ctx, const Ray& a, const Ray& b) {
  if (a.half != b.half) return a.half <=> b.half;
  const int s = cross_sign(ctx, a.v, b.v);
  if (s > 0) return std::weak_ordering::less;
  if (s < 0) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

std::weak_ordering direction_order(const AlgebraicContext& ctx, const PlaneVector& u,
                                   const PlaneVector& v) {
  return compare_rays(ctx, make_ray(ctx, u), make_ray(ctx, v));
}

PlaneVector canonical_mod_pi(const AlgebraicContext& ctx, const PlaneVector& v) {
  if (v.is_zero()) throw std::invalid_argument("direction of the zero vector");
  if (half_plane(ctx, v) == 0) return v;
  return {-v.re, -v.im};
}

std::uint64_t count_distinct_directions(const AlgebraicContext& ctx, std::span<const PlanePoint> points) {
  if (points.size() < 2) throw InputError("count_distinct_directions: need at least 2 points");
  std::vector<PlaneVector> diffs;
  diffs.reserve(points.size() * (points.size() - 1) / 2);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      PlaneVector d = c_sub(points[j], points[i]);
      if (d.is_zero()) throw InputError("count_distinct_directions: duplicate points");
      diffs.push_back(canonical_mod_pi(ctx, d));
    }
  }
  const SameHalfLess less{&ctx};
  std::sort(diffs.begin(), diffs.end(), less);
  std::uint64_t classes = 1;
  for (std::size_t i = 1; i < diffs.size(); ++i) {
    if (less(diffs[i - 1], diffs[i])) ++classes;
  }
  return classes;
}

BigInt t_quota(std::size_t d, std::uint64_t k) {
  BigInt hi, lo;
  mpz_ui_pow_ui(hi.get_mpz_t(), 2 * k, 2 * d);
  mpz_ui_pow_ui(lo.get_mpz_t(), 2 * (k - 1), 2 * d);
  return hi - lo;
}

std::size_t DirectionFamily::total() const {
  std::size_t n = 0;
  for (const auto& f : families) n += f.size();
  return n;
}

DirectionFamily select_T(const AlgebraicContext& ctx, std::uint64_t t, std::uint64_t limit) {
  if (t < 1) throw InputError("select_T: t must be at least 1");
  DirectionFamily out;
  out.t = t;
  std::set<PlaneVector, SameHalfLess> admitted(SameHalfLess{&ctx});
  for (std::uint64_t k = 1; k <= t; ++k) {
    const BigInt quota_big = t_quota(ctx.degree(), k);
    if (!quota_big.fits_ulong_p()) throw BudgetExceeded("select_T: quota too large");
    const std::size_t quota = quota_big.get_ui();

    std::set<PlaneVector, SameHalfLess> census(SameHalfLess{&ctx});
    std::vector<PlaneVector> family;
    family.reserve(quota);
    for (auto& g : gen_G(ctx, 2 * k, limit)) {
      if (g.is_zero()) continue;
      PlaneVector key = canonical_mod_pi(ctx, g);
      census.insert(key);
      if (family.size() < quota && admitted.insert(std::move(key)).second) {
        family.push_back(std::move(g));
      }
    }
    if (family.size() != quota) {
      throw InvariantViolation("select_T: quota for T_" + std::to_string(k) + " not reached (" +
                               std::to_string(family.size()) + " of " + std::to_string(quota) +
                               "); contradicts the distinct-direction lower bound");
    }
    out.families.push_back(std::move(family));
    out.census.push_back(census.size());
  }
  return out;
}

}  // namespace angleforge
