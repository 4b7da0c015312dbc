// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "angleforge/grids.hpp"
#include "angleforge/planar.hpp"

namespace angleforge {

/// A nonzero vector tagged with its half plane: 0 for arguments in [0, pi),
/// 1 for [pi, 2 pi). Sorting rays only needs one cross-product sign per
/// comparison once the half plane is known.
struct Ray {
  PlaneVector v;
  int half = 0;
};

Ray make_ray(const AlgebraicContext& ctx, PlaneVector v);

/// Order by argument in [0, 2 pi); equal iff same ray.
std::weak_ordering compare_rays(const AlgebraicContext& ctx, const Ray& a, const Ray& b);

/// Total preorder on nonzero vectors by argument in [0, 2 pi).
std::weak_ordering direction_order(const AlgebraicContext& ctx, const PlaneVector& u,
                                   const PlaneVector& v);

/// Representative of v's direction mod pi with argument in [0, pi).
PlaneVector canonical_mod_pi(const AlgebraicContext& ctx, const PlaneVector& v);

/// Number of distinct directions (mod pi) spanned by pairs of points.
std::uint64_t count_distinct_directions(const AlgebraicContext& ctx, std::span<const PlanePoint> points);

/// Size quota of T_k: (2k)^{2d} - (2(k-1))^{2d}.
BigInt t_quota(std::size_t d, std::uint64_t k);

struct DirectionFamily {
  std::uint64_t t = 0;
  /// families[k-1] is T_k.
  std::vector<std::vector<PlaneVector>> families;
  /// census[k-1]: distinct directions among the nonzero elements of G_{2k}.
  std::vector<std::uint64_t> census;

  std::size_t total() const;
};

/// Greedy deterministic choice of T_1..T_t: scan G_{2k} in generation order,
/// admitting a vector iff its direction mod pi is new across all T_j so far.
/// Failing to meet a quota throws InvariantViolation.
DirectionFamily select_T(const AlgebraicContext& ctx, std::uint64_t t,
                         std::uint64_t limit = kDefaultGridLimit);

}  // namespace angleforge
