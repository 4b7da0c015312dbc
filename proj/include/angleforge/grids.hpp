// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "angleforge/algebraic.hpp"
#include "angleforge/planar.hpp"

namespace angleforge {

/// Hard cap on the number of elements any generator may materialize.
inline constexpr std::uint64_t kDefaultGridLimit = 100'000'000;

/// (2t+1)^d and (2t+1)^{2d}.
BigInt box_size(std::size_t d, std::uint64_t t);
BigInt grid_size(std::size_t d, std::uint64_t t);

/// K_t: all sum a_k alpha^k with |a_k| <= t, lexicographic in (a_0, ..., a_{d-1}).
/// Throws BudgetExceeded if (2t+1)^d > limit.
std::vector<AlgebraicInt> gen_K(const AlgebraicContext& ctx, std::uint64_t t,
                                std::uint64_t limit = kDefaultGridLimit);

/// G_t = K_t + i K_t, real part outermost.
std::vector<PlanePoint> gen_G(const AlgebraicContext& ctx, std::uint64_t t,
                              std::uint64_t limit = kDefaultGridLimit);

/// Positive elements of K_t, in generation order; exactly (|K_t| - 1) / 2 of them.
std::vector<AlgebraicInt> positive_K(const AlgebraicContext& ctx, std::uint64_t t,
                                     std::uint64_t limit = kDefaultGridLimit);

}  // namespace angleforge
