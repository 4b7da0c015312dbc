// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "angleforge/construction.hpp"
#include "angleforge/planar.hpp"

namespace angleforge {

enum class CountMethod { brute, fast };

const char* to_string(CountMethod m);

/// Number of (apex, unordered pair) incidences whose angle at the apex is theta.
struct CountReport {
  BigInt total;
  std::vector<std::uint64_t> per_apex;  // same order as the input points
  CountMethod method = CountMethod::fast;
  std::chrono::nanoseconds elapsed{0};
};

struct CountOptions {
  std::size_t brute_limit = 800;
  /// Worker threads for the apex loop; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// O(n^3) oracle: every apex, every unordered pair, one exact predicate call.
CountReport count_brute(const AlgebraicContext& ctx, std::span<const PlanePoint> points,
                        const CountOptions& options = {});

/// O(n^2 log n): per apex, sort the rays by argument, then for every ray
/// binary-search its theta-rotation and multiply the ray multiplicities.
CountReport count_fast(const AlgebraicContext& ctx, std::span<const PlanePoint> points,
                       const CountOptions& options = {});

enum class SweepSource { automatic, grid, construction };

struct SweepOptions {
  std::uint64_t t_min = 1;
  std::uint64_t t_max = 0;
  /// automatic: G_{grid_scale * t} for d = 1, the construction union otherwise.
  SweepSource source = SweepSource::automatic;
  std::uint64_t grid_scale = 9;
  std::uint64_t point_budget = 20000;
  ConstructionLimits construction;
  unsigned threads = 0;
};

struct SweepRow {
  std::uint64_t t = 0;
  std::uint64_t n = 0;
  std::optional<BigInt> triples;  // empty when the step was skipped
  long double n2logn = 0;
  long double ratio = 0;
};

std::vector<SweepRow> sweep(const AlgebraicContext& ctx, const SweepOptions& options);

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace angleforge
