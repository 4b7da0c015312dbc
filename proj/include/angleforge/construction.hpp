// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "angleforge/directions.hpp"
#include "angleforge/grids.hpp"
#include "angleforge/planar.hpp"

namespace angleforge {

/// (apex, p1, p2) with angle p1-apex-p2 equal to theta, p2 counterclockwise of p1.
struct Triple {
  PlanePoint apex;
  PlanePoint p1;
  PlanePoint p2;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple& a, const Triple& b) {
    if (auto c = a.apex <=> b.apex; c != 0) return c;
    if (auto c = a.p1 <=> b.p1; c != 0) return c;
    return a.p2 <=> b.p2;
  }
};

/// Where a triple came from: apex z, direction v in T_k and the two positive
/// scalings, giving (z, z + lambda1 v, z + (b + i alpha) lambda2 v).
struct TripleProvenance {
  std::uint64_t k = 0;
  PlaneVector v;
  AlgebraicInt lambda1;
  AlgebraicInt lambda2;
};

struct TripleFamily {
  std::uint64_t t = 0;
  /// Sorted lexicographically; provenance[i] belongs to triples[i].
  std::vector<Triple> triples;
  std::vector<TripleProvenance> provenance;
  /// Sorted, deduplicated union of all triple members.
  std::vector<PlanePoint> points;
  /// triples[i] as indices into points.
  std::vector<std::array<std::size_t, 3>> indices;
};

struct ConstructionLimits {
  std::uint64_t triple_budget = 10'000'000;
  std::uint64_t grid_limit = kDefaultGridLimit;
};

/// Exact number of triples generate() emits: |G_t| * sum_k |T_k| P_k^2 with
/// P_k = (|K_{floor(t/k)}| - 1) / 2 positive scalings.
BigInt expected_count(const AlgebraicContext& ctx, std::uint64_t t);

/// (1 + 2 max(|b|, |alpha|) C2^2) t: every generated point lies in this grid.
BigInt containment_radius(const AlgebraicContext& ctx, std::uint64_t t);

/// t^{4d} ln t.
long double growth_lower_bound(const AlgebraicContext& ctx, std::uint64_t t);

/// n^2 / (2d C3^2 2^{4d}) ln(n / (2^{2d} C3)): the triple guarantee in terms
/// of the number of points n.
long double scaling_lower_bound(const AlgebraicContext& ctx, const BigInt& n);

/// The unique t with C3 t^{2d} < n <= C3 (t+1)^{2d}. Throws InputError when n <= C3.
std::uint64_t size_for_n(const AlgebraicContext& ctx, const BigInt& n);

/// Enumerate every (k, z, v, lambda1, lambda2) with z in G_t, v in T_k and
/// lambda1, lambda2 positive elements of K_{floor(t/k)}, emit the triples and
/// check them: angle exactly theta, pairwise distinct, contained in
/// G_{containment_radius}, count equal to expected_count and at least
/// t^{4d} ln t. A failed check throws InvariantViolation.
TripleFamily generate(const AlgebraicContext& ctx, std::uint64_t t, const ConstructionLimits& limits = {});

}  // namespace angleforge
