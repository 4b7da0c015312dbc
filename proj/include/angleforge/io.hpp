// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include <json.hpp>

#include "angleforge/algebraic.hpp"
#include "angleforge/construction.hpp"
#include "angleforge/planar.hpp"

namespace angleforge {

inline constexpr const char* kSchema = "angleforge/1";

// All integers are written as decimal strings; readers also accept JSON integers.

nlohmann::json context_to_json(const AlgebraicContext& ctx);
AlgebraicContext context_from_json(const nlohmann::json& j, ContextOptions options = {});

nlohmann::json point_to_json(const PlanePoint& p);
PlanePoint point_from_json(const AlgebraicContext& ctx, const nlohmann::json& j);

struct PointSet {
  AlgebraicContext ctx;
  std::vector<PlanePoint> points;
};

nlohmann::json point_set_to_json(const AlgebraicContext& ctx, std::span<const PlanePoint> points);
PointSet point_set_from_json(const nlohmann::json& j, ContextOptions options = {});

/// {"schema", "t", "triples": [[apex, p1, p2], ...], "provenance": [...]}
/// with indices into the family's point list.
nlohmann::json triples_to_json(const TripleFamily& family);

/// Two columns re,im with a high-precision decimal value per coordinate.
void write_points_csv(std::ostream& out, const AlgebraicContext& ctx, std::span<const PlanePoint> points);

}  // namespace angleforge
