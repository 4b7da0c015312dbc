// SPDX-License-Identifier: Apache-2.0

#include "angleforge/io.hpp"

#include <ostream>

#include "angleforge/errors.hpp"

namespace angleforge {

using nlohmann::json;

namespace {

BigInt integer_from_json(const json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  throw InputError("expected an integer (decimal string or JSON integer), got " + j.dump());
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  throw InputError("expected a rational as a string such as \"7/5\", got " + j.dump());
}

json coeffs_to_json(const std::vector<BigInt>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(c.get_str());
  return arr;
}

std::vector<BigInt> coeffs_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of integers, got " + j.dump());
  std::vector<BigInt> out;
  for (const auto& e : j) out.push_back(integer_from_json(e));
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

void check_schema(const json& j) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema) {
    throw InputError("unsupported schema " + j.at("schema").dump());
  }
}

}  // namespace

json context_to_json(const AlgebraicContext& ctx) {
  return json{{"schema", kSchema},
              {"minpoly", coeffs_to_json(ctx.minpoly())},
              {"b", ctx.b().get_str()},
              {"iso", json::array({to_string(ctx.iso().lo), to_string(ctx.iso().hi)})}};
}

AlgebraicContext context_from_json(const json& j, ContextOptions options) {
  check_schema(j);
  const IntPoly minpoly = coeffs_from_json(field(j, "minpoly"));
  const BigInt b = integer_from_json(field(j, "b"));
  const json& iso = field(j, "iso");
  if (!iso.is_array() || iso.size() != 2) throw InputError("\"iso\" must be a two-element array");
  return AlgebraicContext::create(minpoly, b, {rational_from_json(iso[0]), rational_from_json(iso[1])}, options);
}

json point_to_json(const PlanePoint& p) {
  return json{{"re", coeffs_to_json(p.re.coeffs())}, {"im", coeffs_to_json(p.im.coeffs())}};
}

PlanePoint point_from_json(const AlgebraicContext& ctx, const json& j) {
  auto re = coeffs_from_json(field(j, "re"));
  auto im = coeffs_from_json(field(j, "im"));
  if (re.size() != ctx.degree() || im.size() != ctx.degree()) {
    throw InputError("point " + j.dump() + " does not have " + std::to_string(ctx.degree()) + " coordinates per part");
  }
  return {AlgebraicInt(std::move(re)), AlgebraicInt(std::move(im))};
}

json point_set_to_json(const AlgebraicContext& ctx, std::span<const PlanePoint> points) {
  json arr = json::array();
  for (const auto& p : points) arr.push_back(point_to_json(p));
  return json{{"schema", kSchema}, {"context", context_to_json(ctx)}, {"points", std::move(arr)}};
}

PointSet point_set_from_json(const json& j, ContextOptions options) {
  check_schema(j);
  PointSet out{context_from_json(field(j, "context"), options), {}};
  const json& pts = field(j, "points");
  if (!pts.is_array()) throw InputError("\"points\" must be an array");
  out.points.reserve(pts.size());
  for (const auto& p : pts) out.points.push_back(point_from_json(out.ctx, p));
  return out;
}

json triples_to_json(const TripleFamily& family) {
  json idx = json::array();
  json prov = json::array();
  for (std::size_t i = 0; i < family.triples.size(); ++i) {
    const auto& [a, p, q] = family.indices[i];
    idx.push_back(json::array({a, p, q}));
    const auto& pv = family.provenance[i];
    prov.push_back(json{{"k", pv.k},
                        {"v", point_to_json(pv.v)},
                        {"lambda1", coeffs_to_json(pv.lambda1.coeffs())},
                        {"lambda2", coeffs_to_json(pv.lambda2.coeffs())}});
  }
  return json{{"schema", kSchema}, {"t", family.t}, {"triples", std::move(idx)}, {"provenance", std::move(prov)}};
}

void write_points_csv(std::ostream& out, const AlgebraicContext& ctx, std::span<const PlanePoint> points) {
  out << "re,im\n";
  for (const auto& p : points) out << ctx.to_decimal(p.re) << ',' << ctx.to_decimal(p.im) << '\n';
}

}  // namespace angleforge
