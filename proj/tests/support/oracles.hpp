// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference computations. Nothing here goes through the exact
// sign/enclosure machinery of the library.

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "angleforge/algebraic.hpp"
#include "angleforge/planar.hpp"

namespace angleforge::testing {

using Float = boost::multiprecision::cpp_bin_float_100;

inline Float to_float(const BigInt& z) { return Float(z.get_str()); }

inline Float to_float(const Rational& q) { return to_float(q.get_num()) / to_float(q.get_den()); }

inline Float poly_at(const IntPoly& p, const Float& x) {
  Float acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + to_float(*it);
  return acc;
}

/// alpha by floating-point bisection of the minimal polynomial.
inline Float alpha_value(const AlgebraicContext& ctx) {
  Float lo = to_float(ctx.iso().lo), hi = to_float(ctx.iso().hi);
  const bool rising = poly_at(ctx.minpoly(), lo) < 0;
  for (int i = 0; i < 400; ++i) {
    Float mid = (lo + hi) / 2;
    if ((poly_at(ctx.minpoly(), mid) < 0) == rising) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

inline Float value(const AlgebraicInt& x, const Float& alpha) {
  Float acc = 0, power = 1;
  for (const auto& a : x.coeffs()) {
    acc += to_float(a) * power;
    power *= alpha;
  }
  return acc;
}

inline AlgebraicInt random_element(std::mt19937_64& rng, std::size_t d, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<BigInt> c;
  for (std::size_t k = 0; k < d; ++k) c.emplace_back(dist(rng));
  return AlgebraicInt(std::move(c));
}

inline PlanePoint random_point(std::mt19937_64& rng, std::size_t d, long bound) {
  return {random_element(rng, d, bound), random_element(rng, d, bound)};
}

inline PlanePoint int_point(long re, long im) {
  return {AlgebraicInt({BigInt(re)}), AlgebraicInt({BigInt(im)})};
}

/// Distinct random points of the integer grid [-half, half]^2 (d = 1).
inline std::vector<PlanePoint> random_int_set(std::mt19937_64& rng, std::size_t n, long half) {
  std::vector<std::pair<long, long>> all;
  for (long x = -half; x <= half; ++x)
    for (long y = -half; y <= half; ++y) all.emplace_back(x, y);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<PlanePoint> out;
  for (std::size_t i = 0; i < n && i < all.size(); ++i) out.push_back(int_point(all[i].first, all[i].second));
  return out;
}

}  // namespace angleforge::testing
