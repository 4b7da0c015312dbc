// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>

#include "angleforge/algebraic.hpp"

namespace angleforge {

/// A point of the plane, viewed as a complex number re + i*im with both
/// parts in Z[alpha].
struct PlanePoint {
  AlgebraicInt re;
  AlgebraicInt im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  /// max(|re|_inf, |im|_inf); the point lies in G_t iff g_norm <= t.
  BigInt g_norm() const;
  bool in_grid(const BigInt& t) const { return re.in_box(t) && im.in_box(t); }

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
  /// Lexicographic over (re, im) coordinates.
  friend std::strong_ordering operator<=>(const PlanePoint& a, const PlanePoint& b) {
    if (auto c = a.re <=> b.re; c != 0) return c;
    return a.im <=> b.im;
  }

  std::string to_string() const { return re.to_string() + "+i" + im.to_string(); }
};

using PlaneVector = PlanePoint;

PlanePoint c_add(const PlanePoint& u, const PlanePoint& v);
PlanePoint c_sub(const PlanePoint& u, const PlanePoint& v);
PlanePoint conj(const PlanePoint& u);
PlanePoint c_mul(const AlgebraicContext& ctx, const PlanePoint& u, const PlanePoint& v);
PlanePoint c_scale(const AlgebraicContext& ctx, const AlgebraicInt& lambda, const PlanePoint& v);

/// b + i*alpha, whose argument is theta.
PlanePoint rotor(const AlgebraicContext& ctx);
/// v * (b + i*alpha): v turned counterclockwise by theta (and scaled).
PlaneVector rotate_theta(const AlgebraicContext& ctx, const PlaneVector& v);

/// Im(conj(u) v) and Re(conj(u) v).
AlgebraicInt cross(const AlgebraicContext& ctx, const PlaneVector& u, const PlaneVector& v);
AlgebraicInt dot(const AlgebraicContext& ctx, const PlaneVector& u, const PlaneVector& v);

/// sign(cross(u, v)) without temporaries.
int cross_sign(const AlgebraicContext& ctx, const PlaneVector& u, const PlaneVector& v);

enum class AngleMatch { none, theta_plus, theta_minus };

const char* to_string(AngleMatch m);

/// Does the angle between the nonzero vectors u and w equal theta?
/// theta_plus: w is u turned counterclockwise by theta; theta_minus: clockwise.
AngleMatch angle_between(const AlgebraicContext& ctx, const PlaneVector& u, const PlaneVector& w);

/// Angle at apex p in the triangle (p, q, r).
AngleMatch angle_at(const AlgebraicContext& ctx, const PlanePoint& p, const PlanePoint& q,
                    const PlanePoint& r);

}  // namespace angleforge
