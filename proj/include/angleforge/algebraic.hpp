// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "angleforge/polynomial.hpp"

namespace angleforge {

/// An element of Z[alpha], stored as its coordinates a_0..a_{d-1} over the
/// power basis 1, alpha, ..., alpha^{d-1}. Because the minimal polynomial is
/// irreducible the representation is unique, so equality is exact.
class AlgebraicInt {
 public:
  AlgebraicInt() = default;
  explicit AlgebraicInt(std::size_t degree) : coeffs_(degree) {}
  explicit AlgebraicInt(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}

  static AlgebraicInt constant(std::size_t degree, const BigInt& c);

  std::size_t degree() const { return coeffs_.size(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t k) const { return coeffs_[k]; }
  BigInt& operator[](std::size_t k) { return coeffs_[k]; }

  bool is_zero() const;
  BigInt infinity_norm() const;
  /// Membership in K_t.
  bool in_box(const BigInt& t) const;

  AlgebraicInt& operator+=(const AlgebraicInt& y);
  AlgebraicInt& operator-=(const AlgebraicInt& y);
  AlgebraicInt& operator*=(const BigInt& s);

  friend AlgebraicInt operator+(AlgebraicInt x, const AlgebraicInt& y) { return x += y; }
  friend AlgebraicInt operator-(AlgebraicInt x, const AlgebraicInt& y) { return x -= y; }
  friend AlgebraicInt operator*(AlgebraicInt x, const BigInt& s) { return x *= s; }
  friend AlgebraicInt operator-(AlgebraicInt x);

  friend bool operator==(const AlgebraicInt& x, const AlgebraicInt& y);
  /// Lexicographic on coordinates, a_0 first. Not the numeric order.
  friend std::strong_ordering operator<=>(const AlgebraicInt& x, const AlgebraicInt& y);

  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;
};

inline AlgebraicInt add(const AlgebraicInt& x, const AlgebraicInt& y) { return x + y; }
inline AlgebraicInt neg(const AlgebraicInt& x) { return -x; }
inline BigInt infinity_norm(const AlgebraicInt& x) { return x.infinity_norm(); }

struct ContextOptions {
  /// Accept b = 0 (theta = pi/2). Off by default.
  bool allow_right_angle = false;
};

/// Result of rewriting tan(theta) = alpha / b with alpha a positive algebraic
/// integer.
struct NormalizedTangent {
  IntPoly minpoly;  // monic, constant term first
  BigInt b;
  RationalInterval iso;
};

/// Given p(tan theta) = 0 with the root isolated by `root_interval`, produce
/// q(y) = s^{d-1} p(y/s) (made monic) with s = +-lc(p) chosen so that
/// alpha = s tan(theta) > 0, and b = s.
NormalizedTangent normalize_tangent(const IntPoly& p, const RationalInterval& root_interval);

/// The arithmetic universe of the angle: alpha with its minimal polynomial,
/// the integer b with tan(theta) = alpha / b, a verified isolating interval
/// for alpha and the growth constants C1, C2, C3.
///
/// Immutable after creation and cheap to copy (shared state). Sign
/// determination uses precomputed rational enclosures of alpha^j, so the
/// object can be shared freely between threads.
class AlgebraicContext {
 public:
  static AlgebraicContext create(const IntPoly& minpoly, const BigInt& b,
                                 const RationalInterval& iso, ContextOptions options = {});

  std::size_t degree() const;
  const IntPoly& minpoly() const;
  /// c_0..c_{d-1} with alpha^d = sum c_j alpha^j.
  const std::vector<BigInt>& reduction() const;
  const BigInt& b() const;
  const RationalInterval& iso() const;
  const BigInt& c1() const;
  const BigInt& c2() const;
  const BigInt& c3() const;
  /// Infinity norm of b + i*alpha as a point of G, i.e. max(|b|, |alpha|_inf).
  const BigInt& rotor_norm() const;
  /// Non-fatal diagnostics raised at creation (e.g. a rational root of the
  /// supposedly irreducible minimal polynomial).
  const std::vector<std::string>& warnings() const;

  AlgebraicInt zero() const;
  AlgebraicInt one() const;
  AlgebraicInt alpha() const;
  AlgebraicInt constant(const BigInt& c) const;
  AlgebraicInt element(std::vector<BigInt> coeffs) const;

  AlgebraicInt mul(const AlgebraicInt& x, const AlgebraicInt& y) const;
  AlgebraicInt mul_alpha(const AlgebraicInt& x) const;

  /// Exact sign of sum a_k alpha^k.
  int sign(const AlgebraicInt& x) const;
  /// Same, on raw coordinates (length d); used by allocation-free predicates.
  int sign(std::span<const BigInt> coeffs) const;

  /// Rigorous enclosure lo <= x * 2^bits <= hi with integer endpoints.
  void enclose(const AlgebraicInt& x, unsigned bits, BigInt& lo, BigInt& hi) const;

  /// Decimal rendering of the real value of x, accurate to `digits`
  /// significant digits (plotting only).
  std::string to_decimal(const AlgebraicInt& x, int digits = 30) const;

  bool operator==(const AlgebraicContext& other) const;

 private:
  struct Impl;
  explicit AlgebraicContext(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  void check_degree(const AlgebraicInt& x) const;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace angleforge
