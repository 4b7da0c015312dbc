// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace angleforge {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense integer polynomial, coefficients from the constant term upwards.
/// The last entry is the leading coefficient.
using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<Rational>;

struct RationalInterval {
  Rational lo;
  Rational hi;
};

/// Degree of p; trailing zero coefficients are an error for callers that care.
std::size_t degree(const IntPoly& p);

Rational evaluate(const IntPoly& p, const Rational& x);
int sign_at(const IntPoly& p, const Rational& x);

/// Number of distinct real roots of p in the half-open interval (lo, hi],
/// computed with a Sturm sequence over the rationals.
std::size_t count_roots(const IntPoly& p, const Rational& lo, const Rational& hi);

/// Narrow [lo, hi] by bisection until hi - lo <= width. Requires a strict
/// sign change of p across the interval. If a bisection point is an exact
/// root the returned interval is that single point.
RationalInterval bisect_root(const IntPoly& p, RationalInterval iv, const Rational& width);

/// Parses "p/q", an integer, or a finite decimal such as "-0.75".
Rational parse_rational(const std::string& text);
BigInt parse_bigint(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

}  // namespace angleforge
