// SPDX-License-Identifier: Apache-2.0

#include "angleforge/planar.hpp"

#include <algorithm>

#include "angleforge/errors.hpp"

namespace angleforge {

BigInt PlanePoint::g_norm() const { return std::max(re.infinity_norm(), im.infinity_norm()); }

PlanePoint c_add(const PlanePoint& u, const PlanePoint& v) { return {u.re + v.re, u.im + v.im}; }

PlanePoint c_sub(const PlanePoint& u, const PlanePoint& v) { return {u.re - v.re, u.im - v.im}; }

PlanePoint conj(const PlanePoint& u) { return {u.re, -u.im}; }

PlanePoint c_mul(const AlgebraicContext& ctx, const PlanePoint& u, const PlanePoint& v) {
  return {ctx.mul(u.re, v.re) - ctx.mul(u.im, v.im), ctx.mul(u.re, v.im) + ctx.mul(u.im, v.re)};
}

PlanePoint c_scale(const AlgebraicContext& ctx, const AlgebraicInt& lambda, const PlanePoint& v) {
  return {ctx.mul(lambda, v.re), ctx.mul(lambda, v.im)};
}

PlanePoint rotor(const AlgebraicContext& ctx) { return {ctx.constant(ctx.b()), ctx.alpha()}; }

PlaneVector rotate_theta(const AlgebraicContext& ctx, const PlaneVector& v) {
  if (v.is_zero()) throw std::invalid_argument("rotate_theta: zero vector");
  // (re + i im)(b + i alpha) = (b re - alpha im) + i (alpha re + b im)
  const BigInt& b = ctx.b();
  return {v.re * b - ctx.mul_alpha(v.im), ctx.mul_alpha(v.re) + v.im * b};
}

AlgebraicInt cross(const AlgebraicContext& ctx, const PlaneVector& u, const PlaneVector& v) {
  return ctx.mul(u.re, v.im) - ctx.mul(u.im, v.re);
}

AlgebraicInt dot(const AlgebraicContext& ctx, const PlaneVector& u, const PlaneVector& v) {
  return ctx.mul(u.re, v.re) + ctx.mul(u.im, v.im);
}

const char* to_string(AngleMatch m) {
  switch (m) {
    case AngleMatch::theta_plus: return "theta_plus";
    case AngleMatch::theta_minus: return "theta_minus";
    case AngleMatch::none: break;
  }
  return "none";
}

namespace {

// Per-thread buffers so the hot predicates do not allocate.
struct Scratch {
  std::vector<BigInt> prod, x, y, ax;
  BigInt tmp;
};

Scratch& scratch(std::size_t d) {
  thread_local Scratch s;
  if (s.x.size() != d) {
    s.prod.assign(2 * d - 1, BigInt());
    s.x.assign(d, BigInt());
    s.y.assign(d, BigInt());
    s.ax.assign(d, BigInt());
  }
  return s;
}

void accumulate(std::vector<BigInt>& prod, const AlgebraicInt& a, const AlgebraicInt& b, bool subtract) {
  const std::size_t d = a.degree();
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (subtract) {
        mpz_submul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      } else {
        mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      }
    }
  }
}

// re1*re2 + sign*im1*im2 style bilinear forms, reduced into out[0..d).
void bilinear_into(const AlgebraicContext& ctx, Scratch& s, const AlgebraicInt& a1, const AlgebraicInt& b1,
                   const AlgebraicInt& a2, const AlgebraicInt& b2, bool subtract, std::vector<BigInt>& out) {
  const std::size_t d = ctx.degree();
  if (a1.degree() != d || b1.degree() != d || a2.degree() != d || b2.degree() != d) {
    throw std::invalid_argument("AlgebraicInt: mismatched degree");
  }
  for (auto& c : s.prod) mpz_set_ui(c.get_mpz_t(), 0);
  accumulate(s.prod, a1, b1, false);
  accumulate(s.prod, a2, b2, subtract);
  const auto& red = ctx.reduction();
  for (std::size_t i = 2 * d - 1; i-- > d;) {
    if (sgn(s.prod[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      mpz_addmul(s.prod[i - d + j].get_mpz_t(), s.prod[i].get_mpz_t(), red[j].get_mpz_t());
    }
  }
  for (std::size_t k = 0; k < d; ++k) mpz_set(out[k].get_mpz_t(), s.prod[k].get_mpz_t());
}

}  // namespace

int cross_sign(const AlgebraicContext& ctx, const PlaneVector& u, const PlaneVector& v) {
  Scratch& s = scratch(ctx.degree());
  bilinear_into(ctx, s, u.re, v.im, u.im, v.re, true, s.y);
  return ctx.sign(std::span<const BigInt>(s.y));
}

AngleMatch angle_between(const AlgebraicContext& ctx, const PlaneVector& u, const PlaneVector& w) {
  // Z = w conj(u) = X + iY has argument arg(w) - arg(u). It points along
  // b + i alpha iff X alpha = Y b with Y > 0, along b - i alpha iff
  // X alpha = -Y b with Y < 0.
  const std::size_t d = ctx.degree();
  Scratch& s = scratch(d);
  bilinear_into(ctx, s, u.re, w.re, u.im, w.im, false, s.x);
  bilinear_into(ctx, s, u.re, w.im, u.im, w.re, true, s.y);

  const auto& red = ctx.reduction();
  if (d == 1) {
    mpz_mul(s.ax[0].get_mpz_t(), s.x[0].get_mpz_t(), red[0].get_mpz_t());
  } else {
    mpz_set_ui(s.ax[0].get_mpz_t(), 0);
    for (std::size_t k = 1; k < d; ++k) mpz_set(s.ax[k].get_mpz_t(), s.x[k - 1].get_mpz_t());
    for (std::size_t j = 0; j < d; ++j) {
      mpz_addmul(s.ax[j].get_mpz_t(), s.x[d - 1].get_mpz_t(), red[j].get_mpz_t());
    }
  }
  bool plus = true, minus = true;
  for (std::size_t k = 0; k < d && (plus || minus); ++k) {
    mpz_mul(s.tmp.get_mpz_t(), s.y[k].get_mpz_t(), ctx.b().get_mpz_t());
    const int c = mpz_cmp(s.ax[k].get_mpz_t(), s.tmp.get_mpz_t());
    plus = plus && c == 0;
    if (minus) {
      mpz_neg(s.tmp.get_mpz_t(), s.tmp.get_mpz_t());
      minus = mpz_cmp(s.ax[k].get_mpz_t(), s.tmp.get_mpz_t()) == 0;
    }
  }
  if (!plus && !minus) return AngleMatch::none;
  const int ys = ctx.sign(std::span<const BigInt>(s.y));
  if (plus && ys > 0) return AngleMatch::theta_plus;
  if (minus && ys < 0) return AngleMatch::theta_minus;
  return AngleMatch::none;
}

AngleMatch angle_at(const AlgebraicContext& ctx, const PlanePoint& p, const PlanePoint& q,
                    const PlanePoint& r) {
  if (p == q || p == r || q == r) throw InputError("angle_at: coincident points");
  return angle_between(ctx, c_sub(q, p), c_sub(r, p));
}

}  // namespace angleforge
