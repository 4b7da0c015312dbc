// SPDX-License-Identifier: Apache-2.0

#include "angleforge/algebraic.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "angleforge/errors.hpp"

namespace angleforge {

// ---------------------------------------------------------------------------
// AlgebraicInt

AlgebraicInt AlgebraicInt::constant(std::size_t degree, const BigInt& c) {
  AlgebraicInt x(degree);
  if (degree > 0) x.coeffs_[0] = c;
  return x;
}

bool AlgebraicInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& a) { return sgn(a) == 0; });
}

BigInt AlgebraicInt::infinity_norm() const {
  BigInt m = 0;
  for (const auto& a : coeffs_) {
    if (mpz_cmpabs(a.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(a);
  }
  return m;
}

bool AlgebraicInt::in_box(const BigInt& t) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const BigInt& a) { return mpz_cmpabs(a.get_mpz_t(), t.get_mpz_t()) <= 0; });
}

AlgebraicInt& AlgebraicInt::operator+=(const AlgebraicInt& y) {
  if (y.degree() != degree()) throw std::invalid_argument("AlgebraicInt: mismatched degree");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += y.coeffs_[k];
  return *this;
}

AlgebraicInt& AlgebraicInt::operator-=(const AlgebraicInt& y) {
  if (y.degree() != degree()) throw std::invalid_argument("AlgebraicInt: mismatched degree");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= y.coeffs_[k];
  return *this;
}

AlgebraicInt& AlgebraicInt::operator*=(const BigInt& s) {
  for (auto& a : coeffs_) a *= s;
  return *this;
}

AlgebraicInt operator-(AlgebraicInt x) {
  for (auto& a : x.coeffs_) a = -a;
  return x;
}

bool operator==(const AlgebraicInt& x, const AlgebraicInt& y) {
  if (x.degree() != y.degree()) return false;
  for (std::size_t k = 0; k < x.degree(); ++k) {
    if (cmp(x.coeffs_[k], y.coeffs_[k]) != 0) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const AlgebraicInt& x, const AlgebraicInt& y) {
  if (x.degree() != y.degree()) return x.degree() <=> y.degree();
  for (std::size_t k = 0; k < x.degree(); ++k) {
    const int c = cmp(x.coeffs_[k], y.coeffs_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string AlgebraicInt::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) s += ",";
    s += coeffs_[k].get_str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// normalize_tangent

NormalizedTangent normalize_tangent(const IntPoly& p, const RationalInterval& root_interval) {
  if (p.size() < 2) throw InputError("normalize_tangent: polynomial degree must be at least 1");
  if (p.back() == 0) throw InputError("normalize_tangent: zero leading coefficient");
  const std::size_t d = p.size() - 1;

  RationalInterval iv = root_interval;
  if (iv.lo >= iv.hi) throw InputError("normalize_tangent: empty root interval");
  const int slo = sign_at(p, iv.lo);
  const int shi = sign_at(p, iv.hi);
  if (slo == 0 || shi == 0 || slo == shi || count_roots(p, iv.lo, iv.hi) != 1) {
    throw InputError("normalize_tangent: interval does not isolate a single root by sign change");
  }
  if (iv.lo < 0 && iv.hi > 0) {
    const int s0 = sign_at(p, Rational(0));
    if (s0 == 0) throw InputError("normalize_tangent: isolated root is tan(theta) = 0");
    if (s0 == slo) {
      iv.lo = 0;
    } else {
      iv.hi = 0;
    }
  }
  // The root is nonzero; move any endpoint sitting on zero off it.
  while (iv.lo == 0 || iv.hi == 0) {
    iv = bisect_root(p, iv, (iv.hi - iv.lo) / 2);
    if (iv.lo == iv.hi) {
      if (d > 1) throw InputError("normalize_tangent: rational root of a polynomial of degree > 1");
      const Rational r = iv.lo;
      iv = {r - abs(r) / 2, r + abs(r) / 2};
    }
  }
  const int root_sign = iv.lo > 0 ? 1 : -1;

  const BigInt& lead = p.back();
  const BigInt s = root_sign * abs(lead);
  const int eps = sgn(lead) * sgn(s);  // lead / s

  NormalizedTangent out;
  out.minpoly.resize(d + 1);
  BigInt power = 1;  // s^{d-1-i}, built from i = d-1 downwards
  for (std::size_t i = d; i-- > 0;) {
    out.minpoly[i] = eps * p[i] * power;
    power *= s;
  }
  out.minpoly[d] = 1;
  out.b = s;
  Rational a = iv.lo * s;
  Rational c = iv.hi * s;
  if (a > c) std::swap(a, c);
  out.iso = {a, c};
  return out;
}

// ---------------------------------------------------------------------------
// AlgebraicContext

namespace {

// Integer bounds lo[j] <= alpha^j * 2^bits <= hi[j].
struct PowerBounds {
  unsigned bits = 0;
  std::vector<BigInt> lo, hi;
};

constexpr unsigned kFirstLevelBits = 64;
constexpr unsigned kCachedLevels = 5;  // 64 .. 1024 bits

BigInt floor_scaled(const Rational& q, unsigned bits) {
  BigInt num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

BigInt ceil_scaled(const Rational& q, unsigned bits) {
  BigInt num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

// Refines `iv` in place and returns the power bounds at the given precision.
PowerBounds make_level(const IntPoly& minpoly, std::size_t d, RationalInterval& iv, unsigned bits) {
  if (iv.lo != iv.hi) {
    BigInt hi_int;
    mpz_cdiv_q(hi_int.get_mpz_t(), iv.hi.get_num_mpz_t(), iv.hi.get_den_mpz_t());
    const unsigned slack = static_cast<unsigned>(d * (mpz_sizeinbase(hi_int.get_mpz_t(), 2) + 1) + 8);
    Rational width(1);
    mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), bits + slack);
    iv = bisect_root(minpoly, iv, width);
  }
  PowerBounds level;
  level.bits = bits;
  Rational plo(1), phi(1);
  for (std::size_t j = 0; j < d; ++j) {
    level.lo.push_back(floor_scaled(plo, bits));
    level.hi.push_back(ceil_scaled(phi, bits));
    plo *= iv.lo;
    phi *= iv.hi;
  }
  return level;
}

void enclose_with(const PowerBounds& level, std::span<const BigInt> x, BigInt& lo, BigInt& hi) {
  lo = 0;
  hi = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const BigInt& a = x[k];
    const int s = sgn(a);
    if (s == 0) continue;
    const BigInt& small = level.lo[k];
    const BigInt& large = level.hi[k];
    mpz_addmul(lo.get_mpz_t(), a.get_mpz_t(), (s > 0 ? small : large).get_mpz_t());
    mpz_addmul(hi.get_mpz_t(), a.get_mpz_t(), (s > 0 ? large : small).get_mpz_t());
  }
}

std::vector<std::string> rational_root_warnings(const IntPoly& q) {
  std::vector<std::string> out;
  const std::size_t d = q.size() - 1;
  if (d < 2) return out;
  const BigInt& q0 = q[0];
  if (q0 == 0) {
    out.push_back("minimal polynomial has the rational root 0; it is reducible and the zero test is unsound");
    return out;
  }
  const BigInt limit = 1000000;
  if (abs(q0) > limit) {
    out.push_back("rational-root sanity check skipped: constant term exceeds 10^6");
    return out;
  }
  const unsigned long n = BigInt(abs(q0)).get_ui();
  for (unsigned long r = 1; r <= n; ++r) {
    if (n % r != 0) continue;
    for (long sign : {1L, -1L}) {
      const Rational x(BigInt(sign) * BigInt(r));
      if (evaluate(q, x) == 0) {
        out.push_back("minimal polynomial has the rational root " + to_string(x) +
                      "; it is reducible and the zero test is unsound");
      }
    }
  }
  return out;
}

}  // namespace

struct AlgebraicContext::Impl {
  std::size_t d = 0;
  IntPoly minpoly;
  std::vector<BigInt> reduction;
  BigInt b;
  RationalInterval iso;
  BigInt c1, c2, c3, rotor_norm;
  std::vector<std::string> warnings;
  AlgebraicInt alpha;
  std::vector<PowerBounds> levels;
  RationalInterval narrowest;  // enclosure used for the last cached level
};

AlgebraicContext AlgebraicContext::create(const IntPoly& minpoly, const BigInt& b,
                                          const RationalInterval& iso, ContextOptions options) {
  if (minpoly.size() < 2) throw InputError("context: minimal polynomial degree must be at least 1");
  if (minpoly.back() != 1) throw InputError("context: minimal polynomial must be monic");
  if (iso.lo <= 0) throw InputError("context: isolating interval must be positive (alpha > 0)");
  if (iso.lo >= iso.hi) throw InputError("context: isolating interval is empty");
  {
    const int slo = sign_at(minpoly, iso.lo);
    const int shi = sign_at(minpoly, iso.hi);
    if (slo == 0 || shi == 0 || slo == shi) {
      throw InputError("context: minimal polynomial has no sign change across the isolating interval");
    }
    if (count_roots(minpoly, iso.lo, iso.hi) != 1) {
      throw InputError("context: isolating interval contains more than one root");
    }
  }
  if (b == 0 && !options.allow_right_angle) {
    throw InputError("context: b = 0 (right angle) is disabled; enable allow_right_angle");
  }

  auto impl = std::make_shared<Impl>();
  const std::size_t d = minpoly.size() - 1;
  impl->d = d;
  impl->minpoly = minpoly;
  impl->b = b;
  impl->iso = iso;
  BigInt cmax = 0;
  for (std::size_t j = 0; j < d; ++j) {
    impl->reduction.push_back(-minpoly[j]);
    if (abs(minpoly[j]) > cmax) cmax = abs(minpoly[j]);
  }
  impl->c1 = cmax + 1;
  BigInt c1pow;
  mpz_pow_ui(c1pow.get_mpz_t(), impl->c1.get_mpz_t(), d - 1);
  impl->c2 = BigInt(2 * d) * c1pow;
  BigInt base = 4 * abs(b) * impl->c2 * impl->c2 + 3;
  mpz_pow_ui(impl->c3.get_mpz_t(), base.get_mpz_t(), 2 * d);
  impl->warnings = rational_root_warnings(minpoly);

  if (d == 1) {
    impl->alpha = AlgebraicInt::constant(1, impl->reduction[0]);
  } else {
    impl->alpha = AlgebraicInt(d);
    impl->alpha[1] = 1;
  }
  impl->rotor_norm = std::max(BigInt(abs(b)), impl->alpha.infinity_norm());

  impl->narrowest = iso;
  unsigned bits = kFirstLevelBits;
  for (unsigned i = 0; i < kCachedLevels; ++i, bits *= 2) {
    impl->levels.push_back(make_level(minpoly, d, impl->narrowest, bits));
  }
  return AlgebraicContext(std::move(impl));
}

std::size_t AlgebraicContext::degree() const { return impl_->d; }
const IntPoly& AlgebraicContext::minpoly() const { return impl_->minpoly; }
const std::vector<BigInt>& AlgebraicContext::reduction() const { return impl_->reduction; }
const BigInt& AlgebraicContext::b() const { return impl_->b; }
const RationalInterval& AlgebraicContext::iso() const { return impl_->iso; }
const BigInt& AlgebraicContext::c1() const { return impl_->c1; }
const BigInt& AlgebraicContext::c2() const { return impl_->c2; }
const BigInt& AlgebraicContext::c3() const { return impl_->c3; }
const BigInt& AlgebraicContext::rotor_norm() const { return impl_->rotor_norm; }
const std::vector<std::string>& AlgebraicContext::warnings() const { return impl_->warnings; }

AlgebraicInt AlgebraicContext::zero() const { return AlgebraicInt(impl_->d); }
AlgebraicInt AlgebraicContext::one() const { return AlgebraicInt::constant(impl_->d, 1); }
AlgebraicInt AlgebraicContext::alpha() const { return impl_->alpha; }
AlgebraicInt AlgebraicContext::constant(const BigInt& c) const {
  return AlgebraicInt::constant(impl_->d, c);
}

AlgebraicInt AlgebraicContext::element(std::vector<BigInt> coeffs) const {
  if (coeffs.size() != impl_->d) throw std::invalid_argument("AlgebraicInt: mismatched degree");
  return AlgebraicInt(std::move(coeffs));
}

void AlgebraicContext::check_degree(const AlgebraicInt& x) const {
  if (x.degree() != impl_->d) throw std::invalid_argument("AlgebraicInt: mismatched degree");
}

AlgebraicInt AlgebraicContext::mul(const AlgebraicInt& x, const AlgebraicInt& y) const {
  check_degree(x);
  check_degree(y);
  const std::size_t d = impl_->d;
  std::vector<BigInt> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  // alpha^i = alpha^{i-d} * (c_0 + ... + c_{d-1} alpha^{d-1}), from the top down.
  for (std::size_t i = 2 * d - 1; i-- > d;) {
    if (sgn(prod[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      mpz_addmul(prod[i - d + j].get_mpz_t(), prod[i].get_mpz_t(), impl_->reduction[j].get_mpz_t());
    }
  }
  prod.resize(d);
  return AlgebraicInt(std::move(prod));
}

AlgebraicInt AlgebraicContext::mul_alpha(const AlgebraicInt& x) const {
  check_degree(x);
  const std::size_t d = impl_->d;
  if (d == 1) return x * impl_->reduction[0];
  std::vector<BigInt> r(d);
  for (std::size_t k = 1; k < d; ++k) r[k] = x[k - 1];
  const BigInt& top = x[d - 1];
  if (sgn(top) != 0) {
    for (std::size_t j = 0; j < d; ++j) {
      mpz_addmul(r[j].get_mpz_t(), top.get_mpz_t(), impl_->reduction[j].get_mpz_t());
    }
  }
  return AlgebraicInt(std::move(r));
}

int AlgebraicContext::sign(const AlgebraicInt& x) const {
  check_degree(x);
  return sign(std::span<const BigInt>(x.coeffs()));
}

int AlgebraicContext::sign(std::span<const BigInt> x) const {
  if (x.size() != impl_->d) throw std::invalid_argument("AlgebraicInt: mismatched degree");
  // alpha > 0, so every basis element is positive: agreeing coordinate signs decide.
  bool pos = false, negv = false;
  for (const auto& a : x) {
    const int s = sgn(a);
    pos |= s > 0;
    negv |= s < 0;
  }
  if (!pos && !negv) return 0;
  if (!negv) return 1;
  if (!pos) return -1;

  thread_local BigInt lo, hi;
  for (const auto& level : impl_->levels) {
    enclose_with(level, x, lo, hi);
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
  // Beyond the cached precision: keep refining locally. Terminates because x
  // is nonzero and the enclosure width shrinks geometrically.
  RationalInterval iv = impl_->narrowest;
  unsigned bits = impl_->levels.back().bits;
  for (;;) {
    bits *= 2;
    const PowerBounds level = make_level(impl_->minpoly, impl_->d, iv, bits);
    enclose_with(level, x, lo, hi);
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
}

void AlgebraicContext::enclose(const AlgebraicInt& x, unsigned bits, BigInt& lo, BigInt& hi) const {
  check_degree(x);
  for (const auto& level : impl_->levels) {
    if (level.bits == bits) {
      enclose_with(level, x.coeffs(), lo, hi);
      return;
    }
  }
  RationalInterval iv = impl_->narrowest;
  enclose_with(make_level(impl_->minpoly, impl_->d, iv, bits), x.coeffs(), lo, hi);
}

std::string AlgebraicContext::to_decimal(const AlgebraicInt& x, int digits) const {
  constexpr unsigned bits = 256;
  BigInt lo, hi;
  enclose(x, bits, lo, hi);
  mpf_class mid(0, 2 * bits);
  mid = lo + hi;
  mpf_div_2exp(mid.get_mpf_t(), mid.get_mpf_t(), bits + 1);
  char buf[256];
  gmp_snprintf(buf, sizeof buf, "%.*Fg", digits, mid.get_mpf_t());
  return buf;
}

bool AlgebraicContext::operator==(const AlgebraicContext& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->minpoly == other.impl_->minpoly && impl_->b == other.impl_->b &&
         impl_->iso.lo == other.impl_->iso.lo && impl_->iso.hi == other.impl_->iso.hi;
}

}  // namespace angleforge
