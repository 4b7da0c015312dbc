// SPDX-License-Identifier: Apache-2.0

#include "angleforge/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "angleforge/errors.hpp"

namespace angleforge {

namespace {

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rational(const IntPoly& p) {
  RatPoly r(p.begin(), p.end());
  trim(r);
  return r;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<unsigned long>(i));
  trim(r);
  return r;
}

// Remainder of a divided by b (b nonzero).
RatPoly remainder(RatPoly a, const RatPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int eval_sign(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

std::size_t sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = eval_sign(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

bool is_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  return std::all_of(s.begin() + from, s.begin() + to,
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::size_t degree(const IntPoly& p) {
  std::size_t n = p.size();
  while (n > 0 && p[n - 1] == 0) --n;
  return n == 0 ? 0 : n - 1;
}

Rational evaluate(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const IntPoly& p, const Rational& x) { return sgn(evaluate(p, x)); }

std::size_t count_roots(const IntPoly& p, const Rational& lo, const Rational& hi) {
  RatPoly p0 = to_rational(p);
  if (p0.size() < 2) return 0;
  std::vector<RatPoly> chain{p0, derivative(p0)};
  while (chain.back().size() > 1) {
    RatPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  const std::size_t vlo = sign_variations(chain, lo);
  const std::size_t vhi = sign_variations(chain, hi);
  return vlo >= vhi ? vlo - vhi : 0;
}

RationalInterval bisect_root(const IntPoly& p, RationalInterval iv, const Rational& width) {
  const int slo = sign_at(p, iv.lo);
  const int shi = sign_at(p, iv.hi);
  if (slo == 0 || shi == 0 || slo == shi) {
    throw InputError("bisect_root: no strict sign change across interval");
  }
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    const int sm = sign_at(p, mid);
    if (sm == 0) {
      // Exact rational root: the enclosure collapses to a point.
      iv.lo = mid;
      iv.hi = std::move(mid);
      return iv;
    }
    if (sm == slo) {
      iv.lo = std::move(mid);
    } else {
      iv.hi = std::move(mid);
    }
  }
  return iv;
}

BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (!is_digits(text, start, text.size())) {
    throw InputError("not an integer: '" + text + "'");
  }
  BigInt z;
  z.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return z;
}

Rational parse_rational(const std::string& raw) {
  std::string text = raw;
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
             text.end());
  if (text.empty()) throw InputError("empty rational");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + raw + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    const bool negative = text[0] == '-';
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    std::string whole = text.substr(start, dot - start);
    std::string frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!is_digits(whole, 0, whole.size()) || (!frac.empty() && !is_digits(frac, 0, frac.size()))) {
      throw InputError("not a rational: '" + raw + "'");
    }
    BigInt num(whole + frac, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(negative ? BigInt(-num) : num, den);
    q.canonicalize();
    return q;
  }
  return Rational(parse_bigint(text));
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const BigInt& z) { return z.get_str(10); }

}  // namespace angleforge
