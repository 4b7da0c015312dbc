// SPDX-License-Identifier: Apache-2.0

#include "angleforge/grids.hpp"

#include "angleforge/errors.hpp"

namespace angleforge {

BigInt box_size(std::size_t d, std::uint64_t t) {
  BigInt side = 2 * BigInt(static_cast<unsigned long>(t)) + 1;
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), side.get_mpz_t(), d);
  return r;
}

BigInt grid_size(std::size_t d, std::uint64_t t) {
  const BigInt k = box_size(d, t);
  return k * k;
}

namespace {

void check_limit(const BigInt& size, std::uint64_t limit, const char* what) {
  if (size > BigInt(static_cast<unsigned long>(limit))) {
    throw BudgetExceeded(std::string(what) + ": " + size.get_str() + " elements exceed the limit of " +
                         std::to_string(limit));
  }
}

}  // namespace

std::vector<AlgebraicInt> gen_K(const AlgebraicContext& ctx, std::uint64_t t, std::uint64_t limit) {
  const std::size_t d = ctx.degree();
  check_limit(box_size(d, t), limit, "gen_K");
  const long bound = static_cast<long>(t);
  std::vector<AlgebraicInt> out;
  out.reserve(box_size(d, t).get_ui());
  std::vector<long> digits(d, -bound);
  for (;;) {
    std::vector<BigInt> coeffs(digits.begin(), digits.end());
    out.emplace_back(std::move(coeffs));
    // Odometer, last coordinate fastest.
    std::size_t k = d;
    while (k > 0 && digits[k - 1] == bound) {
      digits[k - 1] = -bound;
      --k;
    }
    if (k == 0) break;
    ++digits[k - 1];
  }
  return out;
}

std::vector<PlanePoint> gen_G(const AlgebraicContext& ctx, std::uint64_t t, std::uint64_t limit) {
  check_limit(grid_size(ctx.degree(), t), limit, "gen_G");
  const auto box = gen_K(ctx, t, limit);
  std::vector<PlanePoint> out;
  out.reserve(box.size() * box.size());
  for (const auto& re : box) {
    for (const auto& im : box) out.push_back({re, im});
  }
  return out;
}

std::vector<AlgebraicInt> positive_K(const AlgebraicContext& ctx, std::uint64_t t, std::uint64_t limit) {
  std::vector<AlgebraicInt> out;
  for (auto& x : gen_K(ctx, t, limit)) {
    if (ctx.sign(x) > 0) out.push_back(std::move(x));
  }
  if (2 * out.size() + 1 != box_size(ctx.degree(), t)) {
    throw InvariantViolation("positive_K: positive elements are not half of K_t minus zero");
  }
  return out;
}

}  // namespace angleforge
