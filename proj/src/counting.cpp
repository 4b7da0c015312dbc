// SPDX-License-Identifier: Apache-2.0

#include "angleforge/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "angleforge/directions.hpp"
#include "angleforge/errors.hpp"
#include "angleforge/grids.hpp"

namespace angleforge {

const char* to_string(CountMethod m) { return m == CountMethod::brute ? "brute" : "fast"; }

namespace {

void require_distinct(std::span<const PlanePoint> points) {
  std::vector<const PlanePoint*> sorted;
  sorted.reserve(points.size());
  for (const auto& p : points) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (*sorted[i - 1] == *sorted[i]) throw InputError("duplicate point " + sorted[i]->to_string());
  }
}

std::vector<PlaneVector> differences(std::span<const PlanePoint> points, std::size_t apex) {
  std::vector<PlaneVector> out;
  out.reserve(points.size() - 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (j != apex) out.push_back(c_sub(points[j], points[apex]));
  }
  return out;
}

// Runs body(apex) for every apex on a small pool; rethrows the first failure.
template <typename Body>
void for_each_apex(std::size_t n, unsigned threads, Body&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

// Double-precision image (x, y) of a point or vector with absolute error
// bounds on each coordinate.
struct Approx {
  double x = 0, y = 0, ex = HUGE_VAL, ey = HUGE_VAL;
};

// A ray from the apex to points[index], optionally turned by theta, with its
// half plane and an approximate argument key in [0, 2 pi] whose error is at
// most key_err. The exact vector is built only when the doubles cannot decide.
struct KeyedRay {
  std::size_t index = 0;
  bool turned = false;
  int half = 0;
  double key = 0, key_err = HUGE_VAL;
  Approx a;
};

class RayFilter {
 public:
  RayFilter(const AlgebraicContext& ctx, std::span<const PlanePoint> points) : ctx_(ctx), points_(points) {
    alpha_ = std::strtod(ctx.to_decimal(ctx.alpha(), 30).c_str(), nullptr);
    double p = 1;
    for (std::size_t k = 0; k < ctx.degree(); ++k, p *= alpha_) powers_.push_back(p);
    if (mpz_sizeinbase(ctx.b().get_mpz_t(), 2) <= 52) b_ = ctx.b().get_d();
    approx_.reserve(points.size());
    for (const auto& q : points) {
      Approx a;
      approx(q.re, a.x, a.ex);
      approx(q.im, a.y, a.ey);
      approx_.push_back(a);
    }
    init_small();
  }

  KeyedRay ray(std::size_t apex, std::size_t index) const {
    KeyedRay r;
    r.index = index;
    const Approx& p = approx_[apex];
    const Approx& q = approx_[index];
    r.a.x = q.x - p.x;
    r.a.y = q.y - p.y;
    r.a.ex = q.ex + p.ex + std::fabs(r.a.x) * 0x1p-52;
    r.a.ey = q.ey + p.ey + std::fabs(r.a.y) * 0x1p-52;
    finish(apex, r);
    return r;
  }

  KeyedRay turn(std::size_t apex, const KeyedRay& r) const {
    KeyedRay t = r;
    t.turned = true;
    const Approx& v = r.a;
    const double da = std::fabs(alpha_) * 0x1p-50;
    const double bx = b_ * v.x, ay = alpha_ * v.y, ax = alpha_ * v.x, by = b_ * v.y;
    t.a.x = bx - ay;
    t.a.y = ax + by;
    t.a.ex = std::fabs(b_) * v.ex + (std::fabs(alpha_) + da) * v.ey + std::fabs(v.y) * da +
             (std::fabs(bx) + std::fabs(ay)) * 0x1p-51;
    t.a.ey = (std::fabs(alpha_) + da) * v.ex + std::fabs(b_) * v.ey + std::fabs(v.x) * da +
             (std::fabs(ax) + std::fabs(by)) * 0x1p-51;
    finish(apex, t);
    return t;
  }

  PlaneVector exact(std::size_t apex, const KeyedRay& r) const {
    PlaneVector v = c_sub(points_[r.index], points_[apex]);
    return r.turned ? rotate_theta(ctx_, v) : v;
  }

  /// Exact cross-product sign, decided from the doubles when possible.
  int cross(std::size_t apex, const KeyedRay& a, const KeyedRay& b) const {
    const double p = a.a.x * b.a.y, q = a.a.y * b.a.x;
    const double c = p - q;
    const double bound = 2 * ((std::fabs(a.a.x) + a.a.ex) * b.a.ey + std::fabs(b.a.y) * a.a.ex +
                              (std::fabs(a.a.y) + a.a.ey) * b.a.ex + std::fabs(b.a.x) * a.a.ey +
                              (std::fabs(p) + std::fabs(q)) * 0x1p-50);
    if (std::isfinite(bound) && std::fabs(c) > bound) return c > 0 ? 1 : -1;
    if (small_) {
      Wide cr[2 * kSmallDegree - 1];
      if (small_cross(apex, a, b, cr)) return 0;
    }
    return cross_sign(ctx_, exact(apex, a), exact(apex, b));
  }

 private:
  using Wide = __int128;
  static constexpr std::size_t kSmallDegree = 4;

  // Machine-integer coordinates are used for exact zero tests when every
  // intermediate of the cross product provably fits in 125 bits.
  void init_small() {
    const std::size_t d = ctx_.degree();
    if (d > kSmallDegree) return;
    double coef = 0;
    for (const auto& p : points_) coef = std::max(coef, p.g_norm().get_d());
    double red = 0;
    for (const auto& c : ctx_.reduction()) red = std::max(red, std::fabs(c.get_d()));
    const double diff = 2 * coef;
    const double turned = diff * (std::fabs(ctx_.b().get_d()) + 1 + red);
    const double product = 2 * static_cast<double>(d) * turned * turned * std::pow(1 + red, d - 1.0);
    if (!(product < 0x1p125)) return;
    coords_.reserve(points_.size() * 2 * d);
    for (const auto& p : points_) {
      for (const auto* part : {&p.re, &p.im})
        for (std::size_t k = 0; k < d; ++k) coords_.push_back((*part)[k].get_si());
    }
    red_.reserve(d);
    for (const auto& c : ctx_.reduction()) red_.push_back(c.get_si());
    b_small_ = ctx_.b().get_si();
    small_ = true;
  }

  // Coordinates of the ray's vector, real part then imaginary part.
  void small_vector(std::size_t apex, const KeyedRay& r, Wide* re, Wide* im) const {
    const std::size_t d = ctx_.degree();
    const std::int64_t* p = &coords_[apex * 2 * d];
    const std::int64_t* q = &coords_[r.index * 2 * d];
    for (std::size_t k = 0; k < d; ++k) {
      re[k] = Wide(q[k]) - p[k];
      im[k] = Wide(q[d + k]) - p[d + k];
    }
    if (!r.turned) return;
    // (re + i im)(b + i alpha) = (b re - alpha im) + i (alpha re + b im)
    Wide are[kSmallDegree], aim[kSmallDegree];
    times_alpha(re, are);
    times_alpha(im, aim);
    for (std::size_t k = 0; k < d; ++k) {
      const Wide x = re[k], y = im[k];
      re[k] = x * b_small_ - aim[k];
      im[k] = are[k] + y * b_small_;
    }
  }

  void times_alpha(const Wide* x, Wide* out) const {
    const std::size_t d = ctx_.degree();
    out[0] = 0;
    for (std::size_t k = 1; k < d; ++k) out[k] = x[k - 1];
    for (std::size_t j = 0; j < d; ++j) out[j] += x[d - 1] * red_[j];
  }

  // Writes the reduced cross product; returns true iff it is zero.
  bool small_cross(std::size_t apex, const KeyedRay& a, const KeyedRay& b, Wide* prod) const {
    const std::size_t d = ctx_.degree();
    Wide ure[kSmallDegree], uim[kSmallDegree], wre[kSmallDegree], wim[kSmallDegree];
    small_vector(apex, a, ure, uim);
    small_vector(apex, b, wre, wim);
    for (std::size_t k = 0; k < 2 * d - 1; ++k) prod[k] = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) prod[i + j] += ure[i] * wim[j] - uim[i] * wre[j];
    for (std::size_t i = 2 * d - 1; i-- > d;)
      for (std::size_t j = 0; j < d; ++j) prod[i - d + j] += prod[i] * red_[j];
    for (std::size_t k = 0; k < d; ++k)
      if (prod[k] != 0) return false;
    return true;
  }

  void approx(const AlgebraicInt& a, double& value, double& err) const {
    double sum = 0, mag = 0;
    for (std::size_t k = 0; k < powers_.size(); ++k) {
      if (mpz_sizeinbase(a[k].get_mpz_t(), 2) > 52) {
        value = 0;
        err = HUGE_VAL;
        return;
      }
      const double term = a[k].get_d() * powers_[k];
      sum += term;
      mag += std::fabs(term);
    }
    value = sum;
    // Rounding of alpha, of its powers and of the sum, with room to spare.
    err = mag * (4.0 * static_cast<double>(powers_.size()) + 8) * 0x1p-52;
  }

  void finish(std::size_t apex, KeyedRay& r) const {
    const Approx& v = r.a;
    if (std::isfinite(v.ey) && std::fabs(v.y) > 2 * v.ey) {
      r.half = v.y > 0 ? 0 : 1;
    } else {
      r.half = make_ray(ctx_, exact(apex, r)).half;
    }
    const double e = v.ex + v.ey;
    const double len = std::hypot(v.x, v.y);
    r.key = std::atan2(v.y, v.x);
    if (r.key < 0) r.key += 2 * kPi;
    // The exact half is authoritative: keys that wrapped past 0 / 2 pi come
    // back, the rest are clamped into the half's range.
    if (r.half == 0) {
      if (r.key > 1.5 * kPi) r.key -= 2 * kPi;
      r.key = std::clamp(r.key, 0.0, kPi);
    } else {
      if (r.key < 0.5 * kPi) r.key += 2 * kPi;
      r.key = std::clamp(r.key, kPi, 2 * kPi);
    }
    r.key_err = std::isfinite(e) && len > 4 * e ? 2 * e / (len - e) + 1e-13 : HUGE_VAL;
  }

  static constexpr double kPi = 3.14159265358979323846;

  const AlgebraicContext& ctx_;
  std::span<const PlanePoint> points_;
  double alpha_ = 0;
  double b_ = HUGE_VAL;
  std::vector<double> powers_;
  std::vector<Approx> approx_;
  bool small_ = false;
  std::vector<std::int64_t> coords_;
  std::vector<std::int64_t> red_;
  std::int64_t b_small_ = 0;
};

bool key_less(const KeyedRay& a, const KeyedRay& b) {
  return a.half != b.half ? a.half < b.half : a.key < b.key;
}

CountReport finish(std::vector<std::uint64_t> per_apex, CountMethod method,
                   std::chrono::steady_clock::time_point start) {
  CountReport report;
  report.method = method;
  report.total = 0;
  for (auto c : per_apex) report.total += BigInt(static_cast<unsigned long>(c));
  report.per_apex = std::move(per_apex);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace

CountReport count_brute(const AlgebraicContext& ctx, std::span<const PlanePoint> points,
                        const CountOptions& options) {
  if (points.size() > options.brute_limit) {
    throw BudgetExceeded("count_brute: " + std::to_string(points.size()) + " points exceed the limit of " +
                         std::to_string(options.brute_limit));
  }
  const auto start = std::chrono::steady_clock::now();
  require_distinct(points);
  std::vector<std::uint64_t> per_apex(points.size(), 0);
  for_each_apex(points.size(), options.threads, [&](std::size_t apex) {
    const auto rays = differences(points, apex);
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      for (std::size_t j = i + 1; j < rays.size(); ++j) {
        if (angle_between(ctx, rays[i], rays[j]) != AngleMatch::none) ++count;
      }
    }
    per_apex[apex] = count;
  });
  return finish(std::move(per_apex), CountMethod::brute, start);
}

CountReport count_fast(const AlgebraicContext& ctx, std::span<const PlanePoint> points,
                       const CountOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_distinct(points);
  const RayFilter filter(ctx, points);
  std::vector<std::uint64_t> per_apex(points.size(), 0);
  for_each_apex(points.size(), options.threads, [&](std::size_t apex) {
    std::vector<KeyedRay> rays;
    rays.reserve(points.size());
    double spread = 0;  // largest key error at this apex
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == apex) continue;
      rays.push_back(filter.ray(apex, j));
      spread = std::max(spread, rays.back().key_err);
    }
    std::sort(rays.begin(), rays.end(), key_less);

    // Keys further apart than 2 * spread are ordered correctly. Runs of
    // closer keys are re-sorted exactly, then equal rays collapse.
    auto exact_less = [&](const KeyedRay& a, const KeyedRay& b) {
      return a.half != b.half ? a.half < b.half : filter.cross(apex, a, b) > 0;
    };
    std::vector<KeyedRay> distinct;
    std::vector<std::uint64_t> mult;
    // Clusters as [first, last) ranges of `distinct` with their key span.
    struct Cluster {
      int half;
      double lo, hi;
      std::size_t first, last;
    };
    std::vector<Cluster> clusters;
    for (std::size_t lo = 0; lo < rays.size();) {
      std::size_t hi = lo + 1;
      while (hi < rays.size() && rays[hi].half == rays[hi - 1].half &&
             !(rays[hi].key - rays[hi - 1].key > 2 * spread)) {
        ++hi;
      }
      Cluster c{rays[lo].half, rays[lo].key, rays[hi - 1].key, distinct.size(), 0};
      if (hi - lo > 1) std::sort(rays.begin() + lo, rays.begin() + hi, exact_less);
      for (std::size_t i = lo; i < hi; ++i) {
        if (i > lo && filter.cross(apex, distinct.back(), rays[i]) == 0) {
          ++mult.back();
        } else {
          distinct.push_back(rays[i]);
          mult.push_back(1);
        }
      }
      c.last = distinct.size();
      clusters.push_back(c);
      lo = hi;
    }

    std::uint64_t count = 0;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      const KeyedRay target = filter.turn(apex, distinct[i]);
      const double window = 2 * std::max(spread, target.key_err);
      auto it = std::lower_bound(clusters.begin(), clusters.end(), target, [&](const Cluster& c, const KeyedRay& t) {
        return c.half != t.half ? c.half < t.half : c.hi < t.key - window;
      });
      bool found = false;
      for (; !found && it != clusters.end() && it->half == target.half && !(it->lo > target.key + window); ++it) {
        for (std::size_t j = it->first; j < it->last; ++j) {
          if (filter.cross(apex, distinct[j], target) == 0) {
            count += mult[i] * mult[j];
            found = true;
            break;
          }
        }
      }
    }
    per_apex[apex] = count;
  });
  return finish(std::move(per_apex), CountMethod::fast, start);
}

std::vector<SweepRow> sweep(const AlgebraicContext& ctx, const SweepOptions& options) {
  SweepSource source = options.source;
  if (source == SweepSource::automatic) {
    source = ctx.degree() == 1 ? SweepSource::grid : SweepSource::construction;
  }
  std::vector<SweepRow> rows;
  for (std::uint64_t t = options.t_min; t <= options.t_max; ++t) {
    SweepRow row;
    row.t = t;
    std::vector<PlanePoint> points;
    try {
      if (source == SweepSource::grid) {
        const std::uint64_t radius = options.grid_scale * t;
        const BigInt n = grid_size(ctx.degree(), radius);
        if (n > BigInt(static_cast<unsigned long>(options.point_budget))) {
          row.n = n.fits_ulong_p() ? n.get_ui() : 0;
          rows.push_back(row);
          continue;
        }
        points = gen_G(ctx, radius, options.construction.grid_limit);
      } else {
        points = generate(ctx, t, options.construction).points;
      }
    } catch (const BudgetExceeded&) {
      rows.push_back(row);
      continue;
    }
    row.n = points.size();
    if (row.n > options.point_budget) {
      rows.push_back(row);
      continue;
    }
    CountOptions count_options;
    count_options.threads = options.threads;
    const CountReport report = count_fast(ctx, points, count_options);
    const auto n = static_cast<long double>(row.n);
    row.triples = report.total;
    row.n2logn = n * n * std::log(n);
    row.ratio = row.n2logn > 0 ? static_cast<long double>(report.total.get_d()) / row.n2logn : 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "t,n,triples,n2logn,ratio\n";
  char buf[64];
  for (const auto& row : rows) {
    out << row.t << ',' << row.n << ',';
    if (!row.triples) {
      out << "skipped,,\n";
      continue;
    }
    out << row.triples->get_str() << ',';
    std::snprintf(buf, sizeof buf, "%.6Lf", row.n2logn);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.9Lg", row.ratio);
    out << buf << '\n';
  }
}

}  // namespace angleforge
