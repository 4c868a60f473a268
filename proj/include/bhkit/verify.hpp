#ifndef BHKIT_VERIFY_HPP
#define BHKIT_VERIFY_HPP

#include "bhkit/norms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bhkit {

// Scalar inequalities behind the complex-to-real reduction for quadratic forms on the bidisk.
// Each function must stay >= 1 (alone or in a max with its partners) on its triangle.

/// k with (a', k a', -a') sharing the l_{4/3} norm budget; k^{4/3} = 4 exactly.
inline double solve_k() { return 2.0 * std::sqrt(2.0); }

namespace detail {

inline constexpr double kOriginExclusion = 1e-9;

inline double p43(double v) { return std::pow(v, 4.0 / 3.0); }

inline void require_lower(double x, double y) {
  if (!(0.0 <= y && y <= x && x <= 1.0)) throw std::domain_error("expected 0 <= y <= x <= 1");
}

inline void require_upper(double x, double y) {
  if (!(0.0 <= x && x <= y && y <= 1.0)) throw std::domain_error("expected 0 <= x <= y <= 1");
}

inline void require_off_origin(double x, double y) {
  if (std::hypot(x, y) < kOriginExclusion) throw std::domain_error("undefined at the origin");
}

// (2 + k^{4/3})^{3/2} / (4 + k^2)
inline double k_factor(double k) { return std::pow(2.0 + p43(k), 1.5) / (4.0 + k * k); }

inline double two_term_denominator(double x, double y) { return std::sqrt(2.0) * std::pow(p43(x) + p43(y), 1.5); }

inline double three_term_power(double x, double y) { return std::pow(p43(x) + p43(y) + 1.0, 1.5); }

}  // namespace detail

/// Case a >= c >= |b|, normalized by a: x = c/a, y = |b|/a.
inline double case1_fn(double x, double y) {
  detail::require_lower(x, y);
  detail::require_off_origin(x, y);
  return (x * x + y * y + 2.0 * x) / detail::two_term_denominator(x, y);
}

inline double phi1_fn(double x, double y) {
  detail::require_upper(x, y);
  detail::require_off_origin(x, y);
  return (x * x + y * y + std::sqrt(2.0) * (1.0 - x) * y) / detail::two_term_denominator(x, y);
}

inline double psi1_fn(double x, double y, double k = solve_k()) {
  detail::require_upper(x, y);
  return (1.0 + x * x + y * y + 2.0 * y * x) * detail::k_factor(k) / detail::three_term_power(x, y);
}

inline double phi2_fn(double x, double y, double k = solve_k()) {
  detail::require_upper(x, y);
  return (1.0 + x * x + y * y + 2.0 * x * y) * detail::k_factor(k) / detail::three_term_power(x, y);
}

inline double psi2_fn(double x, double y, double k = solve_k()) {
  detail::require_upper(x, y);
  return (1.0 + x * x + y * y + std::sqrt(2.0) * (y - x)) * detail::k_factor(k) / detail::three_term_power(x, y);
}

inline double omega1_fn(double x, double y) {
  detail::require_upper(x, y);
  detail::require_off_origin(x, y);
  const double d = y - x;
  return (x * x + y * y + 2.0 * x * y * (1.0 - 2.0 * d * d) + std::sqrt(2.0) * d * d) /
         detail::two_term_denominator(x, y);
}

inline double omega2_fn(double x, double y) {
  detail::require_upper(x, y);
  detail::require_off_origin(x, y);
  const double d = y - x;
  return (x * x + y * y + 2.0 * x * y * (1.0 - 2.0 * d * d) + std::sqrt(2.0) * (y + x) * std::sqrt(1.0 - d * d)) /
         detail::two_term_denominator(x, y);
}

enum class Region { lower_triangle, upper_triangle };

inline const char* to_string(Region r) { return r == Region::lower_triangle ? "lower-triangle" : "upper-triangle"; }

inline bool in_region(Region r, double x, double y) {
  if (x < 0.0 || y < 0.0 || x > 1.0 || y > 1.0) return false;
  if (std::hypot(x, y) < detail::kOriginExclusion) return false;
  return r == Region::lower_triangle ? y <= x : x <= y;
}

using ScalarFn = std::function<double(double, double)>;

struct InequalitySuite {
  std::string id;
  Region region;
  std::vector<ScalarFn> fns;
};

struct InequalityReport {
  std::string suite;
  Region region = Region::lower_triangle;
  int grid_n = 0;
  double min_of_max = 0.0;
  double argmin_x = 0.0;
  double argmin_y = 0.0;
  double margin = 0.0;
  double refined_min = 0.0;  // local descent from the grid argmin; grid-independent estimate
  double refined_x = 0.0;
  double refined_y = 0.0;
  bool pass = false;
  bool tight = false;  // minimum within 1e-6 of 1
  std::optional<std::string> failure;
};

inline constexpr double kTightBand = 1e-6;

namespace detail {

struct NodeMin {
  double value = std::numeric_limits<double>::infinity();
  double x = 0.0;
  double y = 0.0;
  std::optional<std::string> failure;
};

inline double max_of(const std::vector<ScalarFn>& fns, double x, double y) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& f : fns) best = std::max(best, f(x, y));
  return best;
}

inline NodeMin scan_rows(const InequalitySuite& suite, int grid_n, int row_begin, int row_end) {
  NodeMin out;
  for (int i = row_begin; i < row_end; ++i) {
    const double x = static_cast<double>(i) / grid_n;
    for (int j = 0; j <= grid_n; ++j) {
      const double y = static_cast<double>(j) / grid_n;
      if (!in_region(suite.region, x, y)) continue;
      const double v = max_of(suite.fns, x, y);
      if (!std::isfinite(v)) {
        out.failure = "non-finite value at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
        return out;
      }
      if (v < out.value) out = {v, x, y, std::nullopt};
    }
  }
  return out;
}

// Compass search on the max of the suite, restricted to the region. The minima sit on kinks
// where two functions cross, so no derivatives are used.
inline NodeMin descend(const InequalitySuite& suite, NodeMin start, double step) {
  static constexpr double dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  while (step > 1e-13) {
    bool moved = false;
    for (const auto& d : dirs) {
      const double x = start.x + d[0] * step;
      const double y = start.y + d[1] * step;
      if (!in_region(suite.region, x, y)) continue;
      const double v = max_of(suite.fns, x, y);
      if (std::isfinite(v) && v < start.value) {
        start = {v, x, y, std::nullopt};
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return start;
}

}  // namespace detail

/// Min over grid nodes of max over the suite's functions. The margin is how far the function
/// dips below that node value inside the neighbouring cells, found by 4x subsampling and then
/// compass descent. Passes iff min - margin >= 1 - 1e-9.
inline InequalityReport certify_min_ge_one(const InequalitySuite& suite, int grid_n, int threads = 1) {
  if (grid_n < 64) throw std::invalid_argument("certify_min_ge_one requires grid_n >= 64");
  InequalityReport report;
  report.suite = suite.id;
  report.region = suite.region;
  report.grid_n = grid_n;

  const int rows = grid_n + 1;
  threads = std::clamp(threads, 1, rows);
  std::vector<detail::NodeMin> parts;
  if (threads == 1) {
    parts.push_back(detail::scan_rows(suite, grid_n, 0, rows));
  } else {
    std::vector<std::future<detail::NodeMin>> futures;
    const int chunk = (rows + threads - 1) / threads;
    for (int begin = 0; begin < rows; begin += chunk)
      futures.push_back(std::async(std::launch::async, detail::scan_rows, std::cref(suite), grid_n, begin,
                                   std::min(rows, begin + chunk)));
    for (auto& f : futures) parts.push_back(f.get());
  }
  // Reduce in row order so ties resolve identically for any thread count.
  detail::NodeMin best;
  for (const auto& part : parts) {
    if (part.failure) {
      report.failure = part.failure;
      report.pass = false;
      return report;
    }
    if (part.value < best.value) best = part;
  }

  const double h = 1.0 / grid_n;
  double sub_min = best.value;
  for (int a = -4; a <= 4; ++a) {
    for (int b = -4; b <= 4; ++b) {
      const double x = best.x + a * h / 4.0;
      const double y = best.y + b * h / 4.0;
      if (!in_region(suite.region, x, y)) continue;
      const double v = detail::max_of(suite.fns, x, y);
      if (!std::isfinite(v)) {
        report.failure = "non-finite value at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
        return report;
      }
      sub_min = std::min(sub_min, v);
    }
  }
  const detail::NodeMin refined = detail::descend(suite, best, h);
  sub_min = std::min(sub_min, refined.value);
  report.min_of_max = best.value;
  report.argmin_x = best.x;
  report.argmin_y = best.y;
  report.refined_min = refined.value;
  report.refined_x = refined.x;
  report.refined_y = refined.y;
  report.margin = std::max(0.0, best.value - sub_min);
  report.pass = report.min_of_max - report.margin >= 1.0 - 1e-9;
  report.tight = report.min_of_max - 1.0 < kTightBand;
  return report;
}

/// The four batteries: case 1, case 2, and case 3 split on |Im b| or |Re b| >= |b|/sqrt(2).
inline std::vector<InequalitySuite> lemma_suites(double k = solve_k()) {
  auto psi1 = [k](double x, double y) { return psi1_fn(x, y, k); };
  auto phi2 = [k](double x, double y) { return phi2_fn(x, y, k); };
  auto psi2 = [k](double x, double y) { return psi2_fn(x, y, k); };
  return {
      {"case1", Region::lower_triangle, {case1_fn}},
      {"case2", Region::upper_triangle, {phi1_fn, psi1}},
      {"case3-im", Region::upper_triangle, {phi2, psi2, omega1_fn}},
      {"case3-re", Region::upper_triangle, {phi2, psi2, omega2_fn}},
  };
}

// ---------------------------------------------------------------------------
// Real surrogates: for complex (a, b, c) produce real (a', b', c') with the same l_{4/3} norm and
// a sup norm on the bidisk no larger than that of the original.

struct RealTriple {
  double a;
  double b;
  double c;
};

inline double l43_norm(double a, double b, double c) {
  return std::pow(detail::p43(std::fabs(a)) + detail::p43(std::fabs(b)) + detail::p43(std::fabs(c)), 0.75);
}

enum class SurrogateCase { outer_dominant = 1, mixed = 2, middle_dominant = 3 };

struct Surrogate {
  SurrogateCase which;
  RealTriple triple;
  double real_norm;
};

/// Candidate real triples for the matching case; the smallest real sup norm is returned.
inline Surrogate real_surrogate(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                                double k = solve_k()) {
  double big = std::abs(a);
  double small = std::abs(c);
  if (big < small) std::swap(big, small);
  const double mid = std::abs(b);
  const double kk = detail::p43(k);

  auto pair_form = [](double u, double v, double middle) {
    const double ap = std::pow(detail::p43(u) + detail::p43(v), 0.75) / std::pow(2.0, 0.75);
    return RealTriple{ap, middle, -ap};
  };
  auto k_form = [&] {
    const double ap = std::pow(detail::p43(big) + detail::p43(small) + detail::p43(mid), 0.75) / std::pow(2.0 + kk, 0.75);
    return RealTriple{ap, k * ap, -ap};
  };

  SurrogateCase which;
  std::vector<RealTriple> candidates;
  if (small >= mid) {
    which = SurrogateCase::outer_dominant;
    candidates = {pair_form(small, mid, big)};
  } else if (big >= mid) {
    which = SurrogateCase::mixed;
    candidates = {pair_form(small, mid, big), k_form()};
  } else {
    which = SurrogateCase::middle_dominant;
    candidates = {k_form(), pair_form(big, small, mid)};
  }
  Surrogate best{which, candidates.front(), std::numeric_limits<double>::infinity()};
  for (const auto& t : candidates) {
    const double n = sup_norm_disk_real(t.a, t.b, t.c).value;
    if (n < best.real_norm) best = {which, t, n};
  }
  return best;
}

}  // namespace bhkit

#endif  // BHKIT_VERIFY_HPP
