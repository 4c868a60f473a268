#ifndef BHKIT_NORMS_HPP
#define BHKIT_NORMS_HPP

#include "bhkit/certified_max.hpp"
#include "bhkit/constants.hpp"
#include "bhkit/poly.hpp"
#include "bhkit/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bhkit {

inline constexpr double kIntervalTol = 1e-10;
inline constexpr double kDiskTol = 1e-8;

/// Roots of q' in [lo, hi]; empty when q is constant.
inline std::vector<double> critical_points(const UniPoly& q, double lo, double hi, double tol = kIntervalTol) {
  if (!(lo < hi)) throw std::invalid_argument("critical_points: empty interval");
  return isolate_roots(q.derivative(), lo, hi, tol);
}

/// max |q| on [lo, hi] over both endpoints and every critical point.
inline CertifiedMax sup_norm_interval(const UniPoly& q, double lo, double hi, double tol = kIntervalTol) {
  if (!(lo < hi)) throw std::invalid_argument("sup_norm_interval: empty interval");
  CertifiedMax best{lo, std::nullopt, std::fabs(q(lo)), 0.0, Method::sturm_newton};
  if (const double v = std::fabs(q(hi)); v > best.value) best = {hi, std::nullopt, v, 0.0, Method::sturm_newton};
  for (double x : critical_points(q, lo, hi, tol)) {
    const double v = std::fabs(q(x));
    if (v > best.value) best = {x, std::nullopt, v, 0.5 * tol, Method::sturm_newton};
  }
  return best;
}

/// Sup norm on [-1,1]^2. Homogeneity pushes the max to the boundary, and P(x,-1) = +-P(-x,1),
/// so the two edges y = 1 and x = 1 suffice.
template <typename T>
CertifiedMax sup_norm_square(const BasicHomPoly<T>& p, double tol = kIntervalTol) {
  if (p.is_zero()) throw std::domain_error("sup_norm_square of the zero polynomial");
  const HomPoly2 f = to_float(p);
  CertifiedMax horizontal = sup_norm_interval(dehomogenize(f, Edge::y_one), -1.0, 1.0, tol);
  horizontal.arg2 = 1.0;
  CertifiedMax vertical = sup_norm_interval(dehomogenize(f, Edge::x_one), -1.0, 1.0, tol);
  vertical.arg2 = vertical.arg;
  vertical.arg = 1.0;
  return vertical.value > horizontal.value ? vertical : horizontal;
}

namespace detail {

// Golden-section maximization of a unimodal function on [a, b].
template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 2.0 * tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    if (c >= d) break;
  }
  const double x = 0.5 * (a + b);
  return {x, 0.5 * (b - a)};
}

}  // namespace detail

/// max_{|z|,|w| <= 1} |a z^2 + b z w + c w^2|.
inline CertifiedMax sup_norm_disk_complex(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                                          double tol = kDiskTol) {
  // Rotate z and w so the outer coefficients become nonnegative reals.
  const double arg_a = std::abs(a) > 0.0 ? std::arg(a) : 0.0;
  const double arg_c = std::abs(c) > 0.0 ? std::arg(c) : 0.0;
  const double A = std::abs(a);
  const double C = std::abs(c);
  const std::complex<double> B = b * std::polar(1.0, -0.5 * (arg_a + arg_c));
  const double base = A * A + C * C + std::norm(B);
  const double k2 = A * C;
  const double k1 = (A + C) * B.real();
  const double s1 = (A - C) * B.imag();
  auto g = [&](double theta) {
    return base + 2.0 * (k2 * std::cos(2.0 * theta) + k1 * std::cos(theta) + s1 * std::sin(theta));
  };
  // |g'| <= lipschitz everywhere.
  const double lipschitz = 2.0 * (2.0 * k2 + std::fabs(k1) + std::fabs(s1));

  constexpr int kSamples = 4096;
  const double h = 2.0 * std::numbers::pi / kSamples;
  std::vector<double> samples(kSamples);
  for (int i = 0; i < kSamples; ++i) samples[i] = g(i * h);
  const int best_node = static_cast<int>(std::max_element(samples.begin(), samples.end()) - samples.begin());
  const double best_sample = samples[best_node];

  // Any cell holding the true max has a node within h/2 scoring >= best - L h / 2.
  std::vector<int> candidates{best_node};
  for (int i = 0; i < kSamples; ++i) {
    const double prev = samples[(i + kSamples - 1) % kSamples];
    const double next = samples[(i + 1) % kSamples];
    if (i != best_node && samples[i] >= prev && samples[i] > next && samples[i] >= best_sample - lipschitz * h)
      candidates.push_back(i);
  }
  std::sort(candidates.begin() + 1, candidates.end(),
            [&](int l, int r) { return samples[l] > samples[r] || (samples[l] == samples[r] && l < r); });
  if (candidates.size() > 8) candidates.resize(8);

  CertifiedMax out{best_node * h, std::nullopt, best_sample, h, Method::grid_refine};
  for (int node : candidates) {
    const auto [theta, radius] = detail::golden_max(g, node * h - h, node * h + h, tol);
    const double v = g(theta);
    if (v > out.value || (v == out.value && radius < out.radius)) out = {theta, std::nullopt, v, radius, Method::grid_refine};
  }
  out.arg = std::remainder(out.arg, 2.0 * std::numbers::pi);
  if (out.arg < 0.0) out.arg += 2.0 * std::numbers::pi;
  out.value = std::sqrt(std::max(out.value, 0.0));
  return out;
}

inline CertifiedMax sup_norm_disk_real(double a, double b, double c, double tol = kDiskTol) {
  return sup_norm_disk_complex({a, 0.0}, {b, 0.0}, {c, 0.0}, tol);
}

/// ||a x^3 + b x^2 y + b x y^2 + a y^3|| on the square, two-branch closed form.
inline double closed_norm_Pab(double a, double b) {
  if (a != 0.0) {
    const double ratio = b / a;
    if (constants::b1_radical() < ratio && ratio < constants::pab_upper_ratio()) {
      const double inner = -3.0 * ratio + ratio * ratio;
      return std::fabs(a - b * b / (3.0 * a) + 2.0 * b * b * b / (27.0 * a * a) +
                       (2.0 * a / 27.0) * std::pow(inner, 1.5));
    }
  }
  return std::fabs(2.0 * a + 2.0 * b);
}

namespace detail {

// x0 = sqrt((-3l - sqrt(9l^2 - 20)) / 10), the dominant critical point of x^5 + l x^3 + x.
inline double qlambda_x0(double lambda) {
  const double r = std::sqrt(std::max(0.0, 9.0 * lambda * lambda - 20.0));
  return std::sqrt((-3.0 * lambda - r) / 10.0);
}

// q(x0) = x0 (-3l^2 + 20 - l sqrt(9l^2 - 20)) / 25.
inline double qlambda_at_x0(double lambda) {
  const double r = std::sqrt(std::max(0.0, 9.0 * lambda * lambda - 20.0));
  return (-3.0 * lambda * lambda + 20.0 - lambda * r) / 25.0 * qlambda_x0(lambda);
}

}  // namespace detail

/// ||x^5 y + l x^3 y^3 + x y^5|| on the square.
inline double closed_norm_Qlambda(double lambda) {
  const double edge = std::fabs(2.0 + lambda);
  if (lambda > constants::qlambda_branch()) return edge;
  // Both sub-branches (x1 present or not) reduce to the same comparison with x0.
  return std::max(edge, std::fabs(detail::qlambda_at_x0(lambda)));
}

}  // namespace bhkit

#endif  // BHKIT_NORMS_HPP
