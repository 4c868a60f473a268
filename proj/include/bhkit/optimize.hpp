#ifndef BHKIT_OPTIMIZE_HPP
#define BHKIT_OPTIMIZE_HPP

#include "bhkit/certified_max.hpp"
#include "bhkit/errors.hpp"
#include "bhkit/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace bhkit {

struct Bracket {
  double lo;
  double hi;
  double tol = 1e-10;

  Bracket(double lo_, double hi_, double tol_ = 1e-10) : lo(lo_), hi(hi_), tol(tol_) {
    if (!(lo < hi)) throw std::invalid_argument("bracket requires lo < hi");
    if (!(tol > 0.0)) throw std::invalid_argument("bracket requires tol > 0");
  }
};

using Objective = std::function<double(double)>;

inline constexpr int kDefaultGrid = 1024;

namespace detail {

inline double checked(const Objective& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) throw EvaluationError("objective is not finite at x = " + std::to_string(x));
  return v;
}

}  // namespace detail

/// Grid scan to localize, then golden-section refinement of the best few local maxima.
inline CertifiedMax maximize_1d(const Objective& f, const Bracket& bracket, int grid = kDefaultGrid) {
  grid = std::max(grid, kDefaultGrid);
  const double step = (bracket.hi - bracket.lo) / (grid - 1);
  std::vector<double> xs(grid);
  std::vector<double> vs(grid);
  for (int i = 0; i < grid; ++i) {
    xs[i] = i == grid - 1 ? bracket.hi : bracket.lo + i * step;
    vs[i] = detail::checked(f, xs[i]);
  }

  std::vector<int> peaks;
  for (int i = 0; i < grid; ++i) {
    const bool left_ok = i == 0 || vs[i] >= vs[i - 1];
    const bool right_ok = i == grid - 1 || vs[i] > vs[i + 1];
    if (left_ok && right_ok) peaks.push_back(i);
  }
  const int best_node = static_cast<int>(std::max_element(vs.begin(), vs.end()) - vs.begin());
  if (std::find(peaks.begin(), peaks.end(), best_node) == peaks.end()) peaks.push_back(best_node);
  std::stable_sort(peaks.begin(), peaks.end(), [&](int l, int r) { return vs[l] > vs[r]; });
  if (peaks.size() > 3) peaks.resize(3);

  CertifiedMax out{xs[best_node], std::nullopt, vs[best_node], step, Method::grid_refine};
  for (int node : peaks) {
    const double a = xs[std::max(node - 1, 0)];
    const double b = xs[std::min(node + 1, grid - 1)];
    const auto [x, radius] = detail::golden_max([&](double t) { return detail::checked(f, t); }, a, b, bracket.tol);
    const double v = detail::checked(f, x);
    // The end node itself may beat the interior refinement (monotone objective).
    if (v > out.value || (v == out.value && radius < out.radius)) out = {x, std::nullopt, v, radius, Method::grid_refine};
    if (vs[node] > out.value) out = {xs[node], std::nullopt, vs[node], 0.0, Method::grid_refine};
  }
  out.radius = std::min(out.radius, bracket.tol);
  return out;
}

/// Bisection to tol, then a secant-Newton polish that must stay inside the final bracket.
inline double find_root_scalar(const Objective& g, const Bracket& bracket) {
  double a = bracket.lo;
  double b = bracket.hi;
  double ga = detail::checked(g, a);
  double gb = detail::checked(g, b);
  if (ga == 0.0) return a;
  if (gb == 0.0) return b;
  if (std::signbit(ga) == std::signbit(gb))
    throw BracketError("no sign change on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
  while (b - a > bracket.tol) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double gm = detail::checked(g, m);
    if (gm == 0.0) return m;
    if (std::signbit(gm) == std::signbit(ga)) {
      a = m;
      ga = gm;
    } else {
      b = m;
      gb = gm;
    }
  }
  double x = 0.5 * (a + b);
  double gx = detail::checked(g, x);
  const double h = std::max(1e-7 * std::fabs(x), 1e-9);
  for (int it = 0; it < 3 && gx != 0.0; ++it) {
    const double slope = (g(x + h) - g(x - h)) / (2.0 * h);
    if (!std::isfinite(slope) || slope == 0.0) break;
    const double next = x - gx / slope;
    if (!(next >= a && next <= b)) break;
    const double gn = g(next);
    if (!(std::fabs(gn) < std::fabs(gx))) break;
    x = next;
    gx = gn;
  }
  return x;
}

/// Points where g changes sign on a uniform scan of [lo, hi], one bracket per change.
inline std::vector<std::pair<double, double>> sign_change_brackets(const Objective& g, double lo, double hi, int samples) {
  std::vector<std::pair<double, double>> out;
  const double step = (hi - lo) / samples;
  double prev_x = lo;
  double prev_v = detail::checked(g, lo);
  for (int i = 1; i <= samples; ++i) {
    const double x = i == samples ? hi : lo + i * step;
    const double v = detail::checked(g, x);
    if (v == 0.0 || std::signbit(v) != std::signbit(prev_v)) {
      if (prev_v != 0.0) out.emplace_back(prev_x, x);
    }
    prev_x = x;
    prev_v = v;
  }
  return out;
}

}  // namespace bhkit

#endif  // BHKIT_OPTIMIZE_HPP
