#ifndef BHKIT_TESTS_ORACLES_HPP
#define BHKIT_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests. Nothing here calls into the
// root-isolation, golden-section or log-domain code paths under test.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

/// Evaluates sum c_k x^(m-k) y^k directly.
inline double eval_hom(const std::vector<double>& c, double x, double y) {
  const int m = static_cast<int>(c.size()) - 1;
  double s = 0.0;
  for (int k = 0; k <= m; ++k) s += c[k] * std::pow(x, m - k) * std::pow(y, k);
  return s;
}

/// max |P| over `samples` evenly spaced points on each of the edges y = 1 and x = 1.
inline double sampled_sup_square(const std::vector<double>& c, int samples = 100000) {
  double best = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double u = -1.0 + 2.0 * i / samples;
    best = std::max(best, std::fabs(eval_hom(c, u, 1.0)));
    best = std::max(best, std::fabs(eval_hom(c, 1.0, u)));
  }
  return best;
}

/// max |a l^2 + b l + c| over `samples` points of the unit circle.
inline double sampled_sup_disk(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                               int samples = 1000000) {
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const std::complex<double> l = std::polar(1.0, 2.0 * std::numbers::pi * i / samples);
    best = std::max(best, std::abs(a * l * l + b * l + c));
  }
  return best;
}

/// Plain (sum |v|^p)^(1/p) without scaling or compensation.
inline double naive_lp(const std::vector<double>& v, double p) {
  double s = 0.0;
  for (double x : v) s += std::pow(std::fabs(x), p);
  return std::pow(s, 1.0 / p);
}

/// log of the binomial coefficient via lgamma.
inline double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

inline std::vector<double> random_coeffs(std::mt19937_64& rng, int degree) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<double> c(degree + 1);
  for (auto& v : c) v = nd(rng);
  return c;
}

}  // namespace oracle

#endif  // BHKIT_TESTS_ORACLES_HPP
