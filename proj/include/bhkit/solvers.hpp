#ifndef BHKIT_SOLVERS_HPP
#define BHKIT_SOLVERS_HPP

#include "bhkit/constants.hpp"
#include "bhkit/errors.hpp"
#include "bhkit/extremals.hpp"
#include "bhkit/optimize.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace bhkit {

/// |2 + l| - |q_l(x0)|: zero exactly where the edge value and the interior critical value tie.
inline double lambda_equation(double lambda) {
  const double r = std::sqrt(std::max(0.0, 9.0 * lambda * lambda - 20.0));
  const double interior = std::fabs(3.0 * lambda * lambda - 20.0 + lambda * r) *
                          std::sqrt(std::max(0.0, (-3.0 * lambda - r) / 10.0)) / 25.0;
  return std::fabs(2.0 + lambda) - interior;
}

inline constexpr double kLambdaScanLo = -6.0;
inline constexpr int kLambdaScanSamples = 10000;

struct LambdaRoots {
  double lambda0;
  double lambda1;
};

/// The two roots of lambda_equation on [-6, -2 sqrt(5)/3]; throws unless exactly two sign changes.
inline LambdaRoots solve_lambda_roots(double tol = 1e-13) {
  const auto brackets =
      sign_change_brackets(lambda_equation, kLambdaScanLo, constants::qlambda_branch(), kLambdaScanSamples);
  if (brackets.size() != 2)
    throw ConsistencyError("expected two roots of the lambda equation, found " + std::to_string(brackets.size()));
  const double r0 = find_root_scalar(lambda_equation, Bracket(brackets[0].first, brackets[0].second, tol));
  const double r1 = find_root_scalar(lambda_equation, Bracket(brackets[1].first, brackets[1].second, tol));
  return {r0, r1};
}

/// lambda_0, solved once.
inline double lambda0() {
  static const double value = solve_lambda_roots().lambda0;
  return value;
}

struct T0Check {
  double t0_radical = 0.0;
  double t0_numeric = 0.0;
  double f_numeric = 0.0;
  double f_at_t0_radical = 0.0;  // f evaluated at the radical t0
  double f_radical = 0.0;        // the nested radical expression for the maximum
  double derivative = 0.0;       // central difference of f at the radical t0
  bool t0_matches = false;
  bool stationary = false;
  bool f_matches = false;
  bool pass() const { return t0_matches && stationary && f_matches; }
};

inline CertifiedMax maximize_f(double tol = 1e-10) { return maximize_1d(f_of_t, Bracket(0.5, 1.0, tol)); }

/// Cross-checks the radical forms for t0 and f(t0) against numerical maximization.
inline T0Check check_exact_t0() {
  T0Check r;
  r.t0_radical = constants::t0_radical();
  const CertifiedMax best = maximize_f();
  r.t0_numeric = best.arg;
  r.f_numeric = best.value;
  r.f_at_t0_radical = f_of_t(r.t0_radical);
  r.f_radical = constants::f_t0_radical();
  const double h = 1e-5;
  r.derivative = (f_of_t(r.t0_radical + h) - f_of_t(r.t0_radical - h)) / (2.0 * h);
  r.t0_matches = std::fabs(r.t0_radical - r.t0_numeric) <= 1e-6;
  r.stationary = std::fabs(r.derivative) < 1e-6;
  r.f_matches = std::fabs(r.f_radical - r.f_numeric) <= 1e-9 && std::fabs(r.f_at_t0_radical - r.f_numeric) <= 1e-9;
  return r;
}

/// Phi over G: the segment t = -s (0 <= s < 1/2) plus the four isolated points, where Phi = 1.
inline CertifiedMax maximize_phi_on_G(double tol = 1e-10) {
  CertifiedMax best = maximize_1d(phi_on_segment, Bracket(0.0, 0.5, tol));
  best.arg2 = -best.arg;
  if (best.value < 1.0) best = {1.0, 0.0, 1.0, 0.0, Method::closed_form};
  return best;
}

inline CertifiedMax maximize_quotient_E(double tol = 1e-10) { return maximize_1d(quotient_E, Bracket(-3.0, 0.0, tol)); }

inline CertifiedMax maximize_quotient_F(double tol = 1e-10) { return maximize_1d(quotient_F, Bracket(-4.0, 1.0, tol)); }

}  // namespace bhkit

#endif  // BHKIT_SOLVERS_HPP
