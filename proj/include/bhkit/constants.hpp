#ifndef BHKIT_CONSTANTS_HPP
#define BHKIT_CONSTANTS_HPP

#include <cmath>

namespace bhkit::constants {

/// Argmax of the Choi-Kim objective, as a radical expression.
inline double t0_radical() {
  const double r = std::sqrt(129.0);
  return (2.0 * std::cbrt(107.0 + 9.0 * r) + std::cbrt(856.0 - 72.0 * r) + 16.0) / 36.0;
}

/// Maximum of the Choi-Kim objective, evaluated from its nested radical form.
inline double f_t0_radical() {
  const double r = std::sqrt(129.0);
  const double up = 107.0 + 9.0 * r;
  const double down = 107.0 - 9.0 * r;
  const double s = 2.0 * std::cbrt(up) + std::cbrt(856.0 - 72.0 * r) + 16.0;
  const double d = -2.0 * std::cbrt(up) + std::pow(up, 2.0 / 3.0) - 2.0 * std::cbrt(down) +
                   std::pow(down, 2.0 / 3.0) - 60.0;
  const double first = std::pow(s, 4.0 / 3.0) / (18.0 * std::pow(6.0, 2.0 / 3.0));
  const double second = 1.0 / (9.0 * std::pow(-3.0 / d, 2.0 / 3.0));
  return std::pow(first + second, 0.75);
}

/// Lower end of the cubic branch for ||a x^3 + b x^2 y + b x y^2 + a y^3||.
inline double b1_radical() {
  const double s3 = std::sqrt(3.0);
  return 3.0 / 7.0 * (3.0 - 2.0 * std::cbrt(9.0) / std::cbrt(-12.0 + 7.0 * s3) + 2.0 * std::cbrt(-36.0 + 21.0 * s3));
}

/// Upper end of the same branch, 3 - 2 sqrt(3).
inline double pab_upper_ratio() { return 3.0 - 2.0 * std::sqrt(3.0); }

/// Below this ratio x^5 + l x^3 + x has critical points in (0, 1]: -2 sqrt(5) / 3.
inline double qlambda_branch() { return -2.0 * std::sqrt(5.0) / 3.0; }

inline double sqrt2() { return std::sqrt(2.0); }

}  // namespace bhkit::constants

#endif  // BHKIT_CONSTANTS_HPP
