#ifndef BHKIT_EXTREMALS_HPP
#define BHKIT_EXTREMALS_HPP

#include "bhkit/norms.hpp"
#include "bhkit/poly.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <variant>

namespace bhkit {

/// a z^2 + b z w + c w^2 on the bidisk.
struct ComplexQuad {
  std::complex<double> a;
  std::complex<double> b;
  std::complex<double> c;
};

enum class Family { choi_kim, aron_klimek };

struct ExtremePoint {
  Family family;
  double first;   // t (Choi-Kim) or s (Aron-Klimek)
  double second;  // sign (Choi-Kim) or t (Aron-Klimek)
  std::variant<HomPoly2, ComplexQuad> realized;
};

/// t x^2 + sign 2 sqrt(t(1-t)) x y - t y^2, an extreme point of the unit ball of 2-homogeneous
/// polynomials on the real square for t in [1/2, 1].
inline HomPoly2 choi_kim_extreme(double t, int sign = 1) {
  if (!(t >= 0.5 && t <= 1.0)) throw std::domain_error("choi_kim_extreme requires t in [1/2, 1]");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  return HomPoly2(2, {t, sign * 2.0 * std::sqrt(t * (1.0 - t)), -t});
}

/// l_{4/3} coefficient norm along the Choi-Kim family.
inline double f_of_t(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("f_of_t requires t in [0, 1]");
  return std::pow(2.0 * std::pow(t, 4.0 / 3.0) + std::pow(2.0 * std::sqrt(t * (1.0 - t)), 4.0 / 3.0), 0.75);
}

namespace detail {

inline bool is_isolated_G_point(double s, double t) {
  return (std::fabs(s) == 1.0 && t == 0.0) || (s == 0.0 && std::fabs(t) == 1.0);
}

// 4|s||t|(1/(|s|+|t|)^2 - 1) on G. Zero at the isolated points; at the origin we take the limit
// along the segment t = -s, which is 1.
inline double aron_klimek_radicand(double s, double t) {
  if (is_isolated_G_point(s, t)) return 0.0;
  const double as = std::fabs(s);
  const double at = std::fabs(t);
  if (as == 0.0 && at == 0.0) return 1.0;
  const double sum = as + at;
  return std::max(0.0, 4.0 * as * at / (sum * sum) - 4.0 * as * at);
}

}  // namespace detail

inline bool in_G(double s, double t) {
  if (detail::is_isolated_G_point(s, t)) return true;
  const double u = s + t;
  return std::fabs(s) + std::fabs(t) < 1.0 && std::fabs(u) <= u * u;
}

inline ComplexQuad aron_klimek_extreme(double s, double t) {
  if (!in_G(s, t)) throw std::domain_error("aron_klimek_extreme: (s, t) is outside G");
  return {{s, 0.0}, {std::sqrt(detail::aron_klimek_radicand(s, t)), 0.0}, {t, 0.0}};
}

/// l_{4/3} norm of the Aron-Klimek extreme point at (s, t).
inline double phi(double s, double t) {
  if (!in_G(s, t)) throw std::domain_error("phi: (s, t) is outside G");
  return std::pow(std::pow(std::fabs(s), 4.0 / 3.0) + std::pow(std::fabs(t), 4.0 / 3.0) +
                      std::pow(detail::aron_klimek_radicand(s, t), 2.0 / 3.0),
                  0.75);
}

/// Phi restricted to the segment t = -s, s in [0, 1/2]; no membership check.
inline double phi_on_segment(double s) {
  const double as = std::fabs(s);
  const double radicand = as == 0.0 ? 1.0 : std::max(0.0, 1.0 - 4.0 * as * as);
  return std::pow(2.0 * std::pow(as, 4.0 / 3.0) + std::pow(radicand, 2.0 / 3.0), 0.75);
}

/// |(1, l, l, 1)|_{3/2} / ||x^3 + l x^2 y + l x y^2 + y^3||.
inline double quotient_E(double lambda) {
  const double denom = closed_norm_Pab(1.0, lambda);
  if (denom == 0.0) throw std::domain_error("quotient_E: vanishing sup norm");
  return lp_norm(HomPoly2(3, {1.0, lambda, lambda, 1.0}), Exponent(3, 2)) / denom;
}

/// |(0, 1, 0, l, 0, 1, 0)|_{12/7} / ||x^5 y + l x^3 y^3 + x y^5||.
inline double quotient_F(double lambda) {
  const double denom = closed_norm_Qlambda(lambda);
  if (denom == 0.0) throw std::domain_error("quotient_F: vanishing sup norm");
  return std::pow(2.0 + std::pow(std::fabs(lambda), 12.0 / 7.0), 7.0 / 12.0) / denom;
}

inline HomPoly2 pab_poly(double a, double b) { return HomPoly2(3, {a, b, b, a}); }
inline HomPoly2 qlambda_poly(double lambda) { return HomPoly2(6, {0.0, 1.0, 0.0, lambda, 0.0, 1.0, 0.0}); }

}  // namespace bhkit

#endif  // BHKIT_EXTREMALS_HPP
