#ifndef BHKIT_POLY_HPP
#define BHKIT_POLY_HPP

#include "bhkit/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bhkit {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Positive rational exponent p = num/den, kept in lowest terms.
class Exponent {
 public:
  constexpr Exponent(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("exponent denominator is zero");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ <= 0) throw std::domain_error("exponent must be positive");
    const auto g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  /// The critical exponent 2m/(m+1) for degree m.
  static constexpr Exponent critical(std::int64_t degree) { return Exponent(2 * degree, degree + 1); }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend constexpr bool operator==(const Exponent&, const Exponent&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// ---------------------------------------------------------------------------
// Univariate polynomials, index k = coefficient of x^k.

template <typename T>
class BasicUniPoly {
 public:
  BasicUniPoly() = default;
  explicit BasicUniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& leading() const { return c_.back(); }
  T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  BasicUniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<int>(k));
    return BasicUniPoly(std::move(d));
  }

  BasicUniPoly operator-() const {
    std::vector<T> n(c_);
    for (auto& v : n) v = -v;
    return BasicUniPoly(std::move(n));
  }

  /// Remainder of Euclidean division by a nonzero divisor.
  BasicUniPoly remainder(const BasicUniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<T> r(c_);
    const int dd = divisor.degree();
    const T& lead = divisor.leading();
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
      const T q = r[k] / lead;
      if (is_zero_value(q)) continue;
      for (int j = 0; j <= dd; ++j) r[k - dd + j] -= q * divisor.c_[j];
      r[k] = T(0);
    }
    r.resize(std::min<std::size_t>(r.size(), static_cast<std::size_t>(std::max(dd, 0))));
    return BasicUniPoly(std::move(r));
  }

  /// Same polynomial divided by its largest coefficient magnitude.
  BasicUniPoly normalized() const {
    if (c_.empty()) return {};
    T scale(0);
    for (const auto& v : c_) scale = std::max<T>(scale, v < T(0) ? T(-v) : v);
    std::vector<T> n(c_);
    for (auto& v : n) v /= scale;
    return BasicUniPoly(std::move(n));
  }

 private:
  static bool is_zero_value(const T& v) { return v == T(0); }
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

using UniPoly = BasicUniPoly<double>;
using ExactUniPoly = BasicUniPoly<Rational>;

inline ExactUniPoly to_exact(const UniPoly& q) {
  std::vector<Rational> c;
  c.reserve(q.coeffs().size());
  for (double v : q.coeffs()) c.push_back(exact_from_double(v));
  return ExactUniPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Bivariate homogeneous polynomials, index k = coefficient of x^(m-k) y^k.

template <typename T>
class BasicHomPoly {
 public:
  using value_type = T;

  BasicHomPoly() : c_{T(0)} {}
  BasicHomPoly(int degree, std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    if (c_.size() != static_cast<std::size_t>(degree) + 1)
      throw std::invalid_argument("coefficient count " + std::to_string(c_.size()) + " does not match degree " +
                                  std::to_string(degree));
  }

  static BasicHomPoly zero(int degree) { return BasicHomPoly(degree, std::vector<T>(degree + 1, T(0))); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  std::span<const T> span() const { return c_; }
  const T& operator[](std::size_t k) const { return c_[k]; }
  static constexpr Mode mode() { return mode_of<T>; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const T& v) { return bhkit::is_zero(v); });
  }

  T operator()(const T& x, const T& y) const {
    // Horner in x/y form without division: sum c_k x^(m-k) y^k.
    T acc(0);
    T ypow(1);
    std::vector<T> xpow(c_.size(), T(1));
    for (std::size_t k = 1; k < c_.size(); ++k) xpow[k] = xpow[k - 1] * x;
    const std::size_t m = c_.size() - 1;
    for (std::size_t k = 0; k <= m; ++k) {
      acc += c_[k] * xpow[m - k] * ypow;
      ypow *= y;
    }
    return acc;
  }

  BasicHomPoly scaled(const T& s) const {
    std::vector<T> n(c_);
    for (auto& v : n) v *= s;
    return BasicHomPoly(degree(), std::move(n));
  }

  friend bool operator==(const BasicHomPoly&, const BasicHomPoly&) = default;

 private:
  std::vector<T> c_;
};

using HomPoly2 = BasicHomPoly<double>;
using ExactHomPoly2 = BasicHomPoly<Rational>;

template <typename T>
BasicHomPoly<T> make_hom_poly(int degree, std::vector<T> coeffs) {
  return BasicHomPoly<T>(degree, std::move(coeffs));
}

/// Exact polynomial from decimal literals, e.g. {"0.19462", "-0.66008", ...}.
inline ExactHomPoly2 make_exact_poly(int degree, std::span<const std::string_view> literals) {
  std::vector<Rational> c;
  c.reserve(literals.size());
  for (auto lit : literals) c.push_back(parse_decimal(lit));
  return ExactHomPoly2(degree, std::move(c));
}

inline HomPoly2 to_float(const ExactHomPoly2& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(to_double(v));
  return HomPoly2(p.degree(), std::move(c));
}

inline HomPoly2 to_float(const HomPoly2& p) { return p; }

namespace detail {

inline std::vector<double> convolve(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    CompensatedSum s;
    const std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
    const std::size_t hi = std::min(k, a.size() - 1);
    for (std::size_t i = lo; i <= hi; ++i) s.add(a[i] * b[k - i]);
    out[k] = s.value();
  }
  return out;
}

// Exact convolution through a common denominator so the inner loop is integer-only.
inline std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b) {
  auto integerize = [](std::span<const Rational> v, BigInt& common) {
    common = 1;
    for (const auto& r : v) common = boost::multiprecision::lcm(common, denominator(r));
    std::vector<BigInt> n;
    n.reserve(v.size());
    for (const auto& r : v) n.push_back(numerator(r) * (common / denominator(r)));
    return n;
  };
  BigInt da, db;
  const auto na = integerize(a, da);
  const auto nb = integerize(b, db);
  std::vector<BigInt> acc(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (na[i] == 0) continue;
    for (std::size_t j = 0; j < nb.size(); ++j)
      if (nb[j] != 0) acc[i + j] += na[i] * nb[j];
  }
  const BigInt den = da * db;
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(v, den);
  return out;
}

}  // namespace detail

template <typename T>
BasicHomPoly<T> multiply(const BasicHomPoly<T>& p, const BasicHomPoly<T>& q) {
  return BasicHomPoly<T>(p.degree() + q.degree(), detail::convolve(p.span(), q.span()));
}

template <typename T>
BasicHomPoly<T> power(const BasicHomPoly<T>& p, int n) {
  if (n < 1) throw std::domain_error("power exponent must be at least 1");
  BasicHomPoly<T> result = p;
  BasicHomPoly<T> base = p;
  int rest = n - 1;
  while (rest > 0) {
    if (rest & 1) result = multiply(result, base);
    rest >>= 1;
    if (rest > 0) base = multiply(base, base);
  }
  return result;
}

/// (sum |c_k|^p)^(1/p), scaled by the largest magnitude so no term overflows.
template <typename T>
double lp_norm(const BasicHomPoly<T>& p, Exponent e) {
  if (p.is_zero()) throw std::domain_error("lp_norm of the zero polynomial");
  if constexpr (mode_of<T> == Mode::exact) {
    // Magnitudes may sit outside double range; go through the log route.
    double biggest = -HUGE_VAL;
    for (const auto& v : p.coeffs())
      if (!is_zero(v)) biggest = std::max(biggest, log_abs(v));
    if (std::fabs(biggest) < 600.0) return lp_norm(to_float(p), e);
    const double pv = e.value();
    CompensatedSum s;
    for (const auto& v : p.coeffs())
      if (!is_zero(v)) s.add(std::exp(pv * (log_abs(v) - biggest)));
    return std::exp(biggest + std::log(s.value()) / pv);
  } else {
    double biggest = 0.0;
    for (double v : p.coeffs()) biggest = std::max(biggest, std::fabs(v));
    const double pv = e.value();
    CompensatedSum s;
    for (double v : p.coeffs())
      if (v != 0.0) s.add(std::pow(std::fabs(v) / biggest, pv));
    return biggest * std::pow(s.value(), 1.0 / pv);
  }
}

/// log |P|_p = (1/p) logsumexp(p log|c_k|) over the nonzero coefficients.
template <typename T>
double log_lp_norm(const BasicHomPoly<T>& p, Exponent e) {
  if (p.is_zero()) throw std::domain_error("log_lp_norm of the zero polynomial");
  const double pv = e.value();
  std::vector<double> logs;
  logs.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs())
    if (!is_zero(v)) logs.push_back(pv * log_abs(v));
  const double top = *std::max_element(logs.begin(), logs.end());
  CompensatedSum s;
  for (double l : logs) s.add(std::exp(l - top));
  return (top + std::log(s.value())) / pv;
}

enum class Edge { y_one, x_one };

/// Restriction P(x,1) or P(1,y) as a univariate polynomial.
template <typename T>
BasicUniPoly<T> dehomogenize(const BasicHomPoly<T>& p, Edge edge) {
  const std::size_t m = static_cast<std::size_t>(p.degree());
  std::vector<T> u(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    if (edge == Edge::y_one)
      u[m - k] = p[k];
    else
      u[k] = p[k];
  }
  return BasicUniPoly<T>(std::move(u));
}

}  // namespace bhkit

#endif  // BHKIT_POLY_HPP
