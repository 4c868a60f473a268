#ifndef BHKIT_SCALAR_HPP
#define BHKIT_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bhkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Precision provenance carried by every coefficient container.
enum class Mode { exact, floating };

inline const char* to_string(Mode m) { return m == Mode::exact ? "exact" : "float"; }

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr Mode mode = Mode::floating;
};

template <>
struct ScalarTraits<Rational> {
  static constexpr Mode mode = Mode::exact;
};

template <typename T>
inline constexpr Mode mode_of = ScalarTraits<T>::mode;

namespace detail {

// log|x| for an arbitrarily large integer without converting through double.
inline double log_abs_int(const BigInt& x) {
  BigInt a = abs(x);
  if (a == 0) return -HUGE_VAL;
  const std::size_t bits = boost::multiprecision::msb(a) + 1;
  if (bits <= 1000) return std::log(a.convert_to<double>());
  const std::size_t shift = bits - 64;
  BigInt top = a >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace detail

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Natural log of |x|; -inf for zero. Safe for rationals far outside double range.
inline double log_abs(double x) { return std::log(std::fabs(x)); }
inline double log_abs(const Rational& x) {
  if (x == 0) return -HUGE_VAL;
  return detail::log_abs_int(numerator(x)) - detail::log_abs_int(denominator(x));
}

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return x == 0; }

/// Parse a plain decimal literal ("-0.19462", "3", "1.5e-3") into an exact rational.
inline Rational parse_decimal(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty decimal literal");
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  BigInt digits = 0;
  long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char ch = s[pos];
    if (ch >= '0' && ch <= '9') {
      digits = digits * 10 + (ch - '0');
      if (seen_point) ++scale;
      seen_digit = true;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed decimal literal: " + s);
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw std::invalid_argument("malformed decimal literal: " + s);
    std::size_t used = 0;
    long exponent = 0;
    try {
      exponent = std::stol(s.substr(pos + 1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed decimal literal: " + s);
    }
    if (pos + 1 + used != s.size()) throw std::invalid_argument("malformed decimal literal: " + s);
    scale -= exponent;
  }
  Rational value(digits);
  if (scale > 0) value /= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(scale)));
  if (scale < 0) value *= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-scale)));
  return negative ? Rational(-value) : value;
}

/// Exact rational image of a double (every finite double is a dyadic rational).
inline Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite value has no rational image");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  Rational r{BigInt(scaled)};
  exponent -= 53;
  if (exponent > 0) r *= Rational(BigInt(1) << exponent);
  if (exponent < 0) r /= Rational(BigInt(1) << (-exponent));
  return r;
}

}  // namespace bhkit

#endif  // BHKIT_SCALAR_HPP
