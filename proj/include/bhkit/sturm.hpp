#ifndef BHKIT_STURM_HPP
#define BHKIT_STURM_HPP

#include "bhkit/poly.hpp"

#include <cmath>
#include <optional>
#include <variant>
#include <vector>

namespace bhkit {

/// Signed remainder sequence p, p', -rem(p, p'), ...
template <typename T>
class SturmChain {
 public:
  SturmChain() = default;
  explicit SturmChain(std::vector<BasicUniPoly<T>> seq) : seq_(std::move(seq)) {}

  const std::vector<BasicUniPoly<T>>& sequence() const { return seq_; }

  int variations(const T& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : seq_) {
      const T v = p(x);
      const int s = v > T(0) ? 1 : (v < T(0) ? -1 : 0);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Number of distinct real roots of the first element in (a, b].
  int count(const T& a, const T& b) const { return variations(a) - variations(b); }

 private:
  std::vector<BasicUniPoly<T>> seq_;
};

namespace detail {

// Leading coefficients of float remainders below this (relative to a unit-scaled dividend)
// are indistinguishable from cancellation noise.
inline constexpr double kSturmGuard = 1e-12;

}  // namespace detail

inline SturmChain<Rational> build_exact_sturm_chain(const ExactUniPoly& p) {
  std::vector<ExactUniPoly> seq;
  if (p.is_zero()) return SturmChain<Rational>(std::move(seq));
  seq.push_back(p);
  ExactUniPoly d = p.derivative();
  while (!d.is_zero()) {
    seq.push_back(d);
    const auto& prev = seq[seq.size() - 2];
    d = -prev.remainder(seq.back());
  }
  return SturmChain<Rational>(std::move(seq));
}

/// Float chain with a magnitude guard; std::nullopt when the guard trips. A remainder that
/// cancels to exactly zero is also refused: in floating point it cannot be told apart from a
/// near-double root, and the exact chain handles genuine repeated roots anyway.
inline std::optional<SturmChain<double>> build_float_sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return SturmChain<double>(std::move(seq));
  seq.push_back(p.normalized());
  UniPoly d = p.derivative().normalized();
  while (!d.is_zero()) {
    seq.push_back(d);
    if (d.degree() == 0) break;
    const UniPoly r = -seq[seq.size() - 2].remainder(seq.back());
    if (r.is_zero() || std::fabs(r.leading()) < detail::kSturmGuard) return std::nullopt;
    d = r.normalized();
  }
  return SturmChain<double>(std::move(seq));
}

/// Counts roots of a float polynomial, falling back to an exact rational chain when needed.
class RootCounter {
 public:
  explicit RootCounter(const UniPoly& p) {
    if (auto chain = build_float_sturm_chain(p))
      chain_ = std::move(*chain);
    else
      chain_ = build_exact_sturm_chain(to_exact(p));
  }

  bool exact() const { return std::holds_alternative<SturmChain<Rational>>(chain_); }

  int count(double a, double b) const {
    if (const auto* f = std::get_if<SturmChain<double>>(&chain_)) return f->count(a, b);
    const auto& e = std::get<SturmChain<Rational>>(chain_);
    return e.count(exact_from_double(a), exact_from_double(b));
  }

 private:
  std::variant<SturmChain<double>, SturmChain<Rational>> chain_;
};

/// All distinct real roots of p in [lo, hi], each bracketed to width <= tol.
inline std::vector<double> isolate_roots(const UniPoly& p, double lo, double hi, double tol) {
  std::vector<double> roots;
  if (p.degree() < 1) return roots;
  const RootCounter counter(p);
  if (p(lo) == 0.0) roots.push_back(lo);

  struct Cell {
    double a, b;
    int n;
  };
  std::vector<Cell> stack{{lo, hi, counter.count(lo, hi)}};
  const UniPoly dp = p.derivative();
  while (!stack.empty()) {
    Cell cell = stack.back();
    stack.pop_back();
    if (cell.n <= 0) continue;
    const double mid = 0.5 * (cell.a + cell.b);
    if (cell.b - cell.a <= tol || mid <= cell.a || mid >= cell.b) {
      // Newton polish inside the bracket; keep the midpoint if it wanders out.
      double x = mid;
      for (int it = 0; it < 4; ++it) {
        const double slope = dp(x);
        if (slope == 0.0) break;
        const double next = x - p(x) / slope;
        if (!(next >= cell.a && next <= cell.b)) break;
        if (std::fabs(p(next)) >= std::fabs(p(x))) break;
        x = next;
      }
      roots.push_back(x);
      continue;
    }
    const int left = counter.count(cell.a, mid);
    // Depth first, right half pushed first so roots come out in ascending order.
    stack.push_back({mid, cell.b, cell.n - left});
    stack.push_back({cell.a, mid, left});
  }
  return roots;
}

}  // namespace bhkit

#endif  // BHKIT_STURM_HPP
