#ifndef BHKIT_BOUNDS_HPP
#define BHKIT_BOUNDS_HPP

#include "bhkit/catalog.hpp"
#include "bhkit/norms.hpp"
#include "bhkit/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bhkit {

/// Tolerance for base sup norms; their error is amplified n-fold before the (mn)-th root.
inline constexpr double kBaseNormTol = 1e-12;

struct QuotientReport {
  std::string poly_id;
  int degree;
  Exponent p;
  double coeff_norm;
  double sup_norm;
  double quotient;
  Mode mode;
};

/// |P|_{2m/(m+1)} / ||P|| for a degree-m polynomial on the real square.
template <typename T>
QuotientReport bh_quotient(const BasicHomPoly<T>& p, std::string poly_id = "custom") {
  if (p.is_zero()) throw std::domain_error("bh_quotient of the zero polynomial");
  const Exponent e = Exponent::critical(p.degree());
  const double coeff = lp_norm(p, e);
  const double sup = sup_norm_square(p, kBaseNormTol).value;
  return {std::move(poly_id), p.degree(), e, coeff, sup, coeff / sup, mode_of<T>};
}

struct PowerBound {
  int n;
  int degree;           // m n
  double log_bound;     // log of the lower bound on D_{R, m n}(2)
  double per_degree_root;
};

namespace detail {

inline PowerBound power_bound_from(const HomPoly2& powered, int base_degree, int n, double log_base_sup) {
  const int degree = base_degree * n;
  const double log_bound = log_lp_norm(powered, Exponent::critical(degree)) - n * log_base_sup;
  return {n, degree, log_bound, std::exp(log_bound / degree)};
}

}  // namespace detail

/// log |P^n|_{2mn/(mn+1)} - n log ||P||, never forming ||P||^n.
template <typename T>
PowerBound power_lower_bound(const BasicHomPoly<T>& p, int n) {
  if (p.is_zero()) throw std::domain_error("power_lower_bound of the zero polynomial");
  if (n < 1) throw std::domain_error("power exponent must be at least 1");
  const double log_sup = std::log(sup_norm_square(p, kBaseNormTol).value);
  const int degree = p.degree() * n;
  const double log_bound = log_lp_norm(power(p, n), Exponent::critical(degree)) - n * log_sup;
  return {n, degree, log_bound, std::exp(log_bound / degree)};
}

struct PowerBoundSeries {
  std::string base_id;
  int base_degree;
  double base_log_sup;
  std::vector<PowerBound> records;
};

/// power_lower_bound at n = 1, 1 + stride, ... <= n_max, multiplying by P once per step.
inline PowerBoundSeries hyper_series(const HomPoly2& p, int n_max, int stride = 1, std::string base_id = "custom") {
  if (n_max < 1) throw std::domain_error("hyper_series requires n_max >= 1");
  if (stride < 1) throw std::domain_error("hyper_series requires stride >= 1");
  if (p.is_zero()) throw std::domain_error("hyper_series of the zero polynomial");
  PowerBoundSeries series{std::move(base_id), p.degree(), std::log(sup_norm_square(p, kBaseNormTol).value), {}};
  HomPoly2 powered = p;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) powered = multiply(powered, p);
    if ((n - 1) % stride == 0)
      series.records.push_back(detail::power_bound_from(powered, p.degree(), n, series.base_log_sup));
  }
  return series;
}

/// Worker count from BHKIT_THREADS (default 1).
inline int configured_threads() {
  if (const char* env = std::getenv("BHKIT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

/// One series per catalog base, in catalog order, up to each base's published exponent.
inline std::vector<PowerBoundSeries> catalog_series(int threads = configured_threads()) {
  std::vector<CatalogEntry> entries;
  for (auto id : kCatalogIds) entries.push_back(catalog(id));
  std::vector<PowerBoundSeries> out(entries.size());
  auto run = [&](std::size_t i) {
    out[i] = hyper_series(entries[i].poly, entries[i].endpoint.n, 1, to_string(entries[i].id));
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) run(i);
    return out;
  }
  for (std::size_t start = 0; start < entries.size(); start += static_cast<std::size_t>(threads)) {
    std::vector<std::future<void>> batch;
    for (std::size_t i = start; i < std::min(entries.size(), start + static_cast<std::size_t>(threads)); ++i)
      batch.push_back(std::async(std::launch::async, run, i));
    for (auto& f : batch) f.get();
  }
  return out;
}

struct BestBound {
  CatalogId base;
  PowerBound bound;
};

/// Largest per-degree root among catalog bases whose degree divides the target.
inline std::optional<BestBound> best_known_bound(int degree) {
  if (degree < 1) return std::nullopt;
  std::optional<BestBound> best;
  for (auto id : kCatalogIds) {
    const CatalogEntry e = catalog(id);
    if (degree % e.degree != 0) continue;
    const PowerBound b = power_lower_bound(e.poly, degree / e.degree);
    if (!best || b.per_degree_root > best->bound.per_degree_root) best = BestBound{id, b};
  }
  return best;
}

/// CSV rows base_id,n,degree,per_degree_root with 10 significant digits.
inline void write_series_csv(std::ostream& os, const std::vector<PowerBoundSeries>& all) {
  os << "base_id,n,degree,per_degree_root\n";
  const auto old = os.precision(10);
  for (const auto& s : all)
    for (const auto& r : s.records) os << s.base_id << ',' << r.n << ',' << r.degree << ',' << r.per_degree_root << '\n';
  os.precision(old);
}

}  // namespace bhkit

#endif  // BHKIT_BOUNDS_HPP
