#ifndef BHKIT_CATALOG_HPP
#define BHKIT_CATALOG_HPP

#include "bhkit/constants.hpp"
#include "bhkit/extremals.hpp"
#include "bhkit/poly.hpp"
#include "bhkit/solvers.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bhkit {

enum class CatalogId { P2, P3, P5, P6, P7, P8, P10 };

inline constexpr std::array<CatalogId, 7> kCatalogIds{CatalogId::P2, CatalogId::P3, CatalogId::P5, CatalogId::P6,
                                                      CatalogId::P7, CatalogId::P8, CatalogId::P10};

inline const char* to_string(CatalogId id) {
  switch (id) {
    case CatalogId::P2: return "P2";
    case CatalogId::P3: return "P3";
    case CatalogId::P5: return "P5";
    case CatalogId::P6: return "P6";
    case CatalogId::P7: return "P7";
    case CatalogId::P8: return "P8";
    case CatalogId::P10: return "P10";
  }
  return "?";
}

inline CatalogId parse_catalog_id(std::string_view name) {
  for (auto id : kCatalogIds)
    if (name == to_string(id)) return id;
  throw std::invalid_argument("unknown catalog id: " + std::string(name));
}

/// Published power-trick endpoint: D_{R, m n}(2) >= root^(m n).
struct PowerEndpoint {
  int n;
  double root;
};

struct CatalogEntry {
  CatalogId id;
  int degree;
  HomPoly2 poly;
  std::optional<ExactHomPoly2> exact;  // present when every coefficient is a terminating decimal
  std::optional<double> reported_norm;
  std::optional<double> reported_quotient;
  PowerEndpoint endpoint;
};

namespace detail {

inline CatalogEntry decimal_entry(CatalogId id, int degree, std::initializer_list<std::string_view> literals,
                                  std::optional<double> norm, std::optional<double> quotient, PowerEndpoint endpoint) {
  const std::vector<std::string_view> lits(literals);
  ExactHomPoly2 exact = make_exact_poly(degree, lits);
  return {id, degree, to_float(exact), exact, norm, quotient, endpoint};
}

}  // namespace detail

inline CatalogEntry catalog(CatalogId id) {
  switch (id) {
    case CatalogId::P2: {
      const double t0 = constants::t0_radical();
      return {id, 2, choi_kim_extreme(t0, 1), std::nullopt, 1.0, 1.837373, {300, 1.36117}};
    }
    case CatalogId::P3: {
      const double b1 = constants::b1_radical();
      return {id, 3, pab_poly(1.0, b1), std::nullopt, 1.33848, 2.5525, {200, 1.42234}};
    }
    case CatalogId::P5:
      return detail::decimal_entry(id, 5, {"0.19462", "-0.66008", "-0.97833", "0.97833", "0.66008", "-0.19462"},
                                   0.28617, 6.83591, {120, 1.54987});
    case CatalogId::P6:
      return {id, 6, qlambda_poly(lambda0()), std::nullopt, std::nullopt, 10.7809, {100, 1.58432}};
    case CatalogId::P7:
      return detail::decimal_entry(
          id, 7, {"-0.05126", "0.22070", "0.50537", "-0.71044", "-0.71044", "0.50537", "0.22070", "-0.05126"},
          0.07138, 19.96308, {86, 1.61725});
    case CatalogId::P8:
      return detail::decimal_entry(id, 8, {"0", "-0.15258", "0", "0.64697", "0", "-0.64697", "0", "0.15258", "0"},
                                   0.02985, 33.36323, {75, 1.64042});
    case CatalogId::P10:
      return detail::decimal_entry(id, 10,
                                   {"0", "0.0938", "0", "-0.5938", "0", "1", "0", "-0.5938", "0", "0.0938", "0"},
                                   0.01530, 90.35556, {60, 1.65171});
  }
  throw std::invalid_argument("unknown catalog id");
}

}  // namespace bhkit

#endif  // BHKIT_CATALOG_HPP
