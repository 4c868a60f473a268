#ifndef BHKIT_CERTIFIED_MAX_HPP
#define BHKIT_CERTIFIED_MAX_HPP

#include <optional>
#include <string>

namespace bhkit {

enum class Method { sturm_newton, grid_refine, closed_form };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::sturm_newton: return "sturm-newton";
    case Method::grid_refine: return "grid-refine";
    case Method::closed_form: return "closed-form";
  }
  return "unknown";
}

/// Result of a 1-D or 2-D maximization. `radius` is the bracket half-width on the argument.
struct CertifiedMax {
  double arg = 0.0;
  std::optional<double> arg2;  // second coordinate for points on the square boundary
  double value = 0.0;
  double radius = 0.0;
  Method method = Method::grid_refine;
};

}  // namespace bhkit

#endif  // BHKIT_CERTIFIED_MAX_HPP
