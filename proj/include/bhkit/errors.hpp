#ifndef BHKIT_ERRORS_HPP
#define BHKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bhkit {

/// An objective returned NaN or infinity inside its domain.
struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A root search was given an interval without a sign change.
struct BracketError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A computed structure disagrees with what the construction guarantees.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bhkit

#endif  // BHKIT_ERRORS_HPP
