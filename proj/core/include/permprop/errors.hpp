#ifndef PERMPROP_ERRORS_HPP
#define PERMPROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permprop {

/// Thrown when a computation is requested beyond its configured size cap.
struct cap_error : std::domain_error {
  explicit cap_error(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a checked precondition fails (e.g. I is not a subset of J(w)).
struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace permprop

#endif  // PERMPROP_ERRORS_HPP
