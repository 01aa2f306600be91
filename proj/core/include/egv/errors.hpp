#pragma once

#include <stdexcept>
#include <string>

namespace egv {

/// Raised when an operation is called with arguments that violate its contract
/// (mismatched variable tables, bad weights, missing assignments, ...).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an inverse is requested for a non-unit series or element.
class SingularityError : public std::domain_error {
 public:
  explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace egv
