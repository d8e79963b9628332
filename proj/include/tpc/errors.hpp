#pragma once

#include <stdexcept>
#include <string>

namespace tpc {

// Argument and domain violations are reported with the standard logic_error
// family (std::domain_error, std::invalid_argument) and working-range
// violations with std::range_error. Numerical failures that indicate the
// solver could not produce a result use SolverError.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tpc
