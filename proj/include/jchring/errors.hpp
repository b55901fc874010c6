#pragma once

#include <stdexcept>
#include <string>

namespace jchring {

/// Thrown when a requested computation would exceed the dense-solver ceiling.
class DimensionGuardError : public std::runtime_error {
 public:
  DimensionGuardError(const std::string& what, long long dimension)
      : std::runtime_error(what), dimension_(dimension) {}

  long long dimension() const noexcept { return dimension_; }

 private:
  long long dimension_;
};

/// Thrown when an integration or solve leaves its accuracy contract.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jchring
