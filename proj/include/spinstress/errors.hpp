#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinstress {

// Error taxonomy, mirrored by the CLI exit codes:
//   ValidationError -> 2, SymmetryError -> 3, NumericalError -> 4.

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A stiffness matrix (or frame) incompatible with the three-fold
// symmetry pattern assumed by the coupling conversion.
class SymmetryError : public std::runtime_error {
 public:
  SymmetryError(const std::string& msg, double residual)
      : std::runtime_error(msg), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the regression when the strain battery cannot resolve all
// six coupling parameters; carries the names of the unresolved ones.
class IdentifiabilityError : public ValidationError {
 public:
  IdentifiabilityError(const std::string& msg, std::vector<std::string> unresolved)
      : ValidationError(msg), unresolved_(std::move(unresolved)) {}
  const std::vector<std::string>& unresolved() const { return unresolved_; }

 private:
  std::vector<std::string> unresolved_;
};

}  // namespace spinstress
