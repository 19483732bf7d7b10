#pragma once

#include <stdexcept>
#include <string>

namespace fracton {

/// Input outside the mathematical or physical domain of an operation.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative method or quadrature stopped before reaching its tolerance.
/// Carries the best error bound achieved when the limit was hit.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace fracton
