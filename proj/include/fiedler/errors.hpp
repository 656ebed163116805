#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fiedler {

/// Input outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iterative solver failed to converge; carries the diagnostics of the last attempt.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, std::size_t iterations, double residual)
      : std::runtime_error(what + " (iterations=" + std::to_string(iterations) +
                           ", residual=" + std::to_string(residual) + ")"),
        iterations_(iterations),
        residual_(residual) {}

  std::size_t iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t iterations_;
  double residual_;
};

/// Model fitting could not proceed or produced a non-finite objective.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fiedler
