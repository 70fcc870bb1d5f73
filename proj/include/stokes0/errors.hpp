#pragma once

#include <stdexcept>
#include <string>

namespace stokes0 {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the valid domain of a coordinate map, mode, or special function.
class domain_error : public error {
 public:
  using error::error;
};

/// Evaluation at (or within threshold of) a singular locus of the active system.
class singular_point_error : public error {
 public:
  using error::error;
};

/// Iterative inversion failed to reach tolerance; carries the final residual.
class convergence_error : public error {
 public:
  convergence_error(const std::string& what, double residual)
      : error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Result exceeds the representable range of double.
class overflow_error : public error {
 public:
  using error::error;
};

/// Collocation matrix is numerically rank deficient; carries the condition estimate.
class rank_deficiency_error : public error {
 public:
  rank_deficiency_error(const std::string& what, double condition_estimate)
      : error(what), condition_estimate_(condition_estimate) {}
  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

/// A grid or sampling request produced no usable points.
class grid_error : public error {
 public:
  using error::error;
};

}  // namespace stokes0
