#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include <Eigen/Core>

namespace fiedler {

// Smooth objective to be maximized. The Hessian is optional; when given and
// negative definite the ascent direction is the Newton direction, otherwise
// the gradient.
struct Objective {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hessian;
};

struct AscentOptions {
  std::size_t max_iterations = 500;
  double min_gain = 1e-8;          // stop when a gradient step gains less than this
  double gradient_tolerance = 1e-7; // stop when the max-norm of the gradient is below this
  double initial_step = 0.1;       // first trial length for gradient steps
  std::size_t max_halvings = 60;
};

struct AscentResult {
  Eigen::VectorXd x;
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Line-search ascent with backtracking halving. Throws FitError when the
/// objective is not finite at the starting point.
AscentResult maximize(const Objective& f, Eigen::VectorXd x0, const AscentOptions& opts = {});

/// Second derivative of a scalar function from central differences of its first derivative.
double curvature_from_gradient(const std::function<double(double)>& derivative, double x,
                               double step = 1e-5);

}  // namespace fiedler
