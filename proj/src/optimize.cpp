#include "fiedler/optimize.hpp"

#include <cmath>

#include <Eigen/Cholesky>

#include "fiedler/errors.hpp"

namespace fiedler {

namespace {

// Newton direction -H^{-1} g when -H is positive definite (after a tiny ridge
// for structurally zero features), empty otherwise.
std::optional<Eigen::VectorXd> newton_direction(const Eigen::MatrixXd& hessian,
                                                const Eigen::VectorXd& gradient) {
  Eigen::MatrixXd neg = -hessian;
  const double scale = std::max(1.0, neg.diagonal().cwiseAbs().maxCoeff());
  neg.diagonal().array() += 1e-12 * scale;
  Eigen::LLT<Eigen::MatrixXd> llt(neg);
  if (llt.info() != Eigen::Success) return std::nullopt;
  Eigen::VectorXd d = llt.solve(gradient);
  if (!d.allFinite()) return std::nullopt;
  return d;
}

}  // namespace

AscentResult maximize(const Objective& f, Eigen::VectorXd x0, const AscentOptions& opts) {
  AscentResult r;
  r.x = std::move(x0);
  r.value = f.value(r.x);
  if (!std::isfinite(r.value)) throw FitError("objective is not finite at the starting point");

  for (r.iterations = 0; r.iterations < opts.max_iterations; ++r.iterations) {
    const Eigen::VectorXd g = f.gradient(r.x);
    if (!g.allFinite()) throw FitError("gradient is not finite");
    if (g.size() == 0 || g.cwiseAbs().maxCoeff() <= opts.gradient_tolerance) {
      r.converged = true;
      return r;
    }

    std::optional<Eigen::VectorXd> dir;
    if (f.hessian) dir = newton_direction(f.hessian(r.x), g);
    const bool newton = dir.has_value();
    if (!newton) dir = g;

    double step = newton ? 1.0 : opts.initial_step;
    bool improved = false;
    for (std::size_t h = 0; h <= opts.max_halvings; ++h, step *= 0.5) {
      Eigen::VectorXd trial = r.x + step * *dir;
      const double v = f.value(trial);
      if (std::isfinite(v) && v > r.value) {
        const double gain = v - r.value;
        r.x = std::move(trial);
        r.value = v;
        improved = true;
        if (!newton && gain < opts.min_gain) {
          ++r.iterations;
          r.converged = true;
          return r;
        }
        break;
      }
    }
    if (!improved) {
      // no representable improvement along the ascent direction
      r.converged = true;
      return r;
    }
  }
  return r;
}

double curvature_from_gradient(const std::function<double(double)>& derivative, double x,
                               double step) {
  return (derivative(x + step) - derivative(x - step)) / (2.0 * step);
}

}  // namespace fiedler
