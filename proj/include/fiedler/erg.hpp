#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "fiedler/graph.hpp"
#include "fiedler/graph_statistics.hpp"
#include "fiedler/optimize.hpp"

namespace fiedler {

enum class ErgVariant {
  markov,        // theta = (eta, sigma_2..sigma_K, tau)
  higher_order,  // theta = (eta, sigma, tau) on E, S*, T*
};

struct ErgModel {
  ErgVariant variant = ErgVariant::markov;
  std::vector<double> theta;
  double rho = 2.0;
  std::size_t kmax = 3;

  friend bool operator==(const ErgModel&, const ErgModel&) = default;
};

std::size_t erg_parameter_count(ErgVariant variant, std::size_t kmax);

/// Potentials phi_i(G) in parameter order.
Eigen::VectorXd erg_potentials(const GraphStatistics& s, ErgVariant variant);

/// phi(G with focus edge) - phi(G without it), from the statistics that touch
/// the focus pair only.
Eigen::VectorXd erg_change_statistics(const NeighborhoodSubgraph& nb, ErgVariant variant,
                                      std::size_t kmax, double rho);

/// Same quantity by recomputing all statistics on both clamps.
Eigen::VectorXd erg_change_statistics_full(const NeighborhoodSubgraph& nb, ErgVariant variant,
                                           std::size_t kmax, double rho);

/// P(X = 1 | rest) = logistic(theta . change).
double erg_conditional_from_change(std::span<const double> theta, const Eigen::VectorXd& change);
double erg_conditional(const ErgModel& m, const NeighborhoodSubgraph& nb);

// Conditional log-likelihood sum_j log P(x_j | neighborhood_j; theta) over
// precomputed change statistics (one row per sample).
struct ErgLikelihood {
  Eigen::MatrixXd change;  // samples x parameters
  Eigen::VectorXd labels;  // 0 or 1

  double value(const Eigen::VectorXd& theta) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& theta) const;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& theta) const;
};

ErgLikelihood erg_likelihood(std::span<const LabeledSample> data, ErgVariant variant,
                             std::size_t kmax, double rho, std::size_t workers = 1);

/// Maximum conditional likelihood fit. Throws FitError if a class is absent
/// or the likelihood becomes non-finite.
ErgModel fit_erg(std::span<const LabeledSample> data, ErgVariant variant, std::size_t kmax,
                 double rho, std::size_t workers = 1, const AscentOptions& opts = {});

}  // namespace fiedler
