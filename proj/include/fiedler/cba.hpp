#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/optimize.hpp"

namespace fiedler {

// Conditional Barabasi-Albert model with attachment exponent alpha.
struct CbaModel {
  double alpha = 0.0;
  friend bool operator==(const CbaModel&, const CbaModel&) = default;
};

/// d^alpha with 0^0 = 1 and 0^alpha = 0 otherwise.
double attachment_weight(std::size_t degree, double alpha);

/// d_u^a d_v^a / (sum_w d_w^a)^2 on the neighborhood with the focus edge removed.
double cba_conditional(const CbaModel& m, const NeighborhoodSubgraph& nb);

// Bernoulli log-likelihood of the CBA probabilities, clipped to [1e-12, 1 - 1e-12].
struct CbaLikelihood {
  struct Sample {
    std::size_t du = 0;
    std::size_t dv = 0;
    std::vector<std::pair<std::size_t, std::size_t>> histogram;  // (degree, node count)
    bool label = false;
  };
  std::vector<Sample> samples;

  double value(double alpha) const;
  double derivative(double alpha) const;
};

CbaLikelihood cba_likelihood(std::span<const LabeledSample> data);

/// Throws FitError when a class is absent.
CbaModel fit_cba(std::span<const LabeledSample> data, const AscentOptions& opts = {});

}  // namespace fiedler
