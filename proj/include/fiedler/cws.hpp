#pragma once

#include <cstddef>
#include <span>

#include "fiedler/graph.hpp"
#include "fiedler/optimize.hpp"

namespace fiedler {

// Conditional Watts-Strogatz model: lattice half-degree delta and rewiring
// probability beta = logistic(theta_beta).
struct CwsModel {
  std::size_t delta = 1;
  double theta_beta = 0.0;

  double beta() const;
  friend bool operator==(const CwsModel&, const CwsModel&) = default;
};

/// Degree distribution of a rewired ring lattice; zero for k < delta.
double ws_degree_pmf(std::size_t delta, double beta, std::size_t k);
double ws_degree_pmf(const CwsModel& m, std::size_t k);

// log pmf and its derivative with respect to beta; log_value is -inf where the pmf is 0.
struct LogPmf {
  double log_value;
  double dlog_dbeta;
};
LogPmf ws_log_degree_pmf(std::size_t delta, double beta, std::size_t k);

/// Focus-pair degrees with the focus edge removed.
std::pair<std::size_t, std::size_t> focus_degrees_without_edge(const NeighborhoodSubgraph& nb);

/// P(X = 1 | endpoint degrees); 0.5 when both clamp products vanish.
double cws_conditional(const CwsModel& m, const NeighborhoodSubgraph& nb);

struct CwsFitOptions {
  bool halve_delta = false;  // divide the mean endpoint degree by a further 2
  AscentOptions ascent;
};

/// Rounded mean endpoint degree (clamp-1 neighborhoods), floored at 1.
std::size_t estimate_delta(std::span<const LabeledSample> data, bool halve = false);

// Clipped conditional log-likelihood in theta_beta for a fixed delta.
struct CwsLikelihood {
  std::size_t delta = 1;
  std::vector<std::pair<std::size_t, std::size_t>> base_degrees;  // without the focus edge
  std::vector<bool> labels;

  double value(double theta_beta) const;
  double derivative(double theta_beta) const;
};

CwsLikelihood cws_likelihood(std::span<const LabeledSample> data, std::size_t delta);

CwsModel fit_cws(std::span<const LabeledSample> data, const CwsFitOptions& opts = {});

}  // namespace fiedler
