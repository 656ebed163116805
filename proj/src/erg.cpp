#include "fiedler/erg.hpp"

#include <cmath>

#include "fiedler/errors.hpp"
#include "fiedler/parallel.hpp"

namespace fiedler {

namespace {

double log_sigmoid(double z) {
  return z >= 0.0 ? -std::log1p(std::exp(-z)) : z - std::log1p(std::exp(z));
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// Increase of the closed-form alternating sum when a count grows from d to d + 1.
double alternating_increment(std::size_t d, double rho) {
  return rho * (1.0 - std::pow(1.0 - 1.0 / rho, static_cast<double>(d)));
}

}  // namespace

std::size_t erg_parameter_count(ErgVariant variant, std::size_t kmax) {
  return variant == ErgVariant::markov ? kmax + 1 : 3;
}

Eigen::VectorXd erg_potentials(const GraphStatistics& s, ErgVariant variant) {
  Eigen::VectorXd phi(erg_parameter_count(variant, s.kmax));
  phi[0] = s.edges;
  if (variant == ErgVariant::markov) {
    for (std::size_t k = 2; k <= s.kmax; ++k) phi[static_cast<Eigen::Index>(k - 1)] = s.k_stars[k - 2];
    phi[static_cast<Eigen::Index>(s.kmax)] = s.triangles;
  } else {
    phi[1] = s.alt_stars;
    phi[2] = s.alt_triangles;
  }
  return phi;
}

Eigen::VectorXd erg_change_statistics(const NeighborhoodSubgraph& nb, ErgVariant variant,
                                      std::size_t kmax, double rho) {
  if (kmax < 2) throw DomainError("kmax must be at least 2");
  if (!(rho >= 1.0)) throw DomainError("rho must be at least 1");
  const auto& g = nb.local;
  const NodeId u = nb.focus.u;
  const NodeId v = nb.focus.v;
  const std::size_t present = g.has_edge(u, v) ? 1 : 0;
  const std::size_t du = g.degree(u) - present;
  const std::size_t dv = g.degree(v) - present;
  const std::size_t cn = common_neighbor_count(g, u, v);

  Eigen::VectorXd change(erg_parameter_count(variant, kmax));
  change[0] = 1.0;
  if (variant == ErgVariant::markov) {
    for (std::size_t k = 2; k <= kmax; ++k) {
      change[static_cast<Eigen::Index>(k - 1)] = binomial(du, k - 1) + binomial(dv, k - 1);
    }
    change[static_cast<Eigen::Index>(kmax)] = static_cast<double>(cn);
    return change;
  }

  change[1] = alternating_increment(du, rho) + alternating_increment(dv, rho);

  // The new base edge {u,v} contributes its own k-triangles; every edge {u,w}
  // and {v,w} with w a common neighbor gains one more common neighbor.
  double t = alternating_binomial_sum(cn, rho);
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  auto i = nu.begin();
  auto j = nv.begin();
  while (i != nu.end() && j != nv.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      const NodeId w = *i;
      t += alternating_increment(common_neighbor_count(g, u, w) - present, rho);
      t += alternating_increment(common_neighbor_count(g, v, w) - present, rho);
      ++i;
      ++j;
    }
  }
  change[2] = t;
  return change;
}

Eigen::VectorXd erg_change_statistics_full(const NeighborhoodSubgraph& nb, ErgVariant variant,
                                           std::size_t kmax, double rho) {
  const auto with = graph_statistics(with_edge(nb.local, nb.focus), kmax, rho);
  const auto without = graph_statistics(without_edge(nb.local, nb.focus), kmax, rho);
  Eigen::VectorXd change = erg_potentials(with, variant) - erg_potentials(without, variant);
  if (variant != ErgVariant::markov) {
    // whole-graph alternating totals are large; subtract them before rounding
    const auto hi = alternating_totals(with_edge(nb.local, nb.focus), rho);
    const auto lo = alternating_totals(without_edge(nb.local, nb.focus), rho);
    change[1] = static_cast<double>(hi.stars - lo.stars);
    change[2] = static_cast<double>(hi.triangles - lo.triangles);
  }
  return change;
}

double erg_conditional_from_change(std::span<const double> theta, const Eigen::VectorXd& change) {
  if (theta.size() != static_cast<std::size_t>(change.size())) {
    throw DomainError("parameter vector length does not match the ERG variant");
  }
  double z = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) z += theta[i] * change[static_cast<Eigen::Index>(i)];
  return sigmoid(z);
}

double erg_conditional(const ErgModel& m, const NeighborhoodSubgraph& nb) {
  return erg_conditional_from_change(m.theta, erg_change_statistics(nb, m.variant, m.kmax, m.rho));
}

double ErgLikelihood::value(const Eigen::VectorXd& theta) const {
  const Eigen::VectorXd z = change * theta;
  double total = 0.0;
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    total += labels[j] > 0.5 ? log_sigmoid(z[j]) : log_sigmoid(-z[j]);
  }
  return total;
}

Eigen::VectorXd ErgLikelihood::gradient(const Eigen::VectorXd& theta) const {
  const Eigen::VectorXd z = change * theta;
  Eigen::VectorXd residual(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) residual[j] = labels[j] - sigmoid(z[j]);
  return change.transpose() * residual;
}

Eigen::MatrixXd ErgLikelihood::hessian(const Eigen::VectorXd& theta) const {
  const Eigen::VectorXd z = change * theta;
  Eigen::VectorXd weight(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    const double p = sigmoid(z[j]);
    weight[j] = p * (1.0 - p);
  }
  return -(change.transpose() * weight.asDiagonal() * change);
}

ErgLikelihood erg_likelihood(std::span<const LabeledSample> data, ErgVariant variant,
                             std::size_t kmax, double rho, std::size_t workers) {
  const auto params = static_cast<Eigen::Index>(erg_parameter_count(variant, kmax));
  ErgLikelihood lik{Eigen::MatrixXd(static_cast<Eigen::Index>(data.size()), params),
                    Eigen::VectorXd(static_cast<Eigen::Index>(data.size()))};
  parallel_for(data.size(), workers, [&](std::size_t i) {
    const auto row = static_cast<Eigen::Index>(i);
    lik.change.row(row) = erg_change_statistics(data[i].neighborhood, variant, kmax, rho).transpose();
    lik.labels[row] = data[i].label ? 1.0 : 0.0;
  });
  return lik;
}

ErgModel fit_erg(std::span<const LabeledSample> data, ErgVariant variant, std::size_t kmax,
                 double rho, std::size_t workers, const AscentOptions& opts) {
  std::size_t positives = 0;
  for (const auto& s : data) positives += s.label ? 1 : 0;
  if (positives == 0 || positives == data.size()) {
    throw FitError("ERG fit needs both linked and unlinked pairs");
  }
  const auto lik = erg_likelihood(data, variant, kmax, rho, workers);
  Objective f{[&](const Eigen::VectorXd& t) { return lik.value(t); },
              [&](const Eigen::VectorXd& t) { return lik.gradient(t); },
              [&](const Eigen::VectorXd& t) { return lik.hessian(t); }};
  const auto params = static_cast<Eigen::Index>(erg_parameter_count(variant, kmax));
  auto result = maximize(f, Eigen::VectorXd::Zero(params), opts);
  if (!std::isfinite(result.value)) throw FitError("ERG likelihood diverged");

  ErgModel m;
  m.variant = variant;
  m.kmax = kmax;
  m.rho = rho;
  m.theta.assign(result.x.data(), result.x.data() + result.x.size());
  return m;
}

}  // namespace fiedler
