#include "fiedler/cws.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fiedler/errors.hpp"
#include "fiedler/graph_statistics.hpp"

namespace fiedler {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kClip = 1e-12;

// e * log(x) with 0 * log(0) = 0, i.e. x^e with 0^0 = 1.
double log_power(double x, double e) {
  if (e == 0.0) return 0.0;
  return x > 0.0 ? e * std::log(x) : kNegInf;
}

double logistic(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

double CwsModel::beta() const { return logistic(theta_beta); }

LogPmf ws_log_degree_pmf(std::size_t delta, double beta, std::size_t k) {
  if (k < delta) return {kNegInf, 0.0};
  const std::size_t top = std::min(k - delta, delta);
  const double d = static_cast<double>(delta);

  std::vector<double> logs;
  std::vector<double> dlogs;
  for (std::size_t i = 0; i <= top; ++i) {
    const double fi = static_cast<double>(i);
    const double m = static_cast<double>(k - delta - i);
    const double log_term = std::log(binomial(delta, i)) + log_power(1.0 - beta, fi) +
                            log_power(beta, d - fi) + log_power(d * beta, m) -
                            std::lgamma(m + 1.0) - beta * d;
    if (log_term == kNegInf) continue;
    double dlog = -d;
    if (i > 0) dlog -= fi / (1.0 - beta);
    if (d - fi > 0.0) dlog += (d - fi) / beta;
    if (m > 0.0) dlog += m / beta;
    logs.push_back(log_term);
    dlogs.push_back(dlog);
  }
  if (logs.empty()) return {kNegInf, 0.0};

  const double peak = *std::max_element(logs.begin(), logs.end());
  double sum = 0.0;
  double weighted = 0.0;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    const double w = std::exp(logs[i] - peak);
    sum += w;
    weighted += w * dlogs[i];
  }
  return {peak + std::log(sum), weighted / sum};
}

double ws_degree_pmf(std::size_t delta, double beta, std::size_t k) {
  if (delta == 0) throw DomainError("ws_degree_pmf: delta must be positive");
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("ws_degree_pmf: beta outside [0, 1]");
  const auto lp = ws_log_degree_pmf(delta, beta, k);
  return lp.log_value == kNegInf ? 0.0 : std::exp(lp.log_value);
}

double ws_degree_pmf(const CwsModel& m, std::size_t k) {
  return ws_degree_pmf(m.delta, m.beta(), k);
}

std::pair<std::size_t, std::size_t> focus_degrees_without_edge(const NeighborhoodSubgraph& nb) {
  const auto& g = nb.local;
  const std::size_t present = g.has_edge(nb.focus.u, nb.focus.v) ? 1 : 0;
  return {g.degree(nb.focus.u) - present, g.degree(nb.focus.v) - present};
}

namespace {

// Log of the clamp-1 and clamp-0 pmf products and their beta-derivatives.
struct ClampTerms {
  double log_on, dlog_on;
  double log_off, dlog_off;
};

ClampTerms clamp_terms(std::size_t delta, double beta, std::size_t du, std::size_t dv) {
  const auto on_u = ws_log_degree_pmf(delta, beta, du + 1);
  const auto on_v = ws_log_degree_pmf(delta, beta, dv + 1);
  const auto off_u = ws_log_degree_pmf(delta, beta, du);
  const auto off_v = ws_log_degree_pmf(delta, beta, dv);
  return {on_u.log_value + on_v.log_value, on_u.dlog_dbeta + on_v.dlog_dbeta,
          off_u.log_value + off_v.log_value, off_u.dlog_dbeta + off_v.dlog_dbeta};
}

// P(X=1) from the two clamp log-products.
double clamp_probability(const ClampTerms& t) {
  if (t.log_on == kNegInf && t.log_off == kNegInf) return 0.5;
  if (t.log_off == kNegInf) return 1.0;
  if (t.log_on == kNegInf) return 0.0;
  return logistic(t.log_on - t.log_off);
}

}  // namespace

double cws_conditional(const CwsModel& m, const NeighborhoodSubgraph& nb) {
  auto [du, dv] = focus_degrees_without_edge(nb);
  return clamp_probability(clamp_terms(m.delta, m.beta(), du, dv));
}

std::size_t estimate_delta(std::span<const LabeledSample> data, bool halve) {
  if (data.empty()) throw DomainError("estimate_delta: no samples");
  double total = 0.0;
  for (const auto& s : data) {
    auto [du, dv] = focus_degrees_without_edge(s.neighborhood);
    total += static_cast<double>(du + dv + 2);
  }
  double mean = total / (2.0 * static_cast<double>(data.size()));
  if (halve) mean /= 2.0;
  const auto rounded = static_cast<std::size_t>(std::floor(mean + 0.5));
  return std::max<std::size_t>(rounded, 1);
}

CwsLikelihood cws_likelihood(std::span<const LabeledSample> data, std::size_t delta) {
  CwsLikelihood lik;
  lik.delta = delta;
  lik.base_degrees.reserve(data.size());
  lik.labels.reserve(data.size());
  for (const auto& s : data) {
    lik.base_degrees.push_back(focus_degrees_without_edge(s.neighborhood));
    lik.labels.push_back(s.label);
  }
  return lik;
}

double CwsLikelihood::value(double theta_beta) const {
  const double beta = logistic(theta_beta);
  double total = 0.0;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    const auto t = clamp_terms(delta, beta, base_degrees[j].first, base_degrees[j].second);
    const double p1 = clamp_probability(t);
    const double p = labels[j] ? p1 : 1.0 - p1;
    total += std::log(std::max(p, kClip));
  }
  return total;
}

double CwsLikelihood::derivative(double theta_beta) const {
  const double beta = logistic(theta_beta);
  const double dbeta = beta * (1.0 - beta);
  double total = 0.0;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    const auto t = clamp_terms(delta, beta, base_degrees[j].first, base_degrees[j].second);
    if (t.log_on == kNegInf || t.log_off == kNegInf) continue;  // constant in beta
    const double p1 = clamp_probability(t);
    const double p = labels[j] ? p1 : 1.0 - p1;
    if (p < kClip) continue;
    // d/dbeta log P(x=1) = (1 - p1)(dlog_on - dlog_off); P(x=0) has the opposite sign with p1
    const double diff = t.dlog_on - t.dlog_off;
    total += (labels[j] ? (1.0 - p1) : -p1) * diff * dbeta;
  }
  return total;
}

CwsModel fit_cws(std::span<const LabeledSample> data, const CwsFitOptions& opts) {
  CwsModel m;
  m.delta = estimate_delta(data, opts.halve_delta);
  const auto lik = cws_likelihood(data, m.delta);
  auto deriv = [&](double x) { return lik.derivative(x); };
  Objective f{
      [&](const Eigen::VectorXd& x) { return lik.value(x[0]); },
      [&](const Eigen::VectorXd& x) { return Eigen::VectorXd::Constant(1, lik.derivative(x[0])); },
      [&](const Eigen::VectorXd& x) {
        return Eigen::MatrixXd::Constant(1, 1, curvature_from_gradient(deriv, x[0]));
      }};
  auto result = maximize(f, Eigen::VectorXd::Zero(1), opts.ascent);
  if (!std::isfinite(result.value)) throw FitError("CWS likelihood diverged");
  m.theta_beta = result.x[0];
  return m;
}

}  // namespace fiedler
