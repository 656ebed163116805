#include "fiedler/cba.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fiedler/errors.hpp"

namespace fiedler {

namespace {

constexpr double kClip = 1e-12;

std::vector<std::size_t> degrees_without_focus(const NeighborhoodSubgraph& nb) {
  const auto& g = nb.local;
  std::vector<std::size_t> d(g.node_count());
  for (NodeId w = 0; w < g.node_count(); ++w) d[w] = g.degree(w);
  if (g.has_edge(nb.focus.u, nb.focus.v)) {
    --d[nb.focus.u];
    --d[nb.focus.v];
  }
  return d;
}

struct Terms {
  double p = 0.0;          // unclipped probability
  double dlog_p = 0.0;     // d/dalpha log p, valid when p > 0
  bool smooth = false;     // false at the 0^0 discontinuity or where p == 0
};

Terms evaluate(const CbaLikelihood::Sample& s, double alpha) {
  double sum = 0.0;
  double sum_log = 0.0;
  bool has_zero = false;
  for (auto [d, count] : s.histogram) {
    const double w = attachment_weight(d, alpha) * static_cast<double>(count);
    sum += w;
    if (d > 0) sum_log += w * std::log(static_cast<double>(d));
    if (d == 0) has_zero = true;
  }
  Terms t;
  if (sum <= 0.0) return t;
  t.p = attachment_weight(s.du, alpha) * attachment_weight(s.dv, alpha) / (sum * sum);
  if (t.p > 0.0 && s.du > 0 && s.dv > 0 && !(has_zero && alpha == 0.0)) {
    t.dlog_p = std::log(static_cast<double>(s.du)) + std::log(static_cast<double>(s.dv)) -
               2.0 * sum_log / sum;
    t.smooth = true;
  }
  return t;
}

}  // namespace

double attachment_weight(std::size_t degree, double alpha) {
  if (degree == 0) return alpha == 0.0 ? 1.0 : 0.0;
  return std::pow(static_cast<double>(degree), alpha);
}

double cba_conditional(const CbaModel& m, const NeighborhoodSubgraph& nb) {
  const auto d = degrees_without_focus(nb);
  double sum = 0.0;
  for (auto x : d) sum += attachment_weight(x, m.alpha);
  if (sum <= 0.0) return 0.0;
  return attachment_weight(d[nb.focus.u], m.alpha) * attachment_weight(d[nb.focus.v], m.alpha) /
         (sum * sum);
}

CbaLikelihood cba_likelihood(std::span<const LabeledSample> data) {
  CbaLikelihood lik;
  lik.samples.reserve(data.size());
  for (const auto& s : data) {
    const auto d = degrees_without_focus(s.neighborhood);
    std::map<std::size_t, std::size_t> hist;
    for (auto x : d) ++hist[x];
    lik.samples.push_back({d[s.neighborhood.focus.u], d[s.neighborhood.focus.v],
                           {hist.begin(), hist.end()}, s.label});
  }
  return lik;
}

double CbaLikelihood::value(double alpha) const {
  double total = 0.0;
  for (const auto& s : samples) {
    const double p = std::clamp(evaluate(s, alpha).p, kClip, 1.0 - kClip);
    total += s.label ? std::log(p) : std::log1p(-p);
  }
  return total;
}

double CbaLikelihood::derivative(double alpha) const {
  double total = 0.0;
  for (const auto& s : samples) {
    const auto t = evaluate(s, alpha);
    if (!t.smooth || t.p < kClip || t.p > 1.0 - kClip) continue;
    // d log p = dlog_p; d log(1 - p) = -p dlog_p / (1 - p)
    total += s.label ? t.dlog_p : -t.p * t.dlog_p / (1.0 - t.p);
  }
  return total;
}

CbaModel fit_cba(std::span<const LabeledSample> data, const AscentOptions& opts) {
  std::size_t positives = 0;
  for (const auto& s : data) positives += s.label ? 1 : 0;
  if (positives == 0 || positives == data.size()) {
    throw FitError("CBA fit needs both linked and unlinked pairs");
  }
  const auto lik = cba_likelihood(data);
  auto deriv = [&](double a) { return lik.derivative(a); };
  Objective f{
      [&](const Eigen::VectorXd& x) { return lik.value(x[0]); },
      [&](const Eigen::VectorXd& x) { return Eigen::VectorXd::Constant(1, lik.derivative(x[0])); },
      [&](const Eigen::VectorXd& x) {
        return Eigen::MatrixXd::Constant(1, 1, curvature_from_gradient(deriv, x[0]));
      }};
  auto result = maximize(f, Eigen::VectorXd::Zero(1), opts);
  if (!std::isfinite(result.value)) throw FitError("CBA likelihood diverged");
  return CbaModel{result.x[0]};
}

}  // namespace fiedler
