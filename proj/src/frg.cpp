#include "fiedler/frg.hpp"

#include "fiedler/errors.hpp"
#include "fiedler/parallel.hpp"

namespace fiedler {

double fit_prior(const std::vector<bool>& labels) {
  if (labels.empty()) throw DomainError("fit_prior: no labels");
  std::size_t positives = 0;
  for (bool x : labels) positives += x ? 1 : 0;
  return static_cast<double>(positives) / static_cast<double>(labels.size());
}

std::vector<double> neighborhood_deltas(std::span<const LabeledSample> data,
                                        const SpectralOptions& spectral, std::size_t workers) {
  std::vector<double> deltas(data.size());
  parallel_for(data.size(), workers, [&](std::size_t i) {
    deltas[i] = fiedler_delta(data[i].neighborhood.local, data[i].neighborhood.focus, spectral);
  });
  return deltas;
}

FrgModel fit_frg(std::span<const double> deltas, std::span<const LabeledSample> data,
                 std::optional<double> bandwidth) {
  if (deltas.size() != data.size()) throw DomainError("fit_frg: deltas and samples differ in length");
  std::vector<double> pos;
  std::vector<double> neg;
  for (std::size_t i = 0; i < data.size(); ++i) (data[i].label ? pos : neg).push_back(deltas[i]);
  if (pos.empty()) {
    throw FitError("training data has no positive (linked) pairs; increase the training size "
                   "or use stratified sampling");
  }
  if (neg.empty()) throw FitError("training data has no negative (unlinked) pairs");

  FrgModel m;
  m.prior_edge = static_cast<double>(pos.size()) / static_cast<double>(data.size());
  const double h_pos = bandwidth ? *bandwidth : select_bandwidth(pos);
  const double h_neg = bandwidth ? *bandwidth : select_bandwidth(neg);
  m.kde_pos = KernelDensityEstimate(std::move(pos), h_pos);
  m.kde_neg = KernelDensityEstimate(std::move(neg), h_neg);
  return m;
}

FrgModel train_frg(std::span<const LabeledSample> data, const FrgTrainOptions& opts) {
  auto deltas = neighborhood_deltas(data, opts.spectral, opts.workers);
  return fit_frg(deltas, data, opts.bandwidth);
}

double frg_conditional(const FrgModel& m, double delta) {
  const double num = m.kde_pos(delta) * m.prior_edge;
  const double den = num + m.kde_neg(delta) * (1.0 - m.prior_edge);
  if (den <= 0.0) return m.prior_edge;
  return num / den;
}

double frg_score(const FrgModel& m, const NeighborhoodSubgraph& nb, const SpectralOptions& spectral) {
  return frg_conditional(m, fiedler_delta(nb.local, nb.focus, spectral));
}

double frg_score(const FrgModel& m, const UndirectedGraph& g, NodePair p,
                 const SpectralOptions& spectral) {
  return frg_score(m, neighborhood_subgraph(g, p), spectral);
}

}  // namespace fiedler
