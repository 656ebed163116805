#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/kde.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

/// Fraction of positive labels.
double fit_prior(const std::vector<bool>& labels);

// Fiedler random graph: edge prior plus class-conditional densities of the
// Fiedler delta.
struct FrgModel {
  double prior_edge = 0.5;
  KernelDensityEstimate kde_pos;
  KernelDensityEstimate kde_neg;

  friend bool operator==(const FrgModel&, const FrgModel&) = default;
};

struct FrgTrainOptions {
  std::optional<double> bandwidth;  // overrides the per-class rule of thumb
  SpectralOptions spectral;
  std::size_t workers = 1;
};

/// Fiedler delta of each sample's focus pair within its neighborhood, in input order.
std::vector<double> neighborhood_deltas(std::span<const LabeledSample> data,
                                        const SpectralOptions& spectral, std::size_t workers);

/// Fits prior and per-class densities from precomputed deltas.
FrgModel fit_frg(std::span<const double> deltas, std::span<const LabeledSample> data,
                 std::optional<double> bandwidth = std::nullopt);

/// Throws FitError if either class is absent.
FrgModel train_frg(std::span<const LabeledSample> data, const FrgTrainOptions& opts = {});

/// Posterior P(X = 1 | delta). Returns the prior where both densities vanish.
double frg_conditional(const FrgModel& m, double delta);

double frg_score(const FrgModel& m, const NeighborhoodSubgraph& nb,
                 const SpectralOptions& spectral = {});
double frg_score(const FrgModel& m, const UndirectedGraph& g, NodePair p,
                 const SpectralOptions& spectral = {});

}  // namespace fiedler
