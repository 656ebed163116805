#include "fiedler/kde.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fiedler/errors.hpp"

namespace fiedler {

double epanechnikov(double t) noexcept {
  return std::abs(t) <= 1.0 ? 0.75 * (1.0 - t * t) : 0.0;
}

namespace {

// Linear interpolation between order statistics.
double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

double select_bandwidth(std::span<const double> samples) {
  if (samples.empty()) throw DomainError("select_bandwidth: no samples");
  const auto m = static_cast<double>(samples.size());
  if (samples.size() == 1) return kMinBandwidth;

  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= m;
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (m - 1.0));

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double iqr = quantile(sorted, 0.75) - quantile(sorted, 0.25);

  const double sigma = iqr > 0.0 ? std::min(sd, iqr / 1.349) : sd;
  const double h = kBandwidthConstant * sigma * std::pow(m, -0.2);
  return std::max(h, kMinBandwidth);
}

KernelDensityEstimate::KernelDensityEstimate(std::vector<double> points, double bandwidth)
    : points_(std::move(points)), bandwidth_(bandwidth) {
  if (points_.empty()) throw DomainError("kernel density estimate needs at least one point");
  if (!(bandwidth_ > 0.0) || !std::isfinite(bandwidth_)) {
    throw DomainError("bandwidth must be positive and finite, got " + std::to_string(bandwidth_));
  }
  std::sort(points_.begin(), points_.end());
}

double KernelDensityEstimate::operator()(double x) const {
  // only points within one bandwidth of x contribute
  auto first = std::lower_bound(points_.begin(), points_.end(), x - bandwidth_);
  auto last = std::upper_bound(first, points_.end(), x + bandwidth_);
  double sum = 0.0;
  for (auto it = first; it != last; ++it) sum += epanechnikov((x - *it) / bandwidth_);
  return sum / (static_cast<double>(points_.size()) * bandwidth_);
}

}  // namespace fiedler
