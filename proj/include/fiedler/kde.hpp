#pragma once

#include <span>
#include <vector>

namespace fiedler {

/// Epanechnikov kernel: 3/4 (1 - t^2) on |t| <= 1, zero elsewhere.
double epanechnikov(double t) noexcept;

inline constexpr double kBandwidthConstant = 2.345;
inline constexpr double kMinBandwidth = 1e-4;

/// Rule-of-thumb bandwidth C * sigma * m^(-1/5) with sigma = min(sd, IQR/1.349),
/// falling back to sd when the IQR is zero and floored at kMinBandwidth.
double select_bandwidth(std::span<const double> samples);

// Fixed-bandwidth Epanechnikov density estimate over raw sample points.
class KernelDensityEstimate {
 public:
  KernelDensityEstimate() = default;
  KernelDensityEstimate(std::vector<double> points, double bandwidth);

  double operator()(double x) const;
  double density(double x) const { return (*this)(x); }

  /// Sample points in ascending order.
  const std::vector<double>& points() const noexcept { return points_; }
  double bandwidth() const noexcept { return bandwidth_; }
  double support_min() const { return points_.front() - bandwidth_; }
  double support_max() const { return points_.back() + bandwidth_; }

  friend bool operator==(const KernelDensityEstimate&, const KernelDensityEstimate&) = default;

 private:
  std::vector<double> points_;
  double bandwidth_ = 1.0;
};

}  // namespace fiedler
