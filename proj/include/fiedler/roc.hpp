#pragma once

#include <iosfwd>
#include <span>
#include <vector>

namespace fiedler {

struct ScoredLabel {
  bool label = false;
  double score = 0.0;
};

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

/// Threshold sweep from the highest score down; tied scores move together.
/// Throws DomainError unless both classes are present.
std::vector<RocPoint> roc_curve(std::span<const ScoredLabel> scored);

/// Trapezoidal area under an ROC polyline.
double auc(std::span<const RocPoint> roc);

/// P(score_pos > score_neg) + 0.5 P(tie), counted over all label pairs.
double mann_whitney_auc(std::span<const ScoredLabel> scored);

/// CSV with header "fpr,tpr" and 9 decimals per value.
void write_roc_csv(std::ostream& out, std::span<const RocPoint> roc);

}  // namespace fiedler
