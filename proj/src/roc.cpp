#include "fiedler/roc.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "fiedler/errors.hpp"

namespace fiedler {

namespace {

std::pair<double, double> class_counts(std::span<const ScoredLabel> scored) {
  double pos = 0.0;
  double neg = 0.0;
  for (const auto& s : scored) (s.label ? pos : neg) += 1.0;
  if (pos == 0.0 || neg == 0.0) throw DomainError("ROC analysis needs both positive and negative labels");
  return {pos, neg};
}

}  // namespace

std::vector<RocPoint> roc_curve(std::span<const ScoredLabel> scored) {
  const auto [pos, neg] = class_counts(scored);
  std::vector<ScoredLabel> sorted(scored.begin(), scored.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ScoredLabel& a, const ScoredLabel& b) { return a.score > b.score; });

  std::vector<RocPoint> roc{{0.0, 0.0}};
  double tp = 0.0;
  double fp = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j].score == sorted[i].score) {
      (sorted[j].label ? tp : fp) += 1.0;
      ++j;
    }
    roc.push_back({fp / neg, tp / pos});
    i = j;
  }
  return roc;
}

double auc(std::span<const RocPoint> roc) {
  double area = 0.0;
  for (std::size_t i = 1; i < roc.size(); ++i) {
    area += (roc[i].fpr - roc[i - 1].fpr) * (roc[i].tpr + roc[i - 1].tpr) * 0.5;
  }
  return area;
}

double mann_whitney_auc(std::span<const ScoredLabel> scored) {
  const auto [pos, neg] = class_counts(scored);
  // rank-sum with mid-ranks for ties
  std::vector<ScoredLabel> sorted(scored.begin(), scored.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ScoredLabel& a, const ScoredLabel& b) { return a.score < b.score; });
  double rank_sum = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    double tied_pos = 0.0;
    while (j < sorted.size() && sorted[j].score == sorted[i].score) {
      tied_pos += sorted[j].label ? 1.0 : 0.0;
      ++j;
    }
    const double mid_rank = 0.5 * static_cast<double>(i + 1 + j);
    rank_sum += tied_pos * mid_rank;
    i = j;
  }
  return (rank_sum - pos * (pos + 1.0) / 2.0) / (pos * neg);
}

void write_roc_csv(std::ostream& out, std::span<const RocPoint> roc) {
  out << "fpr,tpr\n";
  char buf[64];
  for (const auto& p : roc) {
    std::snprintf(buf, sizeof buf, "%.9f,%.9f\n", p.fpr, p.tpr);
    out << buf;
  }
}

}  // namespace fiedler
