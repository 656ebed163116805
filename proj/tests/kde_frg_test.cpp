#include <gtest/gtest.h>

#include <cmath>

#include "fiedler/errors.hpp"
#include "fiedler/frg.hpp"
#include "fiedler/kde.hpp"
#include "fiedler/sampling.hpp"
#include "support.hpp"

using namespace fiedler;

namespace {

// Composite Simpson over [a, b] with `panels` (even) intervals.
template <class F>
double simpson(F f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

LabeledSample sample_of(const UndirectedGraph& g, NodePair p) { return make_sample(g, p); }

}  // namespace

TEST(Epanechnikov, Shape) {
  EXPECT_DOUBLE_EQ(epanechnikov(0.0), 0.75);
  EXPECT_DOUBLE_EQ(epanechnikov(0.5), 0.5625);
  EXPECT_DOUBLE_EQ(epanechnikov(1.0), 0.0);
  EXPECT_DOUBLE_EQ(epanechnikov(-1.5), 0.0);
  EXPECT_NEAR(simpson(epanechnikov, -1.0, 1.0, 2), 1.0, 1e-15);
}

TEST(Bandwidth, RuleOfThumb) {
  std::vector<double> x{1, 2, 3, 4, 5};
  EXPECT_NEAR(select_bandwidth(x), 2.519804761044027, 1e-12);
}

TEST(Bandwidth, ZeroSpreadFallsBackToSd) {
  std::vector<double> x{0, 0, 0, 0, 1};
  EXPECT_NEAR(select_bandwidth(x), 0.7600879438489058, 1e-12);
  std::vector<double> same{0.3, 0.3, 0.3};
  EXPECT_DOUBLE_EQ(select_bandwidth(same), kMinBandwidth);
  std::vector<double> one{1.7};
  EXPECT_DOUBLE_EQ(select_bandwidth(one), kMinBandwidth);
  EXPECT_THROW(select_bandwidth(std::vector<double>{}), DomainError);
}

TEST(Kde, SinglePointIsScaledKernel) {
  KernelDensityEstimate k({0.5}, 0.25);
  EXPECT_DOUBLE_EQ(k(0.5), 3.0);
  EXPECT_DOUBLE_EQ(k(0.75), 0.0);
  EXPECT_DOUBLE_EQ(k(0.625), 0.75 * 0.75 / 0.25);
  EXPECT_DOUBLE_EQ(k.support_min(), 0.25);
  EXPECT_THROW(KernelDensityEstimate({1.0}, 0.0), DomainError);
  EXPECT_THROW(KernelDensityEstimate({}, 1.0), DomainError);
}

TEST(Kde, IntegratesToOne) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> pts;
    const auto m = 1 + uniform_below(rng, 60);
    for (std::size_t i = 0; i < m; ++i) pts.push_back(gen::uniform_in(rng, 0.0, 2.0));
    KernelDensityEstimate k(pts, select_bandwidth(pts));
    const double mass = simpson(k, k.support_min(), k.support_max(), 10000);
    EXPECT_NEAR(mass, 1.0, 1e-6) << "m=" << m << " h=" << k.bandwidth();
  }
}

TEST(Frg, PriorIsPositiveFraction) {
  EXPECT_DOUBLE_EQ(fit_prior({true, false, false, false}), 0.25);
  EXPECT_THROW(fit_prior({}), DomainError);
}

TEST(Frg, BayesInversion) {
  FrgModel m{0.2, KernelDensityEstimate({1.0}, 0.5), KernelDensityEstimate({0.0}, 0.5)};
  // at 0.75: f+ = 0.75 * 0.75 / 0.5, f- = 0 -> certain edge
  EXPECT_DOUBLE_EQ(frg_conditional(m, 0.75), 1.0);
  EXPECT_DOUBLE_EQ(frg_conditional(m, -0.25), 0.0);
  // both densities equal at 0.5 -> posterior equals the prior
  EXPECT_NEAR(frg_conditional(m, 0.5), 0.2, 1e-15);
  // outside both supports
  EXPECT_DOUBLE_EQ(frg_conditional(m, 5.0), 0.2);
}

TEST(Frg, ComplementsSumToOne) {
  Rng rng(8);
  std::vector<double> pos;
  std::vector<double> neg;
  for (int i = 0; i < 30; ++i) pos.push_back(gen::uniform_in(rng, 0.5, 2.0));
  for (int i = 0; i < 200; ++i) neg.push_back(gen::uniform_in(rng, 0.0, 1.0));
  FrgModel m{0.1, KernelDensityEstimate(pos, select_bandwidth(pos)), KernelDensityEstimate(neg, select_bandwidth(neg))};
  for (int i = 0; i < 1000; ++i) {
    const double d = gen::uniform_in(rng, -0.5, 2.5);
    const double p1 = frg_conditional(m, d);
    const double num0 = m.kde_neg(d) * (1 - m.prior_edge);
    const double num1 = m.kde_pos(d) * m.prior_edge;
    const double p0 = num0 + num1 > 0 ? num0 / (num0 + num1) : 1 - m.prior_edge;
    EXPECT_NEAR(p1 + p0, 1.0, 1e-12);
    EXPECT_GE(p1, 0.0);
    EXPECT_LE(p1, 1.0);
  }
}

TEST(Frg, TrainRequiresBothClasses) {
  UndirectedGraph g(4, {{0, 1}});
  std::vector<LabeledSample> only_neg{sample_of(g, NodePair(2, 3)), sample_of(g, NodePair(0, 2))};
  try {
    train_frg(only_neg);
    FAIL() << "expected FitError";
  } catch (const FitError& e) {
    EXPECT_NE(std::string(e.what()).find("stratified"), std::string::npos);
  }
  std::vector<LabeledSample> only_pos{sample_of(g, NodePair(0, 1))};
  EXPECT_THROW(train_frg(only_pos), FitError);
}

TEST(Frg, TrainedDensitiesAndScores) {
  auto g = gen::clustered_graph(120, 12, 0.5, 0.01, 3);
  SamplingConfig cfg;
  cfg.train_size = 1500;
  cfg.test_size = 10;
  cfg.stratify_fraction = 0.1;
  auto train = sample_split(g, cfg, Split::train);
  auto m = train_frg(train);
  EXPECT_NEAR(m.prior_edge, static_cast<double>(count_positives(train)) / train.size(), 0.0);
  EXPECT_NEAR(simpson(m.kde_pos, m.kde_pos.support_min(), m.kde_pos.support_max(), 10000), 1.0, 1e-6);
  EXPECT_NEAR(simpson(m.kde_neg, m.kde_neg.support_min(), m.kde_neg.support_max(), 10000), 1.0, 1e-6);

  // Scores do not depend on whether the queried pair is currently linked.
  for (std::size_t i = 0; i < 50; ++i) {
    const auto p = train[i].pair;
    EXPECT_EQ(frg_score(m, with_edge(g, p), p), frg_score(m, without_edge(g, p), p));
  }

  FrgTrainOptions fixed;
  fixed.bandwidth = 0.05;
  auto mf = train_frg(train, fixed);
  EXPECT_DOUBLE_EQ(mf.kde_pos.bandwidth(), 0.05);
  EXPECT_DOUBLE_EQ(mf.kde_neg.bandwidth(), 0.05);
}

TEST(Frg, DeltasIndependentOfWorkerCount) {
  auto g = gen::clustered_graph(80, 10, 0.4, 0.02, 4);
  SamplingConfig cfg;
  cfg.train_size = 400;
  cfg.test_size = 1;
  auto train = sample_split(g, cfg, Split::train);
  EXPECT_EQ(neighborhood_deltas(train, {}, 1), neighborhood_deltas(train, {}, 4));
}
