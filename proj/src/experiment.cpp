#include "fiedler/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "fiedler/parallel.hpp"

namespace fiedler {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::frg: return "frg";
    case ModelKind::mrg: return "mrg";
    case ModelKind::hrg: return "hrg";
    case ModelKind::cws: return "cws";
    case ModelKind::cba: return "cba";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  for (auto k : kAllModels) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown model kind '" + std::string(name) + "' (expected frg|mrg|hrg|cws|cba)");
}

ModelKind kind_of(const AnyModel& m) {
  struct Visitor {
    ModelKind operator()(const FrgModel&) const { return ModelKind::frg; }
    ModelKind operator()(const ErgModel& e) const {
      return e.variant == ErgVariant::markov ? ModelKind::mrg : ModelKind::hrg;
    }
    ModelKind operator()(const CwsModel&) const { return ModelKind::cws; }
    ModelKind operator()(const CbaModel&) const { return ModelKind::cba; }
  };
  return std::visit(Visitor{}, m);
}

AnyModel train_model(ModelKind kind, std::span<const LabeledSample> train, const Hyperparameters& hp) {
  switch (kind) {
    case ModelKind::frg:
      return train_frg(train, FrgTrainOptions{hp.bandwidth, hp.spectral, hp.workers});
    case ModelKind::mrg:
      return fit_erg(train, ErgVariant::markov, hp.kmax, hp.rho, hp.workers);
    case ModelKind::hrg:
      return fit_erg(train, ErgVariant::higher_order, hp.kmax, hp.rho, hp.workers);
    case ModelKind::cws: {
      CwsFitOptions opts;
      opts.halve_delta = hp.halve_delta;
      return fit_cws(train, opts);
    }
    case ModelKind::cba:
      return fit_cba(train);
  }
  throw std::invalid_argument("unknown model kind");
}

double score(const AnyModel& m, const NeighborhoodSubgraph& nb, const SpectralOptions& spectral) {
  struct Visitor {
    const NeighborhoodSubgraph& nb;
    const SpectralOptions& spectral;
    double operator()(const FrgModel& x) const { return frg_score(x, nb, spectral); }
    double operator()(const ErgModel& x) const { return erg_conditional(x, nb); }
    double operator()(const CwsModel& x) const { return cws_conditional(x, nb); }
    double operator()(const CbaModel& x) const { return cba_conditional(x, nb); }
  };
  return std::visit(Visitor{nb, spectral}, m);
}

std::vector<double> score_samples(const AnyModel& m, std::span<const LabeledSample> samples,
                                  const SpectralOptions& spectral, std::size_t workers) {
  std::vector<double> out(samples.size());
  parallel_for(samples.size(), workers,
               [&](std::size_t i) { out[i] = score(m, samples[i].neighborhood, spectral); });
  return out;
}

EvaluationResult evaluate(const AnyModel& m, std::span<const LabeledSample> test,
                          const SpectralOptions& spectral, std::size_t workers) {
  const auto scores = score_samples(m, test, spectral, workers);
  EvaluationResult r;
  std::vector<ScoredLabel> labels;
  r.scored.reserve(test.size());
  labels.reserve(test.size());
  for (std::size_t i = 0; i < test.size(); ++i) {
    r.scored.push_back({test[i].pair, test[i].label, scores[i]});
    labels.push_back({test[i].label, scores[i]});
  }
  r.roc = roc_curve(labels);
  r.auc = auc(r.roc);
  return r;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ExperimentReport run_experiment(const UndirectedGraph& g, const SamplingConfig& cfg,
                                std::span<const ModelKind> models, const Hyperparameters& hp) {
  ExperimentReport r;
  r.nodes = g.node_count();
  r.edges = g.edge_count();
  r.sampling = cfg;
  if (models.empty()) return r;

  auto data = sample_dataset(g, cfg, hp.workers);
  r.train_positives = count_positives(data.train);
  r.test_positives = count_positives(data.test);
  r.warnings = data.warnings;

  for (auto kind : models) {
    ModelRun run{kind, std::nullopt, std::nullopt, {}, 0.0, 0.0};
    try {
      auto start = std::chrono::steady_clock::now();
      run.model = train_model(kind, data.train, hp);
      run.train_seconds = seconds_since(start);
      start = std::chrono::steady_clock::now();
      run.result = evaluate(*run.model, data.test, hp.spectral, hp.workers);
      run.evaluate_seconds = seconds_since(start);
    } catch (const std::exception& e) {
      run.error = e.what();
    }
    r.runs.push_back(std::move(run));
  }
  return r;
}

nlohmann::ordered_json report_to_json(const ExperimentReport& r, bool include_timings) {
  nlohmann::ordered_json j;
  j["dataset"] = {{"nodes", r.nodes}, {"edges", r.edges}};
  j["sampling"] = {{"seed", r.sampling.seed},
                   {"train_size", r.sampling.train_size},
                   {"test_size", r.sampling.test_size},
                   {"train_positives", r.train_positives},
                   {"test_positives", r.test_positives}};
  if (r.sampling.stratify_fraction) j["sampling"]["stratify_fraction"] = *r.sampling.stratify_fraction;
  j["warnings"] = r.warnings;
  auto models = nlohmann::ordered_json::array();
  for (const auto& run : r.runs) {
    nlohmann::ordered_json m;
    m["model"] = to_string(run.kind);
    if (run.result) {
      m["auc"] = run.result->auc;
      m["roc_points"] = run.result->roc.size();
    } else {
      m["error"] = run.error;
    }
    if (include_timings) {
      m["train_seconds"] = run.train_seconds;
      m["evaluate_seconds"] = run.evaluate_seconds;
    }
    models.push_back(std::move(m));
  }
  j["models"] = std::move(models);
  return j;
}

std::string comparison_table(const ExperimentReport& r) {
  std::string out = "model       auc\n";
  char buf[96];
  for (const auto& run : r.runs) {
    if (run.result) {
      std::snprintf(buf, sizeof buf, "%-6s %9.4f\n", std::string(to_string(run.kind)).c_str(), run.result->auc);
    } else {
      std::snprintf(buf, sizeof buf, "%-6s    failed\n", std::string(to_string(run.kind)).c_str());
    }
    out += buf;
  }
  return out;
}

}  // namespace fiedler
