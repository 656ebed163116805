#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fiedler/cba.hpp"
#include "fiedler/cws.hpp"
#include "fiedler/erg.hpp"
#include "fiedler/frg.hpp"
#include "fiedler/roc.hpp"
#include "fiedler/sampling.hpp"

namespace fiedler {

enum class ModelKind { frg, mrg, hrg, cws, cba };

std::string_view to_string(ModelKind kind);
/// Throws std::invalid_argument for unknown names.
ModelKind parse_model_kind(std::string_view name);
inline constexpr ModelKind kAllModels[] = {ModelKind::frg, ModelKind::mrg, ModelKind::hrg,
                                           ModelKind::cws, ModelKind::cba};

using AnyModel = std::variant<FrgModel, ErgModel, CwsModel, CbaModel>;

ModelKind kind_of(const AnyModel& m);

struct Hyperparameters {
  std::optional<double> bandwidth;
  std::size_t kmax = 3;
  double rho = 2.0;
  bool halve_delta = false;
  SpectralOptions spectral;
  std::size_t workers = 1;
};

AnyModel train_model(ModelKind kind, std::span<const LabeledSample> train, const Hyperparameters& hp);

double score(const AnyModel& m, const NeighborhoodSubgraph& nb, const SpectralOptions& spectral = {});

/// Scores in input order, independent of the worker count.
std::vector<double> score_samples(const AnyModel& m, std::span<const LabeledSample> samples,
                                  const SpectralOptions& spectral, std::size_t workers);

struct ScoredPair {
  NodePair pair;
  bool label = false;
  double score = 0.0;
};

struct EvaluationResult {
  std::vector<ScoredPair> scored;
  std::vector<RocPoint> roc;
  double auc = 0.0;
};

EvaluationResult evaluate(const AnyModel& m, std::span<const LabeledSample> test,
                          const SpectralOptions& spectral, std::size_t workers);

struct ModelRun {
  ModelKind kind;
  std::optional<AnyModel> model;
  std::optional<EvaluationResult> result;
  std::string error;  // set when training or evaluation failed
  double train_seconds = 0.0;
  double evaluate_seconds = 0.0;
};

struct ExperimentReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  SamplingConfig sampling;
  std::size_t train_positives = 0;
  std::size_t test_positives = 0;
  std::vector<std::string> warnings;
  std::vector<ModelRun> runs;
};

/// Samples once, trains every model on the same split and evaluates all on the
/// same test split. A failing model is recorded and does not stop the others.
ExperimentReport run_experiment(const UndirectedGraph& g, const SamplingConfig& cfg,
                                std::span<const ModelKind> models, const Hyperparameters& hp);

/// Timings are wall-clock and therefore omitted unless requested.
nlohmann::ordered_json report_to_json(const ExperimentReport& r, bool include_timings);

/// Fixed-width comparison table, one row per model.
std::string comparison_table(const ExperimentReport& r);

}  // namespace fiedler
