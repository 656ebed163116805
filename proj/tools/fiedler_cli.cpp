// Command-line front end: graph statistics, model training, evaluation and
// single-pair prediction. Summary output is "key=value" tokens on stdout;
// diagnostics go to stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fiedler/experiment.hpp"
#include "fiedler/model_io.hpp"
#include "fiedler/parallel.hpp"

namespace {

using namespace fiedler;

struct CommonFlags {
  std::string graph;
  std::size_t dense_threshold = 2048;
  std::size_t workers = default_workers();

  SpectralOptions spectral() const {
    SpectralOptions s;
    s.dense_threshold = dense_threshold;
    return s;
  }
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--graph", f.graph, "SNAP-style edge list")->required()->check(CLI::ExistingFile);
  cmd->add_option("--dense-threshold", f.dense_threshold, "largest order solved with a dense eigensolver")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  cmd->add_option("--workers", f.workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
}

struct SamplingFlags {
  std::size_t train = 10000;
  std::size_t test = 10000;
  std::uint64_t seed = 42;
  std::size_t min_positives = 10;
  std::optional<double> stratify;

  SamplingConfig config() const {
    return SamplingConfig{train, test, seed, min_positives, stratify};
  }
};

void add_sampling(CLI::App* cmd, SamplingFlags& f) {
  cmd->add_option("--train", f.train, "training pairs")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--test", f.test, "test pairs")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "master seed for all sampling")->capture_default_str();
  cmd->add_option("--min-positives", f.min_positives, "warn below this many linked training pairs")
      ->capture_default_str();
  cmd->add_option("--stratify", f.stratify, "draw this fraction of each split from the edge set")
      ->check(CLI::Range(0.0, 1.0));
}

struct ModelFlags {
  std::string model = "frg";
  std::optional<double> bandwidth;
  std::size_t kmax = 3;
  double rho = 2.0;
  bool halve_delta = false;
};

void add_model(CLI::App* cmd, ModelFlags& f) {
  cmd->add_option("--bandwidth", f.bandwidth, "fixed FRG kernel bandwidth (default: per-class rule of thumb)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--kmax", f.kmax, "largest k-star order for the Markov ERG")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  cmd->add_option("--rho", f.rho, "damping of the alternating statistics")
      ->capture_default_str()
      ->check(CLI::Range(1.0, std::numeric_limits<double>::max()));
  cmd->add_flag("--halve-delta", f.halve_delta, "divide the CWS lattice degree estimate by 2");
}

Hyperparameters hyperparameters(const ModelFlags& m, const CommonFlags& c) {
  Hyperparameters hp;
  hp.bandwidth = m.bandwidth;
  hp.kmax = m.kmax;
  hp.rho = m.rho;
  hp.halve_delta = m.halve_delta;
  hp.spectral = c.spectral();
  hp.workers = c.workers;
  return hp;
}

std::string fmt(double x, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

void print_parameters(const AnyModel& model) {
  struct Visitor {
    void operator()(const FrgModel& m) const {
      std::cout << "prior=" << fmt(m.prior_edge) << " bandwidth_pos=" << fmt(m.kde_pos.bandwidth())
                << " bandwidth_neg=" << fmt(m.kde_neg.bandwidth()) << "\n";
    }
    void operator()(const ErgModel& m) const {
      std::cout << "theta=";
      for (std::size_t i = 0; i < m.theta.size(); ++i) std::cout << (i ? "," : "") << fmt(m.theta[i]);
      std::cout << "\n";
    }
    void operator()(const CwsModel& m) const {
      std::cout << "delta=" << m.delta << " theta_beta=" << fmt(m.theta_beta) << " beta=" << fmt(m.beta())
                << "\n";
    }
    void operator()(const CbaModel& m) const { std::cout << "alpha=" << fmt(m.alpha) << "\n"; }
  };
  std::visit(Visitor{}, model);
}

int cmd_stats(const CommonFlags& c) {
  const auto loaded = load_edge_list(std::filesystem::path(c.graph));
  const auto& g = loaded.graph;
  const double mean_degree =
      g.node_count() == 0 ? 0.0 : 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
  std::cout << "nodes=" << g.node_count() << " edges=" << g.edge_count() << " mean_degree=" << fmt(mean_degree)
            << " components=" << connected_components(g).count << " records=" << loaded.records << "\n";
  return 0;
}

int cmd_train(const CommonFlags& c, const SamplingFlags& s, const ModelFlags& m, const std::string& out) {
  const auto kind = parse_model_kind(m.model);
  const auto g = load_edge_list(std::filesystem::path(c.graph)).graph;
  const auto cfg = s.config();
  std::vector<std::string> warnings;
  const auto train = sample_split(g, cfg, Split::train, c.workers, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  const auto positives = count_positives(train);

  AnyModel model;
  try {
    model = train_model(kind, train, hyperparameters(m, c));
  } catch (const FitError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "hint: increase --train or pass --stratify to force linked pairs into the split\n";
    return 1;
  }
  save_model(out, ModelDocument{model, cfg, positives});
  std::cout << "model=" << to_string(kind) << " train=" << train.size() << " positives=" << positives << "\n";
  print_parameters(model);
  return 0;
}

int cmd_evaluate(const CommonFlags& c, const std::string& model_file, const std::optional<std::size_t>& test,
                 const std::string& roc_path) {
  auto doc = load_model(model_file);
  if (test) doc.sampling.test_size = *test;
  const auto g = load_edge_list(std::filesystem::path(c.graph)).graph;
  const auto samples = sample_split(g, doc.sampling, Split::test, c.workers);
  const auto positives = count_positives(samples);
  if (positives == 0 || positives == samples.size()) {
    std::cerr << "error: test split has a single class (" << positives << " linked of " << samples.size()
              << "); increase --test or use a stratified model\n";
    return 1;
  }
  const auto result = evaluate(doc.model, samples, c.spectral(), c.workers);
  if (!roc_path.empty()) {
    std::ofstream out(roc_path);
    if (!out) throw std::runtime_error("cannot write ROC file '" + roc_path + "'");
    write_roc_csv(out, result.roc);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", result.auc);
  std::cout << "model=" << to_string(kind_of(doc.model)) << " test=" << samples.size() << " positives=" << positives
            << "\n"
            << "auc=" << buf << "\n";
  return 0;
}

int cmd_predict(const CommonFlags& c, const std::string& model_file, std::int64_t u, std::int64_t v) {
  const auto doc = load_model(model_file);
  const auto loaded = load_edge_list(std::filesystem::path(c.graph));
  NodeId a = 0;
  NodeId b = 0;
  try {
    a = loaded.node(u);
    b = loaded.node(v);
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (a == b) {
    std::cerr << "error: the two endpoints must differ\n";
    return 1;
  }
  const auto nb = neighborhood_subgraph(loaded.graph, NodePair(a, b));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", score(doc.model, nb, c.spectral()));
  std::cout << "probability=" << buf << "\n";
  return 0;
}

int cmd_run(const CommonFlags& c, const SamplingFlags& s, const ModelFlags& m, const std::vector<std::string>& names,
            const std::string& report_path, bool timings) {
  std::vector<ModelKind> kinds;
  for (const auto& n : names) kinds.push_back(parse_model_kind(n));
  const auto g = load_edge_list(std::filesystem::path(c.graph)).graph;
  const auto report = run_experiment(g, s.config(), kinds, hyperparameters(m, c));
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  const auto json = report_to_json(report, timings).dump(2) + "\n";
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write report '" + report_path + "'");
    out << json;
  }
  std::cout << "nodes=" << report.nodes << " edges=" << report.edges << " train_positives=" << report.train_positives
            << " test_positives=" << report.test_positives << "\n";
  int status = 0;
  for (const auto& run : report.runs) {
    if (run.result) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", run.result->auc);
      std::cout << "model=" << to_string(run.kind) << " auc=" << buf << "\n";
    } else {
      std::cerr << "error: " << to_string(run.kind) << ": " << run.error << "\n";
      status = 1;
    }
  }
  std::cerr << comparison_table(report);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fiedler-delta conditional edge models and link-prediction benchmark"};
  app.require_subcommand(1);

  CommonFlags common;
  SamplingFlags sampling;
  ModelFlags model;
  std::string out;
  std::string model_file;
  std::string roc_path;
  std::string report_path;
  std::optional<std::size_t> test_override;
  std::int64_t pu = 0;
  std::int64_t pv = 0;
  bool timings = false;
  std::vector<std::string> models{"frg", "mrg", "hrg", "cws", "cba"};

  auto* stats = app.add_subcommand("stats", "print node, edge and component counts");
  stats->add_option("--graph", common.graph, "SNAP-style edge list")->required();

  auto* train = app.add_subcommand("train", "sample a training split, fit a model, write it");
  add_common(train, common);
  add_sampling(train, sampling);
  add_model(train, model);
  train->add_option("--model", model.model, "frg|mrg|hrg|cws|cba")
      ->capture_default_str()
      ->check(CLI::IsMember({"frg", "mrg", "hrg", "cws", "cba"}));
  train->add_option("--out", out, "model file to write")->required();

  auto* eval = app.add_subcommand("evaluate", "score a disjoint test split, print AUC, optionally write ROC");
  add_common(eval, common);
  eval->add_option("--model-file", model_file, "model written by 'train'")->required()->check(CLI::ExistingFile);
  eval->add_option("--test", test_override, "override the stored test size")->check(CLI::PositiveNumber);
  eval->add_option("--roc", roc_path, "ROC curve CSV (fpr,tpr)");

  auto* predict = app.add_subcommand("predict", "conditional edge probability for one pair");
  add_common(predict, common);
  predict->add_option("--model-file", model_file, "model written by 'train'")->required()->check(CLI::ExistingFile);
  predict->add_option("--u", pu, "first endpoint (id as in the edge list)")->required();
  predict->add_option("--v", pv, "second endpoint (id as in the edge list)")->required();

  auto* run = app.add_subcommand("run", "train and evaluate several models on one shared split");
  add_common(run, common);
  add_sampling(run, sampling);
  add_model(run, model);
  run->add_option("--models", models, "comma-separated model list")->delimiter(',')->capture_default_str()
      ->check(CLI::IsMember({"frg", "mrg", "hrg", "cws", "cba"}));
  run->add_option("--report", report_path, "JSON report file");
  run->add_flag("--timings", timings, "include wall-clock timings in the report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*stats) return cmd_stats(common);
    if (*train) return cmd_train(common, sampling, model, out);
    if (*eval) return cmd_evaluate(common, model_file, test_override, roc_path);
    if (*predict) return cmd_predict(common, model_file, pu, pv);
    if (*run) return cmd_run(common, sampling, model, models, report_path, timings);
  } catch (const ParseError& e) {
    std::cerr << "error: malformed edge list: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
