#include "fiedler/sampling.hpp"

#include <cmath>
#include <unordered_set>

#include "fiedler/errors.hpp"
#include "fiedler/parallel.hpp"
#include "fiedler/rng.hpp"

namespace fiedler {

namespace {

using PairSet = std::unordered_set<NodePair, NodePairHash>;

NodePair uniform_pair(const UndirectedGraph& g, Rng& rng) {
  const auto n = g.node_count();
  for (;;) {
    const auto a = static_cast<NodeId>(uniform_below(rng, n));
    const auto b = static_cast<NodeId>(uniform_below(rng, n));
    if (a != b) return NodePair(a, b);
  }
}

std::vector<NodePair> draw(const UndirectedGraph& g, std::size_t count, Rng& rng,
                           std::optional<double> stratify, PairSet& taken) {
  std::vector<NodePair> out;
  out.reserve(count);
  if (!stratify) {
    while (out.size() < count) {
      auto p = uniform_pair(g, rng);
      if (taken.insert(p).second) out.push_back(p);
    }
    return out;
  }

  const double f = *stratify;
  if (!(f > 0.0 && f < 1.0)) throw DomainError("stratify fraction must lie in (0, 1)");
  const auto positives = static_cast<std::size_t>(std::llround(f * static_cast<double>(count)));
  const auto edges = g.edges();
  std::size_t available = 0;
  for (const auto& e : edges) available += taken.contains(e) ? 0 : 1;
  if (positives > available) throw DomainError("not enough edges for the requested stratified split");

  while (out.size() < positives) {
    const auto& e = edges[uniform_below(rng, edges.size())];
    if (taken.insert(e).second) out.push_back(e);
  }
  while (out.size() < count) {
    auto p = uniform_pair(g, rng);
    if (g.has_edge(p.u, p.v)) continue;
    if (taken.insert(p).second) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<NodePair> sample_pairs(const UndirectedGraph& g, const SamplingConfig& cfg, Split split) {
  const auto n = static_cast<double>(g.node_count());
  const double total_pairs = n * (n - 1.0) / 2.0;
  if (g.node_count() < 2) throw DomainError("sampling needs a graph with at least two nodes");
  if (cfg.train_size == 0 || cfg.test_size == 0) throw DomainError("split sizes must be at least 1");
  if (static_cast<double>(cfg.train_size) + static_cast<double>(cfg.test_size) > total_pairs) {
    throw DomainError("requested " + std::to_string(cfg.train_size + cfg.test_size) +
                      " pairs but the graph has only " + std::to_string(static_cast<long long>(total_pairs)));
  }

  PairSet taken;
  auto train_rng = make_rng(cfg.seed, "train-sampling");
  auto train = draw(g, cfg.train_size, train_rng, cfg.stratify_fraction, taken);
  if (split == Split::train) return train;
  auto test_rng = make_rng(cfg.seed, "test-sampling");
  return draw(g, cfg.test_size, test_rng, cfg.stratify_fraction, taken);
}

std::vector<LabeledSample> build_samples(const UndirectedGraph& g, const std::vector<NodePair>& pairs,
                                         std::size_t workers) {
  std::vector<LabeledSample> out(pairs.size());
  parallel_for(pairs.size(), workers, [&](std::size_t i) { out[i] = make_sample(g, pairs[i]); });
  return out;
}

std::size_t count_positives(const std::vector<LabeledSample>& samples) {
  std::size_t n = 0;
  for (const auto& s : samples) n += s.label ? 1 : 0;
  return n;
}

std::vector<LabeledSample> sample_split(const UndirectedGraph& g, const SamplingConfig& cfg, Split split,
                                        std::size_t workers, std::vector<std::string>* warnings) {
  auto samples = build_samples(g, sample_pairs(g, cfg, split), workers);
  const auto positives = count_positives(samples);
  if (split == Split::train && positives < cfg.min_positives && warnings) {
    warnings->push_back("training split has only " + std::to_string(positives) +
                        " linked pairs (minimum " + std::to_string(cfg.min_positives) + ")");
  }
  return samples;
}

Dataset sample_dataset(const UndirectedGraph& g, const SamplingConfig& cfg, std::size_t workers) {
  Dataset d;
  d.train = sample_split(g, cfg, Split::train, workers, &d.warnings);
  d.test = sample_split(g, cfg, Split::test, workers, &d.warnings);
  return d;
}

}  // namespace fiedler
