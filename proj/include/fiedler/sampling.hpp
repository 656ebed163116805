#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fiedler/graph.hpp"

namespace fiedler {

struct SamplingConfig {
  std::size_t train_size = 10000;
  std::size_t test_size = 10000;
  std::uint64_t seed = 42;
  std::size_t min_positives = 10;
  // When set, this fraction of each split is drawn uniformly from the edge set
  // and the rest uniformly from the non-edges.
  std::optional<double> stratify_fraction;
};

struct Dataset {
  std::vector<LabeledSample> train;
  std::vector<LabeledSample> test;
  std::vector<std::string> warnings;
};

enum class Split { train, test };

/// Pair draws only (no neighborhoods). Train pairs come from the
/// "train-sampling" substream; test pairs from "test-sampling" and never
/// repeat a train pair. Throws DomainError if the sizes exceed C(n, 2).
std::vector<NodePair> sample_pairs(const UndirectedGraph& g, const SamplingConfig& cfg, Split split);

std::vector<LabeledSample> build_samples(const UndirectedGraph& g, const std::vector<NodePair>& pairs,
                                         std::size_t workers = 1);

/// One split with neighborhoods attached. Warnings about scarce positives are appended to `warnings`.
std::vector<LabeledSample> sample_split(const UndirectedGraph& g, const SamplingConfig& cfg, Split split,
                                        std::size_t workers = 1,
                                        std::vector<std::string>* warnings = nullptr);

Dataset sample_dataset(const UndirectedGraph& g, const SamplingConfig& cfg, std::size_t workers = 1);

std::size_t count_positives(const std::vector<LabeledSample>& samples);

}  // namespace fiedler
