#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fiedler/experiment.hpp"

namespace fiedler {

// Persisted model: the fitted parameters plus the sampling configuration that
// produced the training split, so evaluation can draw a disjoint test split.
struct ModelDocument {
  AnyModel model;
  SamplingConfig sampling;
  std::size_t train_positives = 0;

  friend bool operator==(const ModelDocument& a, const ModelDocument& b) {
    return a.model == b.model && a.train_positives == b.train_positives &&
           a.sampling.train_size == b.sampling.train_size && a.sampling.test_size == b.sampling.test_size &&
           a.sampling.seed == b.sampling.seed && a.sampling.stratify_fraction == b.sampling.stratify_fraction &&
           a.sampling.min_positives == b.sampling.min_positives;
  }
};

/// JSON text. Doubles are written in shortest round-trip form, so
/// read_model(write_model(d)) reproduces every value bit for bit.
std::string write_model(const ModelDocument& doc);
/// Throws std::runtime_error on malformed or unknown documents.
ModelDocument read_model(std::string_view text);

void save_model(const std::filesystem::path& path, const ModelDocument& doc);
ModelDocument load_model(const std::filesystem::path& path);

}  // namespace fiedler
