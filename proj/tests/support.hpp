#pragma once

#include <cstdint>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/rng.hpp"

namespace fiedler::gen {

// Erdos-Renyi style generator for property tests.
inline UndirectedGraph random_graph(Rng& rng, std::size_t n, double p) {
  std::vector<NodePair> edges;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (uniform_unit(rng) < p) edges.emplace_back(a, b);
    }
  }
  return UndirectedGraph(n, edges);
}

inline NodePair random_pair(Rng& rng, std::size_t n) {
  const auto a = static_cast<NodeId>(uniform_below(rng, n));
  auto b = static_cast<NodeId>(uniform_below(rng, n - 1));
  if (b >= a) ++b;
  return NodePair(a, b);
}

inline double uniform_in(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform_unit(rng); }

inline UndirectedGraph path_graph(std::size_t n) {
  std::vector<NodePair> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return UndirectedGraph(n, e);
}

inline UndirectedGraph cycle_graph(std::size_t n) {
  std::vector<NodePair> e;
  for (NodeId i = 0; i < n; ++i) e.emplace_back(i, static_cast<NodeId>((i + 1) % n));
  return UndirectedGraph(n, e);
}

// Ring lattice plus community chords: a clustered graph where linked pairs
// share neighbors. Used where a real co-authorship graph is not at hand.
inline UndirectedGraph clustered_graph(std::size_t n, std::size_t community, double p_in, double p_out,
                                       std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NodePair> e;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      const bool same = a / community == b / community;
      if (uniform_unit(rng) < (same ? p_in : p_out)) e.emplace_back(a, b);
    }
  }
  return UndirectedGraph(n, e);
}

}  // namespace fiedler::gen
