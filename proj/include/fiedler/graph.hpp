#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fiedler {

using NodeId = std::uint32_t;

/// Raised by the edge-list reader; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Unordered pair of distinct nodes, stored as (min, max).
struct NodePair {
  NodeId u = 0;
  NodeId v = 1;

  NodePair() = default;
  NodePair(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("NodePair: endpoints must differ");
  }

  friend bool operator==(const NodePair&, const NodePair&) = default;
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

struct NodePairHash {
  std::size_t operator()(const NodePair& p) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{p.u} << 32) | p.v);
  }
};

// Immutable simple undirected graph in compressed adjacency form.
// Neighbor lists are sorted ascending.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  // Self-loops are dropped and repeated pairs (in either orientation) collapse.
  UndirectedGraph(std::size_t node_count, std::span<const NodePair> edges);
  UndirectedGraph(std::size_t node_count, std::initializer_list<std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::size_t degree(NodeId u) const;
  std::span<const NodeId> neighbors(NodeId u) const;
  bool has_edge(NodeId u, NodeId v) const;

  /// Every edge once, as canonical pairs in lexicographic order.
  std::vector<NodePair> edges() const;

 private:
  void check(NodeId u) const;
  void build(std::size_t node_count, std::vector<NodePair> edges);

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

/// G+ for the pair; returns a copy equal to g if the edge is already present.
UndirectedGraph with_edge(const UndirectedGraph& g, NodePair p);
/// G- for the pair; returns a copy equal to g if the edge is absent.
UndirectedGraph without_edge(const UndirectedGraph& g, NodePair p);
UndirectedGraph toggle_edge(const UndirectedGraph& g, NodePair p);

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> label;  // per node, in [0, count)
};

Components connected_components(const UndirectedGraph& g);

std::size_t common_neighbor_count(const UndirectedGraph& g, NodeId u, NodeId v);

// Graph read from an edge list together with the external id of each dense id.
struct LoadedGraph {
  UndirectedGraph graph;
  std::vector<std::int64_t> external_ids;
  std::unordered_map<std::int64_t, NodeId> index;
  std::size_t records = 0;  // non-comment lines, including self-loops and repeats

  NodeId node(std::int64_t external_id) const;
};

LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list(const std::filesystem::path& path);

// Subgraph induced by {u, v} and the neighbors of either endpoint.
// The focus pair always maps to local ids 0 (for p.u) and 1 (for p.v);
// remaining nodes follow in ascending parent id.
struct NeighborhoodSubgraph {
  UndirectedGraph local;
  NodePair focus{0, 1};
  std::vector<NodeId> id_map;  // local id -> parent id
};

NeighborhoodSubgraph neighborhood_subgraph(const UndirectedGraph& g, NodePair p);

struct LabeledSample {
  NodePair pair;
  bool label = false;
  NeighborhoodSubgraph neighborhood;
};

LabeledSample make_sample(const UndirectedGraph& g, NodePair p);

}  // namespace fiedler
