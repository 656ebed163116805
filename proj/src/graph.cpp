#include "fiedler/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <queue>
#include <string_view>

namespace fiedler {

UndirectedGraph::UndirectedGraph(std::size_t node_count, std::span<const NodePair> edges) {
  build(node_count, std::vector<NodePair>(edges.begin(), edges.end()));
}

UndirectedGraph::UndirectedGraph(std::size_t node_count,
                                 std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  std::vector<NodePair> pairs;
  pairs.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a != b) pairs.emplace_back(a, b);
  }
  build(node_count, std::move(pairs));
}

void UndirectedGraph::build(std::size_t node_count, std::vector<NodePair> edges) {
  for (const auto& e : edges) {
    if (e.v >= node_count) throw std::out_of_range("edge endpoint exceeds node count");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  offsets_.assign(node_count + 1, 0);
  for (const auto& e : edges) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < node_count; ++i) offsets_[i + 1] += offsets_[i];

  targets_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges) {
    targets_[cursor[e.u]++] = e.v;
    targets_[cursor[e.v]++] = e.u;
  }
  for (std::size_t i = 0; i < node_count; ++i) {
    std::sort(targets_.begin() + offsets_[i], targets_.begin() + offsets_[i + 1]);
  }
}

void UndirectedGraph::check(NodeId u) const {
  if (u >= node_count()) {
    throw std::out_of_range("node id " + std::to_string(u) + " out of range (node_count " +
                            std::to_string(node_count()) + ")");
  }
}

std::size_t UndirectedGraph::degree(NodeId u) const {
  check(u);
  return offsets_[u + 1] - offsets_[u];
}

std::span<const NodeId> UndirectedGraph::neighbors(NodeId u) const {
  check(u);
  return {targets_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

bool UndirectedGraph::has_edge(NodeId u, NodeId v) const {
  auto nu = neighbors(u);
  check(v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<NodePair> UndirectedGraph::edges() const {
  std::vector<NodePair> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

UndirectedGraph with_edge(const UndirectedGraph& g, NodePair p) {
  auto e = g.edges();
  e.push_back(p);
  return UndirectedGraph(g.node_count(), e);
}

UndirectedGraph without_edge(const UndirectedGraph& g, NodePair p) {
  auto e = g.edges();
  std::erase(e, p);
  return UndirectedGraph(g.node_count(), e);
}

UndirectedGraph toggle_edge(const UndirectedGraph& g, NodePair p) {
  return g.has_edge(p.u, p.v) ? without_edge(g, p) : with_edge(g, p);
}

Components connected_components(const UndirectedGraph& g) {
  const std::size_t n = g.node_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  Components c;
  c.label.assign(n, unset);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (c.label[s] != unset) continue;
    c.label[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (NodeId y : g.neighbors(x)) {
        if (c.label[y] == unset) {
          c.label[y] = c.count;
          stack.push_back(y);
        }
      }
    }
    ++c.count;
  }
  return c;
}

std::size_t common_neighbor_count(const UndirectedGraph& g, NodeId u, NodeId v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

NodeId LoadedGraph::node(std::int64_t external_id) const {
  auto it = index.find(external_id);
  if (it == index.end()) {
    throw std::out_of_range("unknown node id " + std::to_string(external_id));
  }
  return it->second;
}

namespace {

bool parse_int(std::string_view tok, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
  LoadedGraph out;
  std::vector<NodePair> edges;
  auto intern = [&](std::int64_t ext) {
    auto [it, inserted] = out.index.try_emplace(ext, static_cast<NodeId>(out.external_ids.size()));
    if (inserted) out.external_ids.push_back(ext);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two node ids, got " + std::to_string(tokens.size()) +
                                    " tokens");
    }
    std::int64_t a = 0;
    std::int64_t b = 0;
    if (!parse_int(tokens[0], a) || !parse_int(tokens[1], b)) {
      throw ParseError(line_no, "non-integer node id in '" + line + "'");
    }
    ++out.records;
    NodeId ia = intern(a);
    NodeId ib = intern(b);
    if (ia != ib) edges.emplace_back(ia, ib);
  }
  if (in.bad()) throw std::runtime_error("read error on edge list stream");
  out.graph = UndirectedGraph(out.external_ids.size(), edges);
  return out;
}

LoadedGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path.string() + "'");
  return load_edge_list(in);
}

NeighborhoodSubgraph neighborhood_subgraph(const UndirectedGraph& g, NodePair p) {
  NeighborhoodSubgraph sub;
  auto nu = g.neighbors(p.u);
  auto nv = g.neighbors(p.v);

  std::vector<NodeId> rest;
  rest.reserve(nu.size() + nv.size());
  std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(rest));
  std::erase_if(rest, [&](NodeId x) { return x == p.u || x == p.v; });

  sub.id_map.reserve(rest.size() + 2);
  sub.id_map.push_back(p.u);
  sub.id_map.push_back(p.v);
  sub.id_map.insert(sub.id_map.end(), rest.begin(), rest.end());

  // rest is sorted, so local ids of non-focus nodes are found by binary search
  auto local_of = [&](NodeId x) -> std::ptrdiff_t {
    if (x == p.u) return 0;
    if (x == p.v) return 1;
    auto it = std::lower_bound(rest.begin(), rest.end(), x);
    if (it == rest.end() || *it != x) return -1;
    return 2 + (it - rest.begin());
  };

  std::vector<NodePair> edges;
  for (std::size_t i = 0; i < sub.id_map.size(); ++i) {
    for (NodeId y : g.neighbors(sub.id_map[i])) {
      auto j = local_of(y);
      if (j > static_cast<std::ptrdiff_t>(i)) {
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
  }
  sub.local = UndirectedGraph(sub.id_map.size(), edges);
  sub.focus = NodePair(0, 1);
  return sub;
}

LabeledSample make_sample(const UndirectedGraph& g, NodePair p) {
  return LabeledSample{p, g.has_edge(p.u, p.v), neighborhood_subgraph(g, p)};
}

}  // namespace fiedler
