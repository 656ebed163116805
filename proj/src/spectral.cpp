#include "fiedler/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace fiedler {

LaplacianMatrix laplacian(const UndirectedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  LaplacianMatrix l{Eigen::MatrixXd::Zero(n, n)};
  for (NodeId u = 0; u < g.node_count(); ++u) {
    l.values(u, u) = static_cast<double>(g.degree(u));
    for (NodeId v : g.neighbors(u)) l.values(u, v) = -1.0;
  }
  return l;
}

std::vector<double> eigenvalues(const LaplacianMatrix& l) {
  if (l.order() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l.values, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("dense symmetric eigensolver did not converge", 0, 0.0);
  }
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

Spectrum spectrum(const UndirectedGraph& g) {
  return Spectrum{eigenvalues(laplacian(g)), connected_components(g).count};
}

namespace {

// Induced subgraph on the nodes carrying component label `which`.
UndirectedGraph component_graph(const UndirectedGraph& g, const Components& comps,
                                std::size_t which) {
  std::vector<NodeId> local(g.node_count(), 0);
  std::size_t count = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (comps.label[u] == which) local[u] = static_cast<NodeId>(count++);
  }
  std::vector<NodePair> edges;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (comps.label[u] != which) continue;
    for (NodeId v : g.neighbors(u)) {
      if (u < v) edges.emplace_back(local[u], local[v]);
    }
  }
  return UndirectedGraph(count, edges);
}

double connected_fiedler(const UndirectedGraph& c, const SpectralOptions& opts) {
  if (c.node_count() <= opts.dense_threshold) {
    return eigenvalues(laplacian(c))[1];
  }
  Components single{1, std::vector<std::size_t>(c.node_count(), 0)};
  return detail::lanczos_smallest_nonzero(c, single, opts).value;
}

// Smallest nonzero eigenvalue: the Laplacian is block diagonal over
// components, so this is the minimum of the per-component Fiedler values.
double smallest_nonzero(const UndirectedGraph& g, const Components& comps,
                        const SpectralOptions& opts) {
  if (comps.count == 1) return connected_fiedler(g, opts);

  std::vector<std::size_t> sizes(comps.count, 0);
  for (auto label : comps.label) ++sizes[label];

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < comps.count; ++c) {
    if (sizes[c] < 2) continue;
    if (sizes[c] == 2) {
      best = std::min(best, 2.0);
      continue;
    }
    best = std::min(best, connected_fiedler(component_graph(g, comps, c), opts));
  }
  if (!std::isfinite(best)) throw DomainError("graph has no edges, so no nonzero eigenvalue");
  return best;
}

}  // namespace

double laplacian_eigenvalue(const UndirectedGraph& g, std::size_t index,
                            const SpectralOptions& opts) {
  if (index == 0 || index > g.node_count()) {
    throw DomainError("eigenvalue index " + std::to_string(index) + " outside [1, " +
                      std::to_string(g.node_count()) + "]");
  }
  auto comps = connected_components(g);
  if (index <= comps.count) return 0.0;
  if (index == comps.count + 1) return smallest_nonzero(g, comps, opts);
  return eigenvalues(laplacian(g))[index - 1];
}

double fiedler_value(const UndirectedGraph& g, const SpectralOptions& opts) {
  if (g.edge_count() == 0) throw DomainError("fiedler_value: graph has no edges");
  auto comps = connected_components(g);
  return smallest_nonzero(g, comps, opts);
}

double fiedler_delta(const UndirectedGraph& g, NodePair p, const SpectralOptions& opts) {
  const auto plus = with_edge(g, p);
  const auto minus = without_edge(g, p);
  const auto k = connected_components(plus).count;
  const double hi = laplacian_eigenvalue(plus, k + 1, opts);
  const double lo = laplacian_eigenvalue(minus, k + 1, opts);
  // adding an edge cannot lower any Laplacian eigenvalue; only rounding can make this negative
  return std::max(0.0, hi - lo);
}

double closed_form_fiedler(ClosedFormShape shape, std::size_t n) {
  const double pi = std::numbers::pi;
  switch (shape) {
    case ClosedFormShape::path:
      if (n < 2) throw DomainError("path needs at least 2 nodes");
      return 2.0 * (1.0 - std::cos(pi / static_cast<double>(n)));
    case ClosedFormShape::cycle:
      if (n < 3) throw DomainError("cycle needs at least 3 nodes");
      return 2.0 * (1.0 - std::cos(2.0 * pi / static_cast<double>(n)));
  }
  throw DomainError("unknown shape");
}

}  // namespace fiedler
