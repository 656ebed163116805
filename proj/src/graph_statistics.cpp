#include "fiedler/graph_statistics.hpp"

#include <cmath>

#include "fiedler/errors.hpp"

namespace fiedler {

double binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(c);
}

double alternating_binomial_sum(std::size_t d, double rho) noexcept {
  // rho^2 * sum_{k>=2} C(d,k) (-1/rho)^k = rho^2 ((1 - 1/rho)^d - 1 + d/rho)
  if (d < 2) return 0.0;
  const double q = 1.0 - 1.0 / rho;
  const double dd = static_cast<double>(d);
  return rho * rho * (std::pow(q, dd) - 1.0 + dd / rho);
}

double alternating_sum(std::span<const double> counts_from_k2, double rho) noexcept {
  double total = 0.0;
  double scale = 1.0;  // rho^(k-2)
  for (std::size_t i = 0; i < counts_from_k2.size(); ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    total += sign * counts_from_k2[i] / scale;
    scale *= rho;
  }
  return total;
}

GraphStatistics graph_statistics(const UndirectedGraph& g, std::size_t kmax, double rho) {
  if (kmax < 2) throw DomainError("graph_statistics: kmax must be at least 2");
  if (!(rho >= 1.0)) throw DomainError("graph_statistics: rho must be at least 1");

  GraphStatistics s;
  s.kmax = kmax;
  s.rho = rho;
  s.edges = static_cast<double>(g.edge_count());
  s.k_stars.assign(kmax - 1, 0.0);
  s.k_triangles.assign(kmax, 0.0);

  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto d = g.degree(u);
    for (std::size_t k = 2; k <= kmax; ++k) s.k_stars[k - 2] += binomial(d, k);
    s.alt_stars += alternating_binomial_sum(d, rho);
  }

  double triangle_edge_incidences = 0.0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (v < u) continue;
      const auto c = common_neighbor_count(g, u, v);
      triangle_edge_incidences += static_cast<double>(c);
      for (std::size_t k = 2; k <= kmax; ++k) s.k_triangles[k - 1] += binomial(c, k);
      s.alt_triangles += alternating_binomial_sum(c, rho);
    }
  }
  // each triangle is seen once from each of its three edges
  s.triangles = triangle_edge_incidences / 3.0;
  s.k_triangles[0] = s.triangles;
  return s;
}

namespace {

long double alternating_binomial_sum_ext(std::size_t d, long double rho) noexcept {
  if (d < 2) return 0.0L;
  const long double dd = static_cast<long double>(d);
  return rho * rho * (std::pow(1.0L - 1.0L / rho, dd) - 1.0L + dd / rho);
}

}  // namespace

AlternatingTotals alternating_totals(const UndirectedGraph& g, double rho) {
  if (!(rho >= 1.0)) throw DomainError("alternating_totals: rho must be at least 1");
  const long double r = rho;
  AlternatingTotals t;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    t.stars += alternating_binomial_sum_ext(g.degree(u), r);
    for (NodeId v : g.neighbors(u)) {
      if (v > u) t.triangles += alternating_binomial_sum_ext(common_neighbor_count(g, u, v), r);
    }
  }
  return t;
}

}  // namespace fiedler
