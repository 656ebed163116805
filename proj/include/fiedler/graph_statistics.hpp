#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fiedler/graph.hpp"

namespace fiedler {

/// Binomial coefficient C(n, k) as a double; 0 when k > n.
double binomial(std::size_t n, std::size_t k) noexcept;

/// Sum over k >= 2 of (-1)^k C(d, k) / rho^(k-2), in closed form.
double alternating_binomial_sum(std::size_t d, double rho) noexcept;

/// The literal alternating sum sum_{k>=2} (-1)^k counts[k-2] / rho^(k-2).
double alternating_sum(std::span<const double> counts_from_k2, double rho) noexcept;

// Subgraph counts used by the exponential random graph baselines.
//   k_stars[k-2]     = S_k = sum_u C(d_u, k),                    k = 2..kmax
//   k_triangles[k-1] = T_k; T_1 = triangles, and for k >= 2
//                      T_k = sum over edges {u,v} of C(cn(u,v), k), k = 1..kmax
//   alt_stars        = sum_{k=2}^{n-1} (-1)^k S_k / rho^(k-2)
//   alt_triangles    = sum_{k=2}^{n-2} (-1)^k T_k / rho^(k-2)
// The alternating sums run over every k (not only up to kmax) and are
// evaluated per node / per edge in closed form.
struct GraphStatistics {
  double edges = 0.0;
  std::vector<double> k_stars;
  double triangles = 0.0;
  std::vector<double> k_triangles;
  double alt_stars = 0.0;
  double alt_triangles = 0.0;
  double rho = 2.0;
  std::size_t kmax = 2;
};

/// Throws DomainError unless kmax >= 2 and rho >= 1.
GraphStatistics graph_statistics(const UndirectedGraph& g, std::size_t kmax, double rho);

/// Alternating k-star and k-triangle totals accumulated in long double.
struct AlternatingTotals {
  long double stars = 0.0L;
  long double triangles = 0.0L;
};

AlternatingTotals alternating_totals(const UndirectedGraph& g, double rho);

}  // namespace fiedler
