#include "fiedler/brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fiedler/errors.hpp"

namespace fiedler {

double brute_force_erg_conditional(const ErgModel& m, std::size_t vertex_count,
                                   std::span<const NodePair> context, NodePair focus) {
  if (vertex_count > kBruteForceMaxVertices) {
    throw DomainError("brute-force enumeration is limited to " +
                      std::to_string(kBruteForceMaxVertices) + " vertices");
  }
  if (focus.v >= vertex_count) throw DomainError("focus pair outside the vertex set");

  std::vector<NodePair> slots;
  for (NodeId a = 0; a < vertex_count; ++a) {
    for (NodeId b = a + 1; b < vertex_count; ++b) slots.emplace_back(a, b);
  }
  const std::size_t focus_bit = static_cast<std::size_t>(
      std::find(slots.begin(), slots.end(), focus) - slots.begin());

  std::size_t context_mask = 0;
  for (const auto& e : context) {
    auto it = std::find(slots.begin(), slots.end(), e);
    if (it == slots.end()) throw DomainError("context edge outside the vertex set");
    context_mask |= std::size_t{1} << (it - slots.begin());
  }
  context_mask &= ~(std::size_t{1} << focus_bit);

  const Eigen::Map<const Eigen::VectorXd> theta(m.theta.data(), static_cast<Eigen::Index>(m.theta.size()));
  const std::size_t configurations = std::size_t{1} << slots.size();
  std::vector<double> energy(configurations);
  for (std::size_t mask = 0; mask < configurations; ++mask) {
    std::vector<NodePair> edges;
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (mask & (std::size_t{1} << b)) edges.push_back(slots[b]);
    }
    const auto stats = graph_statistics(UndirectedGraph(vertex_count, edges), m.kmax, m.rho);
    energy[mask] = theta.dot(erg_potentials(stats, m.variant));
  }

  // log Z by log-sum-exp over every configuration
  const double peak = *std::max_element(energy.begin(), energy.end());
  double z = 0.0;
  for (double e : energy) z += std::exp(e - peak);
  const double log_z = peak + std::log(z);

  const double p_on = std::exp(energy[context_mask | (std::size_t{1} << focus_bit)] - log_z);
  const double p_off = std::exp(energy[context_mask] - log_z);
  return p_on / (p_on + p_off);
}

}  // namespace fiedler
