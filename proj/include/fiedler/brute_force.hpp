#pragma once

#include <cstddef>
#include <span>

#include "fiedler/erg.hpp"

namespace fiedler {

inline constexpr std::size_t kBruteForceMaxVertices = 5;

/// P(X_focus = 1 | all other pairs as in `context`) under the joint
/// Boltzmann distribution, with the partition function obtained by
/// enumerating every graph on `vertex_count` nodes. Any focus edge present in
/// `context` is ignored. Throws DomainError above kBruteForceMaxVertices.
double brute_force_erg_conditional(const ErgModel& m, std::size_t vertex_count,
                                   std::span<const NodePair> context, NodePair focus);

}  // namespace fiedler
