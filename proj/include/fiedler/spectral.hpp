#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "fiedler/errors.hpp"
#include "fiedler/graph.hpp"

namespace fiedler {

/// Unnormalized Laplacian L = D - A, dense.
struct LaplacianMatrix {
  Eigen::MatrixXd values;

  std::size_t order() const noexcept { return static_cast<std::size_t>(values.rows()); }
};

LaplacianMatrix laplacian(const UndirectedGraph& g);

// Sorted Laplacian eigenvalues. zero_multiplicity comes from the component
// count of the source graph, not from thresholding the computed values.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::size_t zero_multiplicity = 0;
};

/// All eigenvalues of a dense Laplacian, ascending.
std::vector<double> eigenvalues(const LaplacianMatrix& l);

Spectrum spectrum(const UndirectedGraph& g);

struct SpectralOptions {
  // Orders up to this size use a full dense decomposition; larger ones use Lanczos.
  std::size_t dense_threshold = 2048;
  double lanczos_tolerance = 1e-9;  // relative, on the Ritz residual
  std::size_t lanczos_max_basis = 400;
  std::size_t lanczos_max_restarts = 50;
};

/// lambda_{index} of g's Laplacian, 1-based. Indices within the null space
/// (index <= component count) return exactly 0.
double laplacian_eigenvalue(const UndirectedGraph& g, std::size_t index,
                            const SpectralOptions& opts = {});

/// lambda_{k+1} with k the number of connected components. Throws DomainError
/// for an edgeless graph.
double fiedler_value(const UndirectedGraph& g, const SpectralOptions& opts = {});

/// lambda_{k+1}(G+) - lambda_{k+1}(G-) with k = components of G+.
/// Does not depend on whether p is currently an edge of g.
double fiedler_delta(const UndirectedGraph& g, NodePair p, const SpectralOptions& opts = {});

enum class ClosedFormShape { path, cycle };

/// Fiedler value of a path (n >= 2) or cycle (n >= 3) on n nodes.
double closed_form_fiedler(ClosedFormShape shape, std::size_t n);

namespace detail {

struct LanczosResult {
  double value = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;
};

// Smallest eigenvalue of L restricted to the orthogonal complement of the
// component indicator vectors, i.e. lambda_{k+1} for a graph with k components.
LanczosResult lanczos_smallest_nonzero(const UndirectedGraph& g, const Components& comps,
                                       const SpectralOptions& opts);

}  // namespace detail

}  // namespace fiedler
