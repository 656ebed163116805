#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "fiedler/spectral.hpp"

namespace fiedler::detail {

namespace {

void apply_laplacian(const UndirectedGraph& g, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  for (NodeId i = 0; i < g.node_count(); ++i) {
    double acc = static_cast<double>(g.degree(i)) * x[i];
    for (NodeId j : g.neighbors(i)) acc -= x[j];
    y[i] = acc;
  }
}

// Removes the component of x in the span of the (orthogonal) component indicators.
void deflate(const Components& comps, Eigen::VectorXd& x) {
  std::vector<double> sum(comps.count, 0.0);
  std::vector<double> size(comps.count, 0.0);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    sum[comps.label[i]] += x[i];
    size[comps.label[i]] += 1.0;
  }
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] -= sum[comps.label[i]] / size[comps.label[i]];
}

}  // namespace

LanczosResult lanczos_smallest_nonzero(const UndirectedGraph& g, const Components& comps,
                                       const SpectralOptions& opts) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  const auto rank = n - static_cast<Eigen::Index>(comps.count);
  if (rank <= 0) throw DomainError("graph has no edges, so no nonzero eigenvalue");
  const Eigen::Index max_basis =
      std::min<Eigen::Index>(rank, static_cast<Eigen::Index>(std::max<std::size_t>(opts.lanczos_max_basis, 2)));

  // Fixed, data-independent start vector keeps results reproducible.
  Eigen::VectorXd start(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    start[i] = 1.0 + static_cast<double>((static_cast<std::uint64_t>(i) * 2654435761ULL) % 1000) / 997.0;
  }
  deflate(comps, start);
  start.normalize();

  Eigen::MatrixXd basis(n, max_basis);
  Eigen::VectorXd w(n);
  std::vector<double> alpha;
  std::vector<double> beta;
  std::size_t total_iterations = 0;
  double last_residual = std::numeric_limits<double>::infinity();

  for (std::size_t restart = 0; restart <= opts.lanczos_max_restarts; ++restart) {
    alpha.clear();
    beta.clear();
    basis.col(0) = start;

    for (Eigen::Index j = 0; j < max_basis; ++j) {
      ++total_iterations;
      apply_laplacian(g, basis.col(j), w);
      const double a = basis.col(j).dot(w);
      alpha.push_back(a);
      // full reorthogonalization, applied twice
      for (int pass = 0; pass < 2; ++pass) {
        auto q = basis.leftCols(j + 1);
        w -= q * (q.transpose() * w);
      }
      deflate(comps, w);
      const double b = w.norm();

      const bool exhausted = (j + 1 == max_basis) || b < 1e-13;
      if (!exhausted && (j + 1) % 8 != 0) {
        beta.push_back(b);
        basis.col(j + 1) = w / b;
        continue;
      }

      const Eigen::Index m = j + 1;
      Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
      Eigen::VectorXd sub(std::max<Eigen::Index>(m - 1, 0));
      for (Eigen::Index i = 0; i + 1 < m; ++i) sub[i] = beta[i];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      if (tri.info() != Eigen::Success) {
        throw NumericError("Lanczos tridiagonal eigensolver failed", total_iterations, last_residual);
      }
      const double theta = tri.eigenvalues()[0];
      const Eigen::VectorXd y = tri.eigenvectors().col(0);
      last_residual = b * std::abs(y[m - 1]);

      const bool invariant = b < 1e-13 || m == rank;
      if (invariant || last_residual <= opts.lanczos_tolerance * std::max(std::abs(theta), 1e-12)) {
        return {theta, total_iterations, last_residual};
      }
      if (j + 1 == max_basis) {
        start = basis.leftCols(m) * y;
        deflate(comps, start);
        start.normalize();
        break;
      }
      beta.push_back(b);
      basis.col(j + 1) = w / b;
    }
  }
  throw NumericError("Lanczos did not converge", total_iterations, last_residual);
}

}  // namespace fiedler::detail
