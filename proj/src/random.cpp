#include "ptm/random.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace ptm {

CMat ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat g(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) g(r, c) = complexd(gauss(rng), gauss(rng));
  return g;
}

CMat random_unitary(int dim, Rng& rng) {
  CMat g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution does not depend on QR details.
  for (int i = 0; i < dim; ++i) {
    complexd d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

DensityMatrix random_density(QubitCount n, Rng& rng) {
  CMat g = ginibre(n.hilbert_dim(), n.hilbert_dim(), rng);
  CMat rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix(rho);
}

std::vector<CMat> random_trace_preserving_kraus(QubitCount n, int m,
                                                Rng& rng) {
  const int dim = n.hilbert_dim();
  std::vector<CMat> ops;
  ops.reserve(m);
  CMat total = CMat::Zero(dim, dim);
  for (int j = 0; j < m; ++j) {
    ops.push_back(ginibre(dim, dim, rng));
    total += ops.back().adjoint() * ops.back();
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(total);
  CMat inv_sqrt = es.eigenvectors() *
                  es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                  es.eigenvectors().adjoint();
  for (auto& a : ops) a = a * inv_sqrt;
  return ops;
}

}  // namespace ptm
