#include "ptm/channel.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace ptm {

KrausSet::KrausSet(QubitCount n, std::vector<CMat> ops)
    : n_(n), ops_(std::move(ops)) {
  if (ops_.empty()) throw DimensionError("KrausSet: needs at least one operator");
  for (const auto& a : ops_) {
    require_square(a, "KrausSet");
    if (a.rows() != n_.hilbert_dim())
      throw DimensionError("KrausSet: operator dimension does not match n");
  }
}

double ChoiMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<CMat> es(data, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

std::pair<CMat, double> apply_kraus(const KrausSet& ch,
                                    const DensityMatrix& rho) {
  if (!(ch.qubits() == rho.qubits()))
    throw DimensionError("apply_kraus: dimension mismatch");
  CMat out = CMat::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (const auto& a : ch.ops()) out += a * rho.matrix() * a.adjoint();
  const double weight = out.trace().real();
  if (weight < -kSpectralTol || weight > 1.0 + kSpectralTol)
    throw NotTraceDecreasing("apply_kraus: weight " + std::to_string(weight) +
                             " outside [0,1]");
  return {out, weight};
}

GateClass classify_kraus(const KrausSet& ch) {
  const int dim = ch.qubits().hilbert_dim();
  CMat total = CMat::Zero(dim, dim);
  for (const auto& a : ch.ops()) total += a.adjoint() * a;
  if ((total - CMat::Identity(dim, dim)).cwiseAbs().maxCoeff() < kAlgebraTol)
    return GateClass::TracePreserving;
  Eigen::SelfAdjointEigenSolver<CMat> es(total, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().maxCoeff() > 1.0 + kSpectralTol)
    throw NotTraceDecreasing(
        "sum A^dag A exceeds the identity, largest eigenvalue " +
        std::to_string(es.eigenvalues().maxCoeff()));
  return GateClass::TraceDecreasing;
}

namespace {

// Shared column kernel: column nu of the gate holds the Pauli coefficients
// of sum_j A_j sigma_nu A_j^dag. Returns the largest imaginary residue seen.
double gate_columns(const std::vector<CMat>& ops, QubitCount n, RMat& out) {
  const int dim_op = n.operator_dim();
  const int dim_h = n.hilbert_dim();
  const auto& basis = pauli_basis(n);
  const double scale = 1.0 / double(dim_h);
  double max_imag = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : max_imag)
  for (int nu = 0; nu < dim_op; ++nu) {
    CMat mapped = CMat::Zero(dim_h, dim_h);
    for (const auto& a : ops) mapped += a * basis[nu] * a.adjoint();
    for (int mu = 0; mu < dim_op; ++mu) {
      const complexd e = scale * (basis[mu] * mapped).trace();
      max_imag = std::max(max_imag, std::abs(e.imag()));
      out(mu, nu) = e.real();
    }
  }
  return max_imag;
}

}  // namespace

TransferGate kraus_to_gate(const KrausSet& ch) {
  const GateClass cls = classify_kraus(ch);
  RMat matrix(ch.qubits().operator_dim(), ch.qubits().operator_dim());
  const double residue = gate_columns(ch.ops(), ch.qubits(), matrix);
  if (residue > kAlgebraTol)
    throw ImaginaryResidue("kraus_to_gate: imaginary residue " +
                           std::to_string(residue));
  return {ch.qubits(), std::move(matrix), cls};
}

TransferGate unitary_to_gate(const CMat& u) {
  require_square(u, "unitary_to_gate");
  const int dim = int(u.rows());
  if ((u.adjoint() * u - CMat::Identity(dim, dim)).cwiseAbs().maxCoeff() >
      kAlgebraTol)
    throw NonUnitary("unitary_to_gate: U^dag U != I");
  int n = 1;
  while ((1 << n) < dim) ++n;
  if ((1 << n) != dim) throw DimensionError("unitary_to_gate: dim not 2^n");
  KrausSet ch(QubitCount(n), {u});
  RMat matrix(ch.qubits().operator_dim(), ch.qubits().operator_dim());
  const double residue = gate_columns(ch.ops(), ch.qubits(), matrix);
  if (residue > kAlgebraTol)
    throw ImaginaryResidue("unitary_to_gate: imaginary residue " +
                           std::to_string(residue));
  return {ch.qubits(), std::move(matrix), GateClass::TracePreserving};
}

ChoiMatrix choi_of(const KrausSet& ch) {
  const int dim = ch.qubits().hilbert_dim();
  CMat choi = CMat::Zero(dim * dim, dim * dim);
  for (const auto& a : ch.ops()) {
    Eigen::Map<const CVec> v(a.data(), dim * dim);
    choi += v * v.adjoint();
  }
  return {choi};
}

ChoiMatrix choi_of(const TransferGate& g) {
  const QubitCount n = g.n;
  const int dim_op = n.operator_dim();
  const int dim_h = n.hilbert_dim();
  const auto& basis = pauli_basis(n);
  const double scale = 1.0 / double(dim_h);
  // Images of the basis under the gate: M_nu = sum_mu E_{mu nu} sigma_mu.
  std::vector<CMat> images(dim_op);
  for (int nu = 0; nu < dim_op; ++nu) {
    CMat m = CMat::Zero(dim_h, dim_h);
    for (int mu = 0; mu < dim_op; ++mu)
      if (g.matrix(mu, nu) != 0.0) m += g.matrix(mu, nu) * basis[mu];
    images[nu] = m;
  }
  CMat choi = CMat::Zero(dim_op, dim_op);
#pragma omp parallel for collapse(2) schedule(static)
  for (int a = 0; a < dim_h; ++a)
    for (int b = 0; b < dim_h; ++b) {
      CMat block = CMat::Zero(dim_h, dim_h);
      for (int nu = 0; nu < dim_op; ++nu) {
        const complexd w = basis[nu](b, a);  // (sigma_nu^T)_{a b}
        if (w != complexd(0.0, 0.0)) block += w * images[nu];
      }
      choi.block(a * dim_h, b * dim_h, dim_h, dim_h) = scale * block;
    }
  return {choi};
}

bool is_completely_positive(const KrausSet& ch) {
  return choi_of(ch).min_eigenvalue() >= -kSpectralTol;
}

bool is_completely_positive(const TransferGate& g) {
  return choi_of(g).min_eigenvalue() >= -kSpectralTol;
}

RVec apply_gate(const TransferGate& g, const RVec& coeffs) {
  if (coeffs.size() != g.matrix.cols())
    throw DimensionError("apply_gate: dimension mismatch");
  return g.matrix * coeffs;
}

PauliState apply_gate(const TransferGate& g, const PauliState& s) {
  if (!(g.n == s.qubits()))
    throw DimensionError("apply_gate: dimension mismatch");
  return PauliState(g.n, g.matrix * s.coeffs());
}

namespace serial {

RMat kraus_to_gate_matrix(const std::vector<CMat>& ops, QubitCount n) {
  const int dim_op = n.operator_dim();
  const auto& basis = pauli_basis(n);
  const double scale = 1.0 / double(n.hilbert_dim());
  RMat out(dim_op, dim_op);
  for (int mu = 0; mu < dim_op; ++mu)
    for (int nu = 0; nu < dim_op; ++nu) {
      complexd e = 0.0;
      for (const auto& a : ops)
        e += (basis[mu] * a * basis[nu] * a.adjoint()).trace();
      out(mu, nu) = (scale * e).real();
    }
  return out;
}

CMat choi_from_gate(const TransferGate& g) {
  const QubitCount n = g.n;
  const int dim_op = n.operator_dim();
  const auto& basis = pauli_basis(n);
  const double scale = 1.0 / double(n.hilbert_dim());
  CMat choi = CMat::Zero(dim_op, dim_op);
  for (int mu = 0; mu < dim_op; ++mu)
    for (int nu = 0; nu < dim_op; ++nu)
      if (g.matrix(mu, nu) != 0.0)
        choi += scale * g.matrix(mu, nu) *
                Eigen::kroneckerProduct(basis[nu].transpose(), basis[mu]);
  return choi;
}

}  // namespace serial

}  // namespace ptm
