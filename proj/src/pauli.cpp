#include "ptm/pauli.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace ptm {

namespace {

const std::array<CMat, 4>& single_qubit_paulis() {
  static const std::array<CMat, 4> sigmas = [] {
    std::array<CMat, 4> s;
    const complexd i(0.0, 1.0);
    s[0] = CMat::Identity(2, 2);
    s[1] = CMat::Zero(2, 2);
    s[1](0, 1) = 1.0;
    s[1](1, 0) = 1.0;
    s[2] = CMat::Zero(2, 2);
    s[2](0, 1) = -i;
    s[2](1, 0) = i;
    s[3] = CMat::Zero(2, 2);
    s[3](0, 0) = 1.0;
    s[3](1, 1) = -1.0;
    return s;
  }();
  return sigmas;
}

}  // namespace

CMat pauli_operator(const MultiIndex& index, QubitCount n) {
  if (index.qubits() != n.value())
    throw DimensionError("pauli_operator: index does not match qubit count");
  const auto& sigmas = single_qubit_paulis();
  CMat result = sigmas[index.digit(0)];
  for (int i = 1; i < n.value(); ++i)
    result = Eigen::kroneckerProduct(result, sigmas[index.digit(i)]).eval();
  return result;
}

const std::vector<CMat>& pauli_basis(QubitCount n) {
  static std::array<std::vector<CMat>, kMaxQubits + 1> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto& basis = cache[n.value()];
  if (basis.empty()) {
    basis.reserve(n.operator_dim());
    for (int mu = 0; mu < n.operator_dim(); ++mu)
      basis.push_back(pauli_operator(MultiIndex(mu, n), n));
  }
  return basis;
}

complexd hs_inner(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("hs_inner: dimension mismatch");
  return (a.adjoint() * b).trace();
}

namespace {

QubitCount qubits_for_dim(Eigen::Index dim, const char* what) {
  for (int n = 1; n <= kMaxQubits; ++n)
    if ((Eigen::Index(1) << n) == dim) return QubitCount(n);
  throw DimensionError(std::string(what) + ": dimension " +
                       std::to_string(dim) + " is not 2^n with n <= " +
                       std::to_string(kMaxQubits));
}

void check_state_matrix(const CMat& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol)
    throw NotAState("density matrix is not Hermitian");
  if (std::abs(rho.trace() - complexd(1.0, 0.0)) > kAlgebraTol)
    throw NotAState("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<CMat> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kSpectralTol)
    throw NotAState("density matrix has a negative eigenvalue: " +
                    std::to_string(es.eigenvalues().minCoeff()));
}

}  // namespace

DensityMatrix::DensityMatrix(CMat data)
    : data_(std::move(data)), n_(qubits_for_dim(data_.rows(), "DensityMatrix")) {
  require_square(data_, "DensityMatrix");
  check_state_matrix(data_);
}

PauliState::PauliState(QubitCount n, RVec coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != n.operator_dim())
    throw DimensionError("PauliState: coefficient vector has wrong length");
  const double c0 = 1.0 / std::sqrt(double(n.hilbert_dim()));
  if (std::abs(coeffs_[0] - c0) > kAlgebraTol)
    throw NotAState("PauliState: coeffs[0] != 1/sqrt(2^n)");
  coeffs_[0] = c0;
  check_state_matrix(pauli_reconstruct(coeffs_, n_));
}

RVec PauliState::p_coeffs() const {
  return std::sqrt(double(n_.hilbert_dim())) * coeffs_;
}

PauliState density_to_pauli(const DensityMatrix& rho) {
  return PauliState(rho.qubits(),
                    operator_to_pauli(rho.matrix(), rho.qubits()));
}

CVec operator_to_pauli_complex(const CMat& a, QubitCount n) {
  if (a.rows() != n.hilbert_dim() || a.cols() != n.hilbert_dim())
    throw DimensionError("operator_to_pauli: dimension mismatch");
  const auto& basis = pauli_basis(n);
  const double scale = 1.0 / std::sqrt(double(n.hilbert_dim()));
  CVec coeffs(n.operator_dim());
  for (int mu = 0; mu < n.operator_dim(); ++mu)
    coeffs[mu] = scale * (basis[mu] * a).trace();
  return coeffs;
}

RVec operator_to_pauli(const CMat& a, QubitCount n) {
  return operator_to_pauli_complex(a, n).real();
}

CMat pauli_reconstruct(const CVec& coeffs, QubitCount n) {
  if (coeffs.size() != n.operator_dim())
    throw DimensionError("pauli_reconstruct: wrong coefficient count");
  const auto& basis = pauli_basis(n);
  const double scale = 1.0 / std::sqrt(double(n.hilbert_dim()));
  CMat result = CMat::Zero(n.hilbert_dim(), n.hilbert_dim());
  for (int mu = 0; mu < n.operator_dim(); ++mu)
    result += scale * coeffs[mu] * basis[mu];
  return result;
}

CMat pauli_reconstruct(const RVec& coeffs, QubitCount n) {
  return pauli_reconstruct(CVec(coeffs.cast<complexd>()), n);
}

DensityMatrix pauli_to_density(const RVec& coeffs, QubitCount n) {
  if (coeffs.size() != n.operator_dim())
    throw DimensionError("pauli_to_density: wrong coefficient count");
  const double c0 = 1.0 / std::sqrt(double(n.hilbert_dim()));
  if (std::abs(coeffs[0] - c0) > kAlgebraTol)
    throw NotAState("pauli_to_density: coeffs[0] != 1/sqrt(2^n)");
  return DensityMatrix(pauli_reconstruct(coeffs, n));
}

PauliState computational_state(const MultiIndex& mu, QubitCount n) {
  if (mu.qubits() != n.value())
    throw DimensionError("computational_state: index does not match n");
  RVec coeffs = RVec::Zero(n.operator_dim());
  const double c = 1.0 / std::sqrt(double(n.hilbert_dim()));
  coeffs[0] = c;
  if (mu.value() != 0) coeffs[mu.value()] = c;
  return PauliState(n, std::move(coeffs));
}

}  // namespace ptm
