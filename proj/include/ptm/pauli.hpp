#ifndef PTM_PAULI_HPP
#define PTM_PAULI_HPP

#include <vector>

#include "ptm/types.hpp"

namespace ptm {

/// sigma_mu = sigma_{mu_1} x ... x sigma_{mu_n} (digit 0 is the identity).
CMat pauli_operator(const MultiIndex& index, QubitCount n);

/// All 4^n basis operators for n, indexed by mu. Cached per n.
const std::vector<CMat>& pauli_basis(QubitCount n);

/// Hilbert-Schmidt inner product (A|B) = Tr(A^dag B).
complexd hs_inner(const CMat& a, const CMat& b);

/// Validated density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Throws NotAState if the input violates any invariant.
  explicit DensityMatrix(CMat data);
  const CMat& matrix() const { return data_; }
  QubitCount qubits() const { return n_; }

 private:
  CMat data_;
  QubitCount n_;
};

/// A density matrix expressed by its real coefficients in the orthonormal
/// basis |mu) = sigma_mu / sqrt(2^n). coeffs[0] is pinned to 1/sqrt(2^n).
class PauliState {
 public:
  /// Validates normalization and positivity of the reconstruction.
  PauliState(QubitCount n, RVec coeffs);
  QubitCount qubits() const { return n_; }
  const RVec& coeffs() const { return coeffs_; }
  /// Unnormalized coefficients P_mu = sqrt(2^n) rho_mu.
  RVec p_coeffs() const;
  /// Tr(rho^2) = |coeffs|^2.
  double purity() const { return coeffs_.squaredNorm(); }

 private:
  QubitCount n_;
  RVec coeffs_;
};

/// rho_mu = (1/sqrt(2^n)) Tr(sigma_mu rho).
PauliState density_to_pauli(const DensityMatrix& rho);

/// Coefficient vector of an arbitrary operator, A_mu = (mu|A).
RVec operator_to_pauli(const CMat& a, QubitCount n);
CVec operator_to_pauli_complex(const CMat& a, QubitCount n);

/// rho = (1/sqrt(2^n)) sum_mu sigma_mu coeffs[mu], no state validation.
CMat pauli_reconstruct(const RVec& coeffs, QubitCount n);
CMat pauli_reconstruct(const CVec& coeffs, QubitCount n);

/// Reconstructs and validates; throws NotAState when the coefficients do
/// not describe a density matrix (wrong normalization or negative spectrum).
DensityMatrix pauli_to_density(const RVec& coeffs, QubitCount n);
inline DensityMatrix pauli_to_density(const PauliState& s) {
  return pauli_to_density(s.coeffs(), s.qubits());
}

/// Generalized computational state |mu] = (1/sqrt(2^n))(|0) + |mu)(1-delta)).
PauliState computational_state(const MultiIndex& mu, QubitCount n);

}  // namespace ptm

#endif  // PTM_PAULI_HPP
