#ifndef PTM_GATE_ALGEBRA_HPP
#define PTM_GATE_ALGEBRA_HPP

#include "ptm/channel.hpp"
#include "ptm/types.hpp"

namespace ptm {

/// Trace-preserving gate in (T, R) block form: embedded matrix is
/// [[1, 0], [T, R]] with T a column of length 4^n-1.
struct AffineGate {
  QubitCount n;
  RVec translation;
  RMat rotation;

  static AffineGate identity(QubitCount n) {
    const int d = n.operator_dim() - 1;
    return {n, RVec::Zero(d), RMat::Identity(d, d)};
  }
};

/// Factorization R = U1 diag(lambda) U2^T with lambda descending nonneg;
/// the gate itself is E^(T) * embed(U1) * embed(diag(lambda)) * embed(U2^T).
struct GateSVD {
  RVec translation;
  RMat u1;
  RMat u2;
  RVec lambda;
};

AffineGate extract_affine(const TransferGate& g);
TransferGate embed_affine(const AffineGate& g);

/// Group law E(T,R) E(T',R') = E(T + R T', R R').
AffineGate compose(const AffineGate& g1, const AffineGate& g2);

GateSVD decompose_svd(const AffineGate& g);

/// Translation gate E^(T): identity plus T in column 0.
TransferGate translation_gate(QubitCount n, const RVec& t);

/// Unital orthogonal/diagonal blocks embedded as gates.
TransferGate unital_gate(QubitCount n, const RMat& r);

bool is_unital(const TransferGate& g);

/// Single-ququat rotation in the (1,2) coefficient plane, axis 3 fixed.
TransferGate rotation_gate_1(double alpha);
/// Single-ququat rotation in the (3,1) coefficient plane, axis 2 fixed.
TransferGate rotation_gate_2(double theta);

struct EulerAngles {
  double alpha;
  double theta;  // in [0, pi]
  double beta;
};

/// Factors a unital orthogonal single-ququat gate with det(R) = +1 into
/// rotation_gate_1(alpha) * rotation_gate_2(theta) * rotation_gate_1(beta).
/// Throws NotRotation otherwise. Gimbal lock (theta in {0, pi}) folds the
/// whole (1,2)-plane rotation into alpha and sets beta = 0.
EulerAngles euler_factor(const TransferGate& g);

}  // namespace ptm

#endif  // PTM_GATE_ALGEBRA_HPP
