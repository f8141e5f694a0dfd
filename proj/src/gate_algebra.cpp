#include "ptm/gate_algebra.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace ptm {

AffineGate extract_affine(const TransferGate& g) {
  const int d = g.n.operator_dim() - 1;
  if (g.cls != GateClass::TracePreserving ||
      (g.matrix.row(0).tail(d).cwiseAbs().maxCoeff() > kAlgebraTol) ||
      std::abs(g.matrix(0, 0) - 1.0) > kAlgebraTol)
    throw Error("extract_affine: gate is not trace-preserving");
  return {g.n, g.matrix.col(0).tail(d), g.matrix.bottomRightCorner(d, d)};
}

TransferGate embed_affine(const AffineGate& g) {
  const int d = int(g.translation.size());
  RMat m = RMat::Zero(d + 1, d + 1);
  m(0, 0) = 1.0;
  m.col(0).tail(d) = g.translation;
  m.bottomRightCorner(d, d) = g.rotation;
  return {g.n, std::move(m), GateClass::TracePreserving};
}

AffineGate compose(const AffineGate& g1, const AffineGate& g2) {
  if (!(g1.n == g2.n)) throw DimensionError("compose: dimension mismatch");
  return {g1.n, g1.translation + g1.rotation * g2.translation,
          g1.rotation * g2.rotation};
}

GateSVD decompose_svd(const AffineGate& g) {
  Eigen::JacobiSVD<RMat> svd(g.rotation,
                             Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {g.translation, svd.matrixU(), svd.matrixV(), svd.singularValues()};
}

TransferGate translation_gate(QubitCount n, const RVec& t) {
  if (t.size() != n.operator_dim() - 1)
    throw DimensionError("translation_gate: wrong translation length");
  return embed_affine({n, t, RMat::Identity(t.size(), t.size())});
}

TransferGate unital_gate(QubitCount n, const RMat& r) {
  if (r.rows() != n.operator_dim() - 1 || r.cols() != r.rows())
    throw DimensionError("unital_gate: wrong block size");
  return embed_affine({n, RVec::Zero(r.rows()), r});
}

bool is_unital(const TransferGate& g) {
  const int d = g.n.operator_dim() - 1;
  return g.matrix.col(0).tail(d).cwiseAbs().maxCoeff() < kAlgebraTol;
}

TransferGate rotation_gate_1(double alpha) {
  RMat m = RMat::Identity(4, 4);
  m(1, 1) = std::cos(alpha);
  m(2, 2) = std::cos(alpha);
  m(2, 1) = std::sin(alpha);
  m(1, 2) = -std::sin(alpha);
  return {QubitCount(1), std::move(m), GateClass::TracePreserving};
}

TransferGate rotation_gate_2(double theta) {
  RMat m = RMat::Identity(4, 4);
  m(1, 1) = std::cos(theta);
  m(3, 3) = std::cos(theta);
  m(1, 3) = std::sin(theta);
  m(3, 1) = -std::sin(theta);
  return {QubitCount(1), std::move(m), GateClass::TracePreserving};
}

EulerAngles euler_factor(const TransferGate& g) {
  if (g.n.value() != 1)
    throw DimensionError("euler_factor: single-ququat gates only");
  if (!is_unital(g)) throw NotRotation("euler_factor: gate is not unital");
  AffineGate affine = extract_affine(g);
  const RMat& r = affine.rotation;
  if ((r * r.transpose() - RMat::Identity(3, 3)).cwiseAbs().maxCoeff() >
      kSpectralTol)
    throw NotRotation("euler_factor: R block is not orthogonal");
  if (r.determinant() < 0.0)
    throw NotRotation("euler_factor: R block is an improper rotation");

  // R = Rz(alpha) Ry(theta) Rz(beta) on coefficient axes (1,2,3) = (x,y,z):
  //   R(2,2) = cos(theta), R(0,2) = cos(alpha) sin(theta),
  //   R(1,2) = sin(alpha) sin(theta), R(2,1) = sin(theta) sin(beta),
  //   R(2,0) = -sin(theta) cos(beta).
  const double ct = std::clamp(r(2, 2), -1.0, 1.0);
  const double theta = std::acos(ct);
  const double st = std::sin(theta);
  if (st > 1e-9)
    return {std::atan2(r(1, 2), r(0, 2)), theta,
            std::atan2(r(2, 1), -r(2, 0))};
  // Gimbal lock: only alpha +/- beta is determined; put it all in alpha.
  if (ct > 0.0) return {std::atan2(r(1, 0), r(0, 0)), 0.0, 0.0};
  return {std::atan2(-r(1, 0), -r(0, 0)), M_PI, 0.0};
}

}  // namespace ptm
