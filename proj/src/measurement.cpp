#include "ptm/measurement.hpp"

#include <algorithm>
#include <cmath>

namespace ptm {

ProjectorSet::ProjectorSet(QubitCount n, std::vector<CMat> projectors)
    : n_(n), projectors_(std::move(projectors)) {
  if (projectors_.empty())
    throw DimensionError("ProjectorSet: needs at least one projector");
  for (const auto& p : projectors_) {
    require_square(p, "ProjectorSet");
    if (p.rows() != n_.hilbert_dim())
      throw DimensionError("ProjectorSet: projector dimension mismatch");
    if ((p - p.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol)
      throw Error("ProjectorSet: projector is not Hermitian");
    if ((p * p - p).cwiseAbs().maxCoeff() > kAlgebraTol)
      throw Error("ProjectorSet: projector is not idempotent");
  }
  for (std::size_t k = 0; k < projectors_.size(); ++k)
    for (std::size_t l = k + 1; l < projectors_.size(); ++l)
      if ((projectors_[k] * projectors_[l]).cwiseAbs().maxCoeff() > kAlgebraTol)
        throw Error("ProjectorSet: projectors are not pairwise orthogonal");
}

bool ProjectorSet::complete() const {
  CMat sum = CMat::Zero(n_.hilbert_dim(), n_.hilbert_dim());
  for (const auto& p : projectors_) sum += p;
  return (sum - CMat::Identity(n_.hilbert_dim(), n_.hilbert_dim()))
             .cwiseAbs()
             .maxCoeff() < kAlgebraTol;
}

TransferGate vn_superop(const ProjectorSet& ps) {
  return kraus_to_gate(KrausSet(ps.qubits(), ps.projectors()));
}

TransferGate branch_gate(const ProjectorSet& ps, int k) {
  if (k < 0 || k >= ps.size())
    throw std::out_of_range("branch_gate: branch index out of range");
  return kraus_to_gate(KrausSet(ps.qubits(), {ps.projectors()[k]}));
}

double gate_weight(const TransferGate& g, const PauliState& s) {
  if (!(g.n == s.qubits()))
    throw DimensionError("gate_weight: dimension mismatch");
  const double sqrt_dim = std::sqrt(double(g.n.hilbert_dim()));
  return sqrt_dim * g.matrix.row(0).dot(s.coeffs());
}

double branch_probability(const ProjectorSet& ps, int k, const PauliState& s) {
  return gate_weight(branch_gate(ps, k), s);
}

PauliState apply_nonlinear(const NonlinearGate& g, const PauliState& s) {
  const double w = gate_weight(g.linear, s);
  if (w <= kZeroBranchEps)
    throw ZeroProbabilityBranch(
        "apply_nonlinear: branch weight " + std::to_string(w) +
        "; the conditional state is undefined");
  return PauliState(g.linear.n, (g.linear.matrix * s.coeffs()) / w);
}

MeasurementOutcome measure(const ProjectorSet& ps, const PauliState& s,
                           Rng& rng) {
  if (!ps.complete())
    throw Error("measure: projector set is not complete");
  std::vector<double> probs(ps.size());
  std::vector<TransferGate> branches;
  branches.reserve(ps.size());
  for (int k = 0; k < ps.size(); ++k) {
    branches.push_back(branch_gate(ps, k));
    probs[k] = gate_weight(branches[k], s);
  }
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double u = uniform(rng);
  double cumulative = 0.0;
  int chosen = ps.size() - 1;
  for (int k = 0; k < ps.size(); ++k) {
    cumulative += probs[k];
    if (u < cumulative) {
      chosen = k;
      break;
    }
  }
  // A complete set sums to 1, but the sampled branch can still carry zero
  // probability when u lands on an empty tail; fall back to the heaviest.
  if (probs[chosen] <= kZeroBranchEps) {
    chosen = int(std::max_element(probs.begin(), probs.end()) - probs.begin());
  }
  PauliState post = apply_nonlinear({branches[chosen]}, s);
  return {chosen, std::move(post), std::move(probs)};
}

MeasurementOutcome measure(const ProjectorSet& ps, const PauliState& s,
                           std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  return measure(ps, s, rng);
}

}  // namespace ptm
