#ifndef PTM_MEASUREMENT_HPP
#define PTM_MEASUREMENT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ptm/channel.hpp"
#include "ptm/random.hpp"
#include "ptm/types.hpp"

namespace ptm {

/// Orthogonal projectors P_k: idempotent, Hermitian, pairwise orthogonal.
/// The set need not be complete.
class ProjectorSet {
 public:
  ProjectorSet(QubitCount n, std::vector<CMat> projectors);
  QubitCount qubits() const { return n_; }
  const std::vector<CMat>& projectors() const { return projectors_; }
  int size() const { return int(projectors_.size()); }
  bool complete() const;

 private:
  QubitCount n_;
  std::vector<CMat> projectors_;
};

/// A trace-decreasing linear gate applied with trace renormalization,
/// rho -> E(rho) / Tr(E(rho)).
struct NonlinearGate {
  TransferGate linear;
};

/// Gate of rho -> sum_k P_k rho P_k. Trace-preserving iff the set is
/// complete.
TransferGate vn_superop(const ProjectorSet& ps);

/// Gate of the single branch rho -> P_k rho P_k.
TransferGate branch_gate(const ProjectorSet& ps, int k);

/// p(k) = sqrt(2^n) sum_alpha E^(k)_{0 alpha} rho_alpha.
double branch_probability(const ProjectorSet& ps, int k, const PauliState& s);

/// Weight of the linear gate on s: sqrt(2^n) (E s)_0.
double gate_weight(const TransferGate& g, const PauliState& s);

/// Applies the linear gate and renormalizes; throws ZeroProbabilityBranch
/// when the weight is below kZeroBranchEps.
PauliState apply_nonlinear(const NonlinearGate& g, const PauliState& s);

struct MeasurementOutcome {
  int branch;
  PauliState post_state;
  std::vector<double> probabilities;
};

/// Samples a branch of a complete projector set and returns the
/// renormalized post-state. Deterministic for a fixed seed.
MeasurementOutcome measure(const ProjectorSet& ps, const PauliState& s,
                           std::uint64_t rng_seed);
MeasurementOutcome measure(const ProjectorSet& ps, const PauliState& s,
                           Rng& rng);

}  // namespace ptm

#endif  // PTM_MEASUREMENT_HPP
