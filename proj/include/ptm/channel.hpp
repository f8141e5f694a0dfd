#ifndef PTM_CHANNEL_HPP
#define PTM_CHANNEL_HPP

#include <utility>
#include <vector>

#include "ptm/pauli.hpp"
#include "ptm/types.hpp"

namespace ptm {

enum class GateClass { TracePreserving, TraceDecreasing };

/// Kraus operators {A_j} of a completely positive map
/// rho -> sum_j A_j rho A_j^dag.
class KrausSet {
 public:
  KrausSet(QubitCount n, std::vector<CMat> ops);
  QubitCount qubits() const { return n_; }
  const std::vector<CMat>& ops() const { return ops_; }

 private:
  QubitCount n_;
  std::vector<CMat> ops_;
};

/// Real 4^n x 4^n matrix of a quantum operation in the |mu) basis.
struct TransferGate {
  QubitCount n;
  RMat matrix;
  GateClass cls = GateClass::TracePreserving;

  static TransferGate identity(QubitCount n) {
    return {n, RMat::Identity(n.operator_dim(), n.operator_dim()),
            GateClass::TracePreserving};
  }
};

struct ChoiMatrix {
  CMat data;
  double min_eigenvalue() const;
};

/// (sum_j A_j rho A_j^dag, trace of the result). The weight is the
/// probability that the process occurs.
std::pair<CMat, double> apply_kraus(const KrausSet& ch,
                                    const DensityMatrix& rho);

/// Trace-preserving iff sum A^dag A = I; throws NotTraceDecreasing when the
/// sum exceeds the identity.
GateClass classify_kraus(const KrausSet& ch);

/// E_{mu nu} = (1/2^n) sum_j Tr(sigma_mu A_j sigma_nu A_j^dag).
/// OpenMP-parallel over matrix columns.
TransferGate kraus_to_gate(const KrausSet& ch);

/// Gate of a unitary conjugation channel; throws NonUnitary.
TransferGate unitary_to_gate(const CMat& u);

/// Choi matrix sum_j vec(A_j) vec(A_j)^dag (column-major vec).
ChoiMatrix choi_of(const KrausSet& ch);

/// Choi matrix of an arbitrary transfer gate,
/// J = (1/2^n) sum_{mu nu} E_{mu nu} sigma_nu^T (x) sigma_mu.
ChoiMatrix choi_of(const TransferGate& g);

bool is_completely_positive(const KrausSet& ch);
bool is_completely_positive(const TransferGate& g);

/// Plain matrix-vector action on a coefficient vector.
RVec apply_gate(const TransferGate& g, const RVec& coeffs);

/// Action on a state; valid for trace-preserving gates.
PauliState apply_gate(const TransferGate& g, const PauliState& s);

namespace serial {

/// Reference implementations of the parallel kernels above: entry-by-entry
/// evaluation of the defining trace formulas. Kept for tests and benchmarks.
RMat kraus_to_gate_matrix(const std::vector<CMat>& ops, QubitCount n);
CMat choi_from_gate(const TransferGate& g);

}  // namespace serial

}  // namespace ptm

#endif  // PTM_CHANNEL_HPP
