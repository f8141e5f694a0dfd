#ifndef PTM_PSEUDO_GATE_HPP
#define PTM_PSEUDO_GATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ptm/channel.hpp"
#include "ptm/random.hpp"
#include "ptm/types.hpp"

namespace ptm {

enum class Side { Left, Right };

/// Matrix of a left/right multiplication superoperator B -> AB or B -> BA
/// in the |mu) basis. Complex in general; Left and Right matrices of A and
/// A^dag are entrywise complex conjugates.
struct PseudoGateMatrix {
  QubitCount n;
  Side side;
  CMat matrix;
  CMat source;
};

PseudoGateMatrix left_matrix(const CMat& a);
PseudoGateMatrix right_matrix(const CMat& a);

/// Gate matrix as sum_j L^(A_j) R^(A_j^dag); agrees with kraus_to_gate.
TransferGate gate_from_lr(const KrausSet& ch);

enum class GeneratorKind { Weyl, Diag, SymReal, SymImag };

struct LieGenerator {
  int dim;
  CMat matrix;
  GeneratorKind kind;
  int i = 0;
  int j = 0;
};

/// H_{mu nu} with a single 1 at entry (mu, nu).
LieGenerator weyl_generator(int mu, int nu, int dim);

CMat commutator(const CMat& a, const CMat& b);
CMat commutator(const LieGenerator& a, const LieGenerator& b);

/// dim diagonal + dim(dim-1)/2 real-symmetric + dim(dim-1)/2
/// imaginary-antisymmetric Hermitian generators, dim^2 in total.
std::vector<LieGenerator> hermitian_basis(int dim);

/// Group-commutator limit: with s = sqrt(t/steps) and L_x(s) = exp(i s x),
/// returns (L_a(-s) L_b(s) L_a(s) L_b(-s))^steps -> exp(t [a,b]).
CMat commutator_limit(const CMat& a, const CMat& b, double t, int steps);

/// Trotter limit: (exp(i ca/steps a) exp(i cb/steps b))^steps
/// -> exp(i (ca a + cb b)).
CMat combination_limit(const CMat& a, const CMat& b, complexd ca, complexd cb,
                       int steps);

/// Permutation on the two-ququat index space, (mu1, mu2) -> (mu2, mu1).
CMat swap_pseudo_gate();
CMat conjugate_by_swap(const CMat& g);

struct PrimitivityVerdict {
  bool primitive;
  int witness_trial = -1;
  RVec witness_input;  // coefficients of the product state found entangled
  double second_singular_value = 0.0;
};

/// Randomized check whether a two-ququat gate maps product states to
/// product states. A Primitive verdict means no witness was found in
/// `trials` samples, not a proof.
PrimitivityVerdict is_primitive(const TransferGate& g, int trials,
                                std::uint64_t seed);

struct ClosureResult {
  int dimension;
  std::vector<int> trajectory;  // spanned dimension after each round
  std::vector<CMat> basis;      // one matrix per independent direction found
};

/// Closes the real span of the generators under pairwise commutators until
/// the dimension stabilizes, reaches min(max_dim, 2 dim^2), or max_rounds
/// commutator rounds have run. Deterministic for a fixed generator
/// ordering. OpenMP-parallel commutator evaluation.
ClosureResult lie_closure(const std::vector<CMat>& gens, int max_dim,
                          int max_rounds = 1 << 20);

namespace serial {

CMat left_matrix_ref(const CMat& a);
CMat right_matrix_ref(const CMat& a);
ClosureResult lie_closure(const std::vector<CMat>& gens, int max_dim,
                          int max_rounds = 1 << 20);

}  // namespace serial

}  // namespace ptm

#endif  // PTM_PSEUDO_GATE_HPP
