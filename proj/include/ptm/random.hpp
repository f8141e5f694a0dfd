#ifndef PTM_RANDOM_HPP
#define PTM_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ptm/pauli.hpp"
#include "ptm/types.hpp"

namespace ptm {

using Rng = std::mt19937_64;

/// Complex matrix with i.i.d. standard complex Gaussian entries.
CMat ginibre(int rows, int cols, Rng& rng);

/// Haar-ish random unitary (QR of a Ginibre matrix, phases fixed).
CMat random_unitary(int dim, Rng& rng);

/// Random density matrix G G^dag / Tr(G G^dag).
DensityMatrix random_density(QubitCount n, Rng& rng);

/// m Ginibre matrices normalized by (sum A^dag A)^{-1/2}, so the set is
/// trace-preserving by construction.
std::vector<CMat> random_trace_preserving_kraus(QubitCount n, int m, Rng& rng);

}  // namespace ptm

#endif  // PTM_RANDOM_HPP
