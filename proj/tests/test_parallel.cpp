// The OpenMP kernels distribute work over independent output entries, so
// their results must agree with the serial reference implementations to
// machine precision (identically, where the per-entry arithmetic is the
// same).

#include <doctest.h>

#include "helpers.hpp"
#include "ptm/channel.hpp"
#include "ptm/pseudo_gate.hpp"

using namespace ptm;
using namespace ptm::testing;

TEST_SUITE_BEGIN("parallel");

TEST_CASE("kraus_to_gate matches the serial trace formula") {
  Rng rng(227);
  for (int trial = 0; trial < 6; ++trial) {
    const QubitCount n(1 + trial % 3);
    KrausSet ch(n, random_trace_preserving_kraus(n, 1 + trial % 3, rng));
    CHECK(diff(kraus_to_gate(ch).matrix,
               serial::kraus_to_gate_matrix(ch.ops(), n)) < 1e-12);
  }
}

TEST_CASE("pseudo-gate matrices match the serial formulas") {
  Rng rng(229);
  for (int trial = 0; trial < 4; ++trial) {
    const QubitCount n(1 + trial % 2);
    const CMat a = ginibre(n.hilbert_dim(), n.hilbert_dim(), rng);
    CHECK(diff(left_matrix(a).matrix, serial::left_matrix_ref(a)) < 1e-13);
    CHECK(diff(right_matrix(a).matrix, serial::right_matrix_ref(a)) < 1e-13);
  }
}

TEST_CASE("choi construction matches the serial kronecker sum") {
  Rng rng(233);
  for (int trial = 0; trial < 4; ++trial) {
    const QubitCount n(1 + trial % 2);
    KrausSet ch(n, random_trace_preserving_kraus(n, 2, rng));
    const TransferGate g = kraus_to_gate(ch);
    CHECK(diff(choi_of(g).data, serial::choi_from_gate(g)) < 1e-12);
  }
}

TEST_CASE("parallel and serial closures find the same dimension") {
  Rng rng(239);
  std::vector<CMat> gens;
  for (int i = 0; i < 4; ++i) {
    CMat g = ginibre(4, 4, rng);
    gens.push_back(0.5 * (g + g.adjoint()));
  }
  const ClosureResult parallel = lie_closure(gens, 32);
  const ClosureResult reference = serial::lie_closure(gens, 32);
  CHECK(parallel.dimension == reference.dimension);

  std::vector<CMat> units;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      units.push_back(weyl_generator(mu, nu, 4).matrix);
  CHECK(lie_closure(units, 32).dimension ==
        serial::lie_closure(units, 32).dimension);
}

TEST_SUITE_END();
