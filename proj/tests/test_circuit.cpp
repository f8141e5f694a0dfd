#include <doctest.h>

#include "helpers.hpp"
#include "ptm/circuit.hpp"
#include "ptm/pseudo_gate.hpp"

using namespace ptm;
using namespace ptm::testing;

namespace {

ProjectorSet z_basis() {
  return ProjectorSet(QubitCount(1), {projector_plus(), projector_minus()});
}

Circuit make_circuit(int width, const RVec& initial,
                     std::vector<CircuitStep> steps) {
  return Circuit{width, initial, std::move(steps)};
}

CircuitStep gate_step(TransferGate g, std::vector<int> targets,
                      std::string name = "gate") {
  CircuitStep s;
  s.kind = CircuitStep::Kind::Gate;
  s.name = std::move(name);
  s.gate = std::move(g);
  s.targets = std::move(targets);
  return s;
}

CircuitStep measure_step(ProjectorSet ps, std::vector<int> targets) {
  CircuitStep s;
  s.kind = CircuitStep::Kind::Measure;
  s.name = "measure";
  s.projectors = std::move(ps);
  s.targets = std::move(targets);
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("circuit");

TEST_CASE("embedding the identity") {
  const TransferGate id1 = TransferGate::identity(QubitCount(1));
  CHECK(diff(embed(id1, {1}, 2).matrix, RMat(RMat::Identity(16, 16))) == 0.0);
}

TEST_CASE("embedding matches the kraus oracle") {
  const CMat id2 = CMat::Identity(2, 2);
  const TransferGate x = unitary_to_gate(CMat(sigma(1)));
  const TransferGate embedded = embed(x, {0}, 2);
  const TransferGate oracle =
      kraus_to_gate(KrausSet(QubitCount(2), {kron(sigma(1), id2)}));
  CHECK(diff(embedded.matrix, oracle.matrix) < 1e-13);

  const TransferGate other = embed(x, {1}, 2);
  const TransferGate other_oracle =
      kraus_to_gate(KrausSet(QubitCount(2), {kron(id2, sigma(1))}));
  CHECK(diff(other.matrix, other_oracle.matrix) < 1e-13);
}

TEST_CASE("reversed targets conjugate by the index swap") {
  Rng rng(179);
  const TransferGate g = unitary_to_gate(random_unitary(4, rng));
  const RMat sw = swap_pseudo_gate().real();
  const RMat direct = embed(g, {1, 0}, 2).matrix;
  const RMat conjugated = sw * embed(g, {0, 1}, 2).matrix * sw;
  CHECK(diff(direct, conjugated) < 1e-12);
}

TEST_CASE("hilbert-space embedding agrees with the pauli embedding") {
  Rng rng(181);
  const CMat u = random_unitary(2, rng);
  const CMat wide = embed_operator(u, {1}, 3);
  const TransferGate lifted = unitary_to_gate(wide);
  const TransferGate direct = embed(unitary_to_gate(u), {1}, 3);
  CHECK(diff(lifted.matrix, direct.matrix) < 1e-12);
}

TEST_CASE("embed validates targets") {
  const TransferGate id1 = TransferGate::identity(QubitCount(1));
  const TransferGate id2 = TransferGate::identity(QubitCount(2));
  CHECK_THROWS_AS(embed(id1, {3}, 2), std::out_of_range);
  CHECK_THROWS_AS(embed(id2, {0, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(embed(id2, {0}, 2), DimensionError);
}

TEST_CASE("empty circuit returns the initial state") {
  const QubitCount one(1);
  const PauliState init = computational_state(MultiIndex(3, one), one);
  const RunResult result = run(make_circuit(1, init.coeffs(), {}), 5);
  CHECK(diff(result.final_state.coeffs(), init.coeffs()) == 0.0);
  CHECK(result.transcript.empty());
}

TEST_CASE("hadamard then z measurement from |0><0|") {
  const QubitCount one(1);
  const PauliState init = computational_state(MultiIndex(3, one), one);
  const Circuit c = make_circuit(
      1, init.coeffs(),
      {gate_step(builtin_gate("H"), {0}, "H"), measure_step(z_basis(), {0})});
  int plus = 0;
  const int samples = 2000;
  for (int seed = 0; seed < samples; ++seed) {
    const RunResult result = run(c, seed);
    REQUIRE(result.transcript.size() == 1);
    CHECK(result.transcript[0].probabilities[0] == doctest::Approx(0.5));
    CHECK(result.transcript[0].probabilities[1] == doctest::Approx(0.5));
    if (result.transcript[0].branch == 0) ++plus;
  }
  // 3 sigma for n = 2000 fair coin flips: about 67.
  CHECK(std::abs(plus - samples / 2) <= 67);
}

TEST_CASE("cnot circuit matches dense density evolution") {
  Rng rng(191);
  const QubitCount two(2);
  const CMat u1 = random_unitary(2, rng), u2 = random_unitary(2, rng);
  const CMat cnot = [] {
    CMat m = CMat::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
    return m;
  }();

  const DensityMatrix rho0 = random_density(two, rng);
  const Circuit c = make_circuit(
      2, density_to_pauli(rho0).coeffs(),
      {gate_step(unitary_to_gate(u1), {0}, "u1"),
       gate_step(builtin_gate("CNOT"), {0, 1}, "CNOT"),
       gate_step(unitary_to_gate(u2), {1}, "u2")});
  const RunResult result = run(c, 0);

  const CMat id2 = CMat::Identity(2, 2);
  CMat rho = rho0.matrix();
  rho = kron(u1, id2) * rho * kron(u1, id2).adjoint();
  rho = cnot * rho * cnot.adjoint();
  rho = kron(id2, u2) * rho * kron(id2, u2).adjoint();
  CHECK(diff(result.final_state.coeffs(),
             density_to_pauli(DensityMatrix(rho)).coeffs()) < 1e-9);
}

TEST_CASE("trace-decreasing gate steps renormalize and record the weight") {
  const QubitCount one(1);
  const PauliState mixed = computational_state(MultiIndex(0, one), one);
  const TransferGate plus_branch =
      kraus_to_gate(KrausSet(one, {projector_plus()}));
  const RunResult result = run(
      make_circuit(1, mixed.coeffs(), {gate_step(plus_branch, {0}, "P+")}),
      3);
  REQUIRE(result.transcript.size() == 1);
  CHECK(result.transcript[0].kind == "nonlinear");
  CHECK(result.transcript[0].weight == doctest::Approx(0.5));
  CHECK(result.final_state.coeffs()[3] ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("zero-probability branch reports the step") {
  const QubitCount one(1);
  const PauliState ket1 =
      density_to_pauli(DensityMatrix(projector_minus()));
  const TransferGate plus_branch =
      kraus_to_gate(KrausSet(one, {projector_plus()}));
  const Circuit c = make_circuit(
      1, ket1.coeffs(),
      {gate_step(TransferGate::identity(one), {0}, "id"),
       gate_step(plus_branch, {0}, "P+")});
  CHECK_THROWS_WITH_AS(run(c, 1), doctest::Contains("step 1"), Error);
}

TEST_CASE("transcripts are deterministic in the seed") {
  const QubitCount one(1);
  const PauliState mixed = computational_state(MultiIndex(0, one), one);
  const Circuit c = make_circuit(
      1, mixed.coeffs(),
      {gate_step(builtin_gate("H"), {0}, "H"), measure_step(z_basis(), {0}),
       gate_step(builtin_gate("X"), {0}, "X"), measure_step(z_basis(), {0})});
  const RunResult a = run(c, 99), b = run(c, 99);
  REQUIRE(a.transcript.size() == b.transcript.size());
  for (std::size_t i = 0; i < a.transcript.size(); ++i) {
    CHECK(a.transcript[i].branch == b.transcript[i].branch);
    CHECK(a.transcript[i].probabilities == b.transcript[i].probabilities);
  }
  CHECK(diff(a.final_state.coeffs(), b.final_state.coeffs()) == 0.0);
}

TEST_CASE("measurement on one ququat of a pair") {
  const QubitCount two(2);
  const PauliState init = computational_state(MultiIndex(15, two), two);
  const Circuit c =
      make_circuit(2, init.coeffs(), {measure_step(z_basis(), {1})});
  const RunResult result = run(c, 4);
  REQUIRE(result.transcript.size() == 1);
  const double total = result.transcript[0].probabilities[0] +
                       result.transcript[0].probabilities[1];
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("builtin gate names") {
  for (const auto& name : builtin_gate_names())
    if (name.find('(') == std::string::npos) CHECK_NOTHROW(builtin_gate(name));
  CHECK_NOTHROW(builtin_gate("rot1(0.25)"));
  CHECK_NOTHROW(builtin_gate("rot2(-1.5)"));
  CHECK(builtin_gate("minmax").n.value() == 2);
  CHECK_THROWS_AS(builtin_gate("nope"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_gate("rot1(abc)"), std::invalid_argument);
}

TEST_SUITE_END();
