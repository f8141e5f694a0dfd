#ifndef PTM_CIRCUIT_HPP
#define PTM_CIRCUIT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptm/channel.hpp"
#include "ptm/measurement.hpp"
#include "ptm/types.hpp"

namespace ptm {

/// Embeds a k-ququat transfer gate into a `width`-ququat circuit, acting as
/// the identity on the non-target ququats. Targets are ordered: targets[0]
/// receives the gate's first tensor factor.
TransferGate embed(const TransferGate& g, const std::vector<int>& targets,
                   int width);

/// Same embedding on the Hilbert space, for Kraus operators and projectors.
CMat embed_operator(const CMat& a, const std::vector<int>& targets, int width);

struct CircuitStep {
  enum class Kind { Gate, Measure };
  Kind kind;
  std::string name;  // builtin name or source file, for transcripts
  std::optional<TransferGate> gate;
  std::optional<ProjectorSet> projectors;
  std::vector<int> targets;
};

struct Circuit {
  int width;
  RVec initial;  // coefficients of the initial state
  std::vector<CircuitStep> steps;
};

struct TranscriptEntry {
  int step;
  std::string kind;  // "measure" or "nonlinear"
  int branch = -1;
  double weight = 1.0;
  std::vector<double> probabilities;
};

struct RunResult {
  PauliState final_state;
  std::vector<TranscriptEntry> transcript;
};

/// Applies the steps in order. Trace-decreasing gate steps are applied with
/// trace renormalization and their weight recorded; measurement steps sample
/// a branch from the seeded generator. Errors carry the step index.
RunResult run(const Circuit& c, std::uint64_t seed);

/// Builtin gates: "X", "H", "CNOT", "rot1(a)", "rot2(t)", "minmax",
/// "sheffer_webb", and the single-argument classical gates "~x", "shift",
/// "I0".."I3", "const0".."const3", "diamond", "box".
TransferGate builtin_gate(const std::string& name);
std::vector<std::string> builtin_gate_names();

}  // namespace ptm

#endif  // PTM_CIRCUIT_HPP
