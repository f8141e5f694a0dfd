#include "ptm/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "ptm/gate_algebra.hpp"
#include "ptm/mv_logic.hpp"

namespace ptm {

namespace {

void check_targets(const std::vector<int>& targets, int k, int width) {
  if (int(targets.size()) != k)
    throw DimensionError("embed: gate arity does not match target count");
  std::vector<bool> seen(width, false);
  for (int t : targets) {
    if (t < 0 || t >= width)
      throw std::out_of_range("embed: target index out of range");
    if (seen[t]) throw std::invalid_argument("embed: duplicate target");
    seen[t] = true;
  }
}

}  // namespace

TransferGate embed(const TransferGate& g, const std::vector<int>& targets,
                   int width) {
  const int k = g.n.value();
  check_targets(targets, k, width);
  const QubitCount wide(width);
  const int dim = wide.operator_dim();
  const int gdim = g.n.operator_dim();
  RMat m = RMat::Zero(dim, dim);
  std::vector<int> rest;
  for (int q = 0; q < width; ++q)
    if (std::find(targets.begin(), targets.end(), q) == targets.end())
      rest.push_back(q);
  auto digit = [&](int mu, int pos) { return (mu >> (2 * (width - 1 - pos))) & 3; };
  for (int mu = 0; mu < dim; ++mu) {
    int mu_t = 0;
    for (int t : targets) mu_t = 4 * mu_t + digit(mu, t);
    for (int nu_t = 0; nu_t < gdim; ++nu_t) {
      const double entry = g.matrix(mu_t, nu_t);
      if (entry == 0.0) continue;
      // nu shares mu's digits off the targets.
      int nu = mu;
      for (int i = 0; i < k; ++i) {
        const int pos = targets[i];
        const int d = (nu_t >> (2 * (k - 1 - i))) & 3;
        const int shift = 2 * (width - 1 - pos);
        nu = (nu & ~(3 << shift)) | (d << shift);
      }
      m(mu, nu) = entry;
    }
  }
  return {wide, std::move(m), g.cls};
}

CMat embed_operator(const CMat& a, const std::vector<int>& targets,
                    int width) {
  require_square(a, "embed_operator");
  int k = 0;
  while ((1 << k) < a.rows()) ++k;
  if ((1 << k) != a.rows())
    throw DimensionError("embed_operator: dimension is not 2^k");
  check_targets(targets, k, width);
  const int dim = 1 << width;
  CMat out = CMat::Zero(dim, dim);
  auto bit = [&](int x, int pos) { return (x >> (width - 1 - pos)) & 1; };
  for (int r = 0; r < dim; ++r) {
    int r_t = 0;
    for (int t : targets) r_t = 2 * r_t + bit(r, t);
    for (int c_t = 0; c_t < (1 << k); ++c_t) {
      const complexd entry = a(r_t, c_t);
      if (entry == complexd(0.0, 0.0)) continue;
      int c = r;
      for (int i = 0; i < k; ++i) {
        const int pos = targets[i];
        const int b = (c_t >> (k - 1 - i)) & 1;
        const int shift = width - 1 - pos;
        c = (c & ~(1 << shift)) | (b << shift);
      }
      out(r, c) = entry;
    }
  }
  return out;
}

RunResult run(const Circuit& c, std::uint64_t seed) {
  if (c.width < 1 || c.width > 3)
    throw DimensionError("run: circuit width is capped at 3 ququats");
  const QubitCount wide(c.width);
  Rng rng(seed);
  PauliState state(wide, c.initial);
  std::vector<TranscriptEntry> transcript;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const CircuitStep& step = c.steps[i];
    try {
      if (step.kind == CircuitStep::Kind::Gate) {
        const TransferGate wide_gate =
            embed(*step.gate, step.targets, c.width);
        if (wide_gate.cls == GateClass::TracePreserving) {
          state = apply_gate(wide_gate, state);
        } else {
          TranscriptEntry entry;
          entry.step = int(i);
          entry.kind = "nonlinear";
          entry.weight = gate_weight(wide_gate, state);
          state = apply_nonlinear({wide_gate}, state);
          transcript.push_back(std::move(entry));
        }
      } else {
        std::vector<CMat> embedded;
        embedded.reserve(step.projectors->size());
        for (const auto& p : step.projectors->projectors())
          embedded.push_back(embed_operator(p, step.targets, c.width));
        ProjectorSet wide_set(wide, std::move(embedded));
        MeasurementOutcome outcome = measure(wide_set, state, rng);
        TranscriptEntry entry;
        entry.step = int(i);
        entry.kind = "measure";
        entry.branch = outcome.branch;
        entry.probabilities = outcome.probabilities;
        transcript.push_back(std::move(entry));
        state = std::move(outcome.post_state);
      }
    } catch (const Error& e) {
      throw Error("step " + std::to_string(i) + " (" + step.name +
                  "): " + e.what());
    }
  }
  return {std::move(state), std::move(transcript)};
}

namespace {

CMat pauli_x() {
  CMat x = CMat::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

CMat hadamard() {
  CMat h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::sqrt(2.0);
}

CMat cnot() {
  CMat u = CMat::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 3) = 1.0;
  u(3, 2) = 1.0;
  return u;
}

bool parse_angle_gate(const std::string& name, const std::string& prefix,
                      double& angle) {
  if (name.rfind(prefix + "(", 0) != 0 || name.back() != ')') return false;
  const std::string body =
      name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  std::size_t used = 0;
  angle = std::stod(body, &used);
  if (used != body.size())
    throw std::invalid_argument("bad angle in gate name: " + name);
  return true;
}

}  // namespace

TransferGate builtin_gate(const std::string& name) {
  using mv::ClassicalGate;
  if (name == "X") return unitary_to_gate(pauli_x());
  if (name == "H") return unitary_to_gate(hadamard());
  if (name == "CNOT") return unitary_to_gate(cnot());
  if (name == "minmax") return mv::minmax_gate();
  if (name == "sheffer_webb") return mv::sheffer_webb_gate();
  if (name == "~x")
    return mv::classical_to_quantum(ClassicalGate::lukasiewicz_not());
  if (name == "shift")
    return mv::classical_to_quantum(ClassicalGate::cyclic_shift());
  if (name == "diamond")
    return mv::classical_to_quantum(ClassicalGate::possibility());
  if (name == "box")
    return mv::classical_to_quantum(ClassicalGate::necessity());
  if (name.size() == 2 && name[0] == 'I' && name[1] >= '0' && name[1] <= '3')
    return mv::classical_to_quantum(ClassicalGate::indicator(name[1] - '0'));
  if (name.size() == 6 && name.rfind("const", 0) == 0 && name[5] >= '0' &&
      name[5] <= '3')
    return mv::classical_to_quantum(ClassicalGate::constant(name[5] - '0'));
  double angle = 0.0;
  if (parse_angle_gate(name, "rot1", angle)) return rotation_gate_1(angle);
  if (parse_angle_gate(name, "rot2", angle)) return rotation_gate_2(angle);
  throw std::invalid_argument("unknown builtin gate: " + name);
}

std::vector<std::string> builtin_gate_names() {
  return {"X",      "H",      "CNOT",   "rot1(a)", "rot2(t)",     "minmax",
          "sheffer_webb", "~x", "shift", "diamond", "box",
          "I0",     "I1",     "I2",     "I3",      "const0",      "const1",
          "const2", "const3"};
}

}  // namespace ptm
