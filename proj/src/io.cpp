#include "ptm/io.hpp"

#include <filesystem>
#include <fstream>

namespace ptm::io {

namespace {

json matrix_to_json(const CMat& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json re_row = json::array(), im_row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

CMat matrix_from_json(const json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (re.size() != im.size() || re.empty())
    throw Error("matrix: re/im shape mismatch");
  const std::size_t rows = re.size();
  const std::size_t cols = re[0].size();
  CMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (re[r].size() != cols || im[r].size() != cols)
      throw Error("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = complexd(re[r][c].get<double>(), im[r][c].get<double>());
  }
  return m;
}

RMat real_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error("matrix: expected array");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  RMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw Error("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

json real_matrix_to_json(const RMat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json to_json(const PauliState& s) {
  json coeffs = json::array();
  for (Eigen::Index i = 0; i < s.coeffs().size(); ++i)
    coeffs.push_back(s.coeffs()[i]);
  return {{"n", s.qubits().value()}, {"coeffs", std::move(coeffs)}};
}

PauliState state_from_json(const json& j) {
  const QubitCount n(j.at("n").get<int>());
  const auto& arr = j.at("coeffs");
  RVec coeffs(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) coeffs[i] = arr[i].get<double>();
  return PauliState(n, std::move(coeffs));
}

json to_json(const DensityMatrix& rho) {
  json j = matrix_to_json(rho.matrix());
  j["n"] = rho.qubits().value();
  return j;
}

DensityMatrix density_from_json(const json& j) {
  const QubitCount n(j.at("n").get<int>());
  CMat m = matrix_from_json(j);
  if (m.rows() != n.hilbert_dim()) throw Error("density: dimension mismatch");
  return DensityMatrix(std::move(m));
}

json to_json(const KrausSet& ch) {
  json ops = json::array();
  for (const auto& a : ch.ops()) ops.push_back(matrix_to_json(a));
  return {{"n", ch.qubits().value()}, {"ops", std::move(ops)}};
}

KrausSet kraus_from_json(const json& j) {
  const QubitCount n(j.at("n").get<int>());
  std::vector<CMat> ops;
  for (const auto& op : j.at("ops")) ops.push_back(matrix_from_json(op));
  return KrausSet(n, std::move(ops));
}

json to_json(const TransferGate& g) {
  return {{"n", g.n.value()},
          {"matrix", real_matrix_to_json(g.matrix)},
          {"class", g.cls == GateClass::TracePreserving ? "tp" : "td"}};
}

TransferGate gate_from_json(const json& j) {
  const QubitCount n(j.at("n").get<int>());
  RMat m = real_matrix_from_json(j.at("matrix"));
  if (m.rows() != n.operator_dim() || m.cols() != n.operator_dim())
    throw Error("gate: matrix must be 4^n x 4^n");
  const std::string cls = j.at("class").get<std::string>();
  if (cls != "tp" && cls != "td") throw Error("gate: class must be tp or td");
  return {n, std::move(m),
          cls == "tp" ? GateClass::TracePreserving
                      : GateClass::TraceDecreasing};
}

json to_json(const ProjectorSet& ps) {
  json projs = json::array();
  for (const auto& p : ps.projectors()) projs.push_back(matrix_to_json(p));
  return {{"n", ps.qubits().value()}, {"projectors", std::move(projs)}};
}

ProjectorSet projectors_from_json(const json& j) {
  const QubitCount n(j.at("n").get<int>());
  std::vector<CMat> projs;
  for (const auto& p : j.at("projectors")) projs.push_back(matrix_from_json(p));
  return ProjectorSet(n, std::move(projs));
}

json generators_to_json(const std::vector<CMat>& gens) {
  if (gens.empty()) throw Error("generators: empty list");
  json arr = json::array();
  for (const auto& g : gens) arr.push_back(matrix_to_json(g));
  return {{"dim", gens.front().rows()}, {"generators", std::move(arr)}};
}

std::vector<CMat> generators_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  std::vector<CMat> gens;
  for (const auto& g : j.at("generators")) {
    gens.push_back(matrix_from_json(g));
    if (gens.back().rows() != dim || gens.back().cols() != dim)
      throw Error("generators: dimension mismatch");
  }
  if (gens.empty()) throw Error("generators: empty list");
  return gens;
}

json to_json(const mv::ClassicalGate& g) {
  return {{"arity", g.arity()}, {"table", g.table()}};
}

mv::ClassicalGate truth_table_from_json(const json& j) {
  return mv::ClassicalGate(j.at("arity").get<int>(),
                           j.at("table").get<std::vector<int>>());
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

PauliState load_state(const std::string& path) {
  return state_from_json(load_json(path));
}
DensityMatrix load_density(const std::string& path) {
  return density_from_json(load_json(path));
}
KrausSet load_kraus(const std::string& path) {
  return kraus_from_json(load_json(path));
}
TransferGate load_gate(const std::string& path) {
  return gate_from_json(load_json(path));
}
ProjectorSet load_projectors(const std::string& path) {
  return projectors_from_json(load_json(path));
}
std::vector<CMat> load_generators(const std::string& path) {
  return generators_from_json(load_json(path));
}
mv::ClassicalGate load_truth_table(const std::string& path) {
  return truth_table_from_json(load_json(path));
}

Circuit circuit_from_json(const json& j, const std::string& base_dir) {
  Circuit c;
  c.width = j.at("width").get<int>();
  const QubitCount wide(c.width);
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    if (path.is_relative() && !base_dir.empty())
      path = std::filesystem::path(base_dir) / path;
    return path.string();
  };
  const auto& init = j.at("initial");
  if (init.contains("computational")) {
    const auto digits = init.at("computational").get<std::vector<int>>();
    if (int(digits.size()) != c.width)
      throw Error("circuit: initial digits must match width");
    c.initial = computational_state(MultiIndex::from_digits(digits), wide)
                    .coeffs();
  } else if (init.contains("file")) {
    PauliState s = load_state(resolve(init.at("file").get<std::string>()));
    if (!(s.qubits() == wide)) throw Error("circuit: initial state width");
    c.initial = s.coeffs();
  } else {
    throw Error("circuit: initial needs 'computational' or 'file'");
  }
  for (const auto& step : j.at("steps")) {
    CircuitStep cs;
    cs.targets = step.at("targets").get<std::vector<int>>();
    if (step.contains("gate")) {
      cs.kind = CircuitStep::Kind::Gate;
      const auto& gate = step.at("gate");
      if (gate.is_string()) {
        cs.name = gate.get<std::string>();
        cs.gate = builtin_gate(cs.name);
      } else {
        cs.name = gate.at("file").get<std::string>();
        cs.gate = load_gate(resolve(cs.name));
      }
    } else if (step.contains("measure")) {
      cs.kind = CircuitStep::Kind::Measure;
      cs.name = step.at("measure").at("file").get<std::string>();
      cs.projectors = load_projectors(resolve(cs.name));
    } else {
      throw Error("circuit: step needs 'gate' or 'measure'");
    }
    c.steps.push_back(std::move(cs));
  }
  return c;
}

Circuit load_circuit(const std::string& path) {
  return circuit_from_json(load_json(path),
                           std::filesystem::path(path).parent_path().string());
}

}  // namespace ptm::io
