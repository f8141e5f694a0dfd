#ifndef PTM_IO_HPP
#define PTM_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "ptm/channel.hpp"
#include "ptm/circuit.hpp"
#include "ptm/measurement.hpp"
#include "ptm/mv_logic.hpp"
#include "ptm/pauli.hpp"

namespace ptm::io {

using nlohmann::json;

// State: {"n": int, "coeffs": [float, ...]}
json to_json(const PauliState& s);
PauliState state_from_json(const json& j);

// Density matrix: {"n": int, "re": [[...]], "im": [[...]]}
json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const json& j);

// Kraus set: {"n": int, "ops": [{"re": [[...]], "im": [[...]]}, ...]}
json to_json(const KrausSet& ch);
KrausSet kraus_from_json(const json& j);

// Gate: {"n": int, "matrix": [[...]], "class": "tp"|"td"}
json to_json(const TransferGate& g);
TransferGate gate_from_json(const json& j);

// Projector set: {"n": int, "projectors": [{"re", "im"}, ...]}
json to_json(const ProjectorSet& ps);
ProjectorSet projectors_from_json(const json& j);

// Generators: {"dim": int, "generators": [{"re", "im"}, ...]}
json generators_to_json(const std::vector<CMat>& gens);
std::vector<CMat> generators_from_json(const json& j);

// Truth table: {"arity": int, "table": [ints]}
json to_json(const mv::ClassicalGate& g);
mv::ClassicalGate truth_table_from_json(const json& j);

// Circuit: {"width": int, "initial": {"computational": [digits]} |
//           {"file": path}, "steps": [{"gate": name|{"file": path},
//           "targets": [...]} | {"measure": {"file": path},
//           "targets": [...]}]}
// Relative file references are resolved against `base_dir`.
Circuit circuit_from_json(const json& j, const std::string& base_dir);

json load_json(const std::string& path);
void save_json(const json& j, const std::string& path);

PauliState load_state(const std::string& path);
DensityMatrix load_density(const std::string& path);
KrausSet load_kraus(const std::string& path);
TransferGate load_gate(const std::string& path);
ProjectorSet load_projectors(const std::string& path);
std::vector<CMat> load_generators(const std::string& path);
mv::ClassicalGate load_truth_table(const std::string& path);
Circuit load_circuit(const std::string& path);

}  // namespace ptm::io

#endif  // PTM_IO_HPP
