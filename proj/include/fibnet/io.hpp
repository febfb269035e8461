#pragma once

// JSON serialization for the file formats: circuits, states, graphs, counts,
// noise models, estimates and ZNE reports.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chromatic.hpp"
#include "dsnp.hpp"
#include "graph.hpp"
#include "noise.hpp"
#include "statevec.hpp"

namespace fibnet {

using json = nlohmann::json;

inline json state_to_json(const StateVector& sv) {
  json amps = json::array();
  for (const cplx& a : sv.amps) amps.push_back({a.real(), a.imag()});
  return {{"n_qubits", sv.n_qubits}, {"amps", amps}};
}

inline json circuit_to_json(const Circuit& c) {
  json ops = json::array();
  for (const GateOp& op : c.ops) {
    json j;
    switch (op.kind) {
      case OpKind::Unitary1: j["kind"] = "unitary1"; break;
      case OpKind::ControlledUnitary1: j["kind"] = "controlled_unitary1"; break;
      case OpKind::UnitaryK: j["kind"] = "unitary_k"; break;
      case OpKind::NoiseMarker: j["kind"] = "noise_marker"; break;
    }
    j["targets"] = op.targets;
    if (!op.controls.empty()) {
      json ctl = json::array();
      for (auto& [q, b] : op.controls) ctl.push_back({q, b});
      j["controls"] = ctl;
    }
    json mat = json::array();
    for (const cplx& m : op.matrix) mat.push_back({m.real(), m.imag()});
    j["matrix"] = mat;
    j["noise_weight"] = op.noise_weight;
    if (!op.label.empty()) j["label"] = op.label;
    ops.push_back(j);
  }
  json roles = json::array();
  for (auto& [q, role] : c.qubit_roles) roles.push_back({{"qubit", q}, {"role", role}});
  return {{"n_qubits", c.n_qubits}, {"name", c.name}, {"ops", ops},
          {"qubit_roles", roles}};
}

inline json layout_to_json(const LatticeLayout& lay) {
  json edges = json::array();
  for (const auto& e : lay.graph.edges) edges.push_back({e.id, e.u, e.v});
  json faces = json::array();
  for (const auto& f : lay.graph.faces) faces.push_back(f);
  json qoe = json::object();
  for (auto& [e, q] : lay.qubit_of_edge) qoe[std::to_string(e)] = q;
  return {{"name", lay.name},
          {"vertices", lay.graph.vertices},
          {"edges", edges},
          {"tails", std::vector<int>(lay.graph.tails.begin(),
                                     lay.graph.tails.end())},
          {"faces", faces},
          {"qubit_of_edge", qoe}};
}

inline LatticeLayout layout_from_json(const json& j) {
  LatticeLayout lay;
  lay.name = j.value("name", "custom");
  lay.graph.vertices = j.at("vertices").get<std::vector<int>>();
  for (const auto& e : j.at("edges"))
    lay.graph.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(),
                               e.at(2).get<int>()});
  if (j.contains("tails"))
    for (const auto& t : j.at("tails")) lay.graph.tails.insert(t.get<int>());
  for (const auto& f : j.at("faces"))
    lay.graph.faces.push_back(f.get<std::vector<int>>());
  if (j.contains("qubit_of_edge"))
    for (auto& [k, v] : j.at("qubit_of_edge").items())
      lay.qubit_of_edge[std::stoi(k)] = v.get<int>();
  else
    for (const auto& e : lay.graph.edges) lay.qubit_of_edge[e.id] = e.id;
  return lay;
}

//! Plain multigraph for the chromatic tools: {"n": int, "edges": [[u,v]...]}.
inline Multigraph multigraph_from_json(const json& j) {
  Multigraph g;
  g.n_vertices = j.at("n").get<int>();
  for (const auto& e : j.at("edges"))
    g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return g;
}

inline json counts_to_json(const SampleCounts& counts, int n_qubits,
                           const std::vector<int>& ancillas = {}) {
  json c = json::object();
  for (auto& [w, n] : counts) c[w] = n;
  return {{"n_qubits", n_qubits}, {"ancilla_qubits", ancillas}, {"counts", c}};
}

inline SampleCounts counts_from_json(const json& j) {
  SampleCounts out;
  for (auto& [w, n] : j.at("counts").items()) out[w] = n.get<long long>();
  return out;
}

inline NoiseModel noise_model_from_json(const json& j) {
  NoiseModel m;
  m.p_1q = j.value("p_1q", 0.0);
  m.p_kq = j.value("p_kq", 0.0);
  m.coherent_eps = j.value("coherent_eps", 0.0);
  m.seed = j.value("seed", 0ull);
  if (j.contains("readout"))
    for (const auto& r : j.at("readout"))
      m.readout.push_back({r.at(0).get<double>(), r.at(1).get<double>()});
  return m;
}

inline json noise_model_to_json(const NoiseModel& m) {
  json ro = json::array();
  for (const auto& r : m.readout) ro.push_back({r.eps0, r.eps1});
  return {{"p_1q", m.p_1q}, {"p_kq", m.p_kq}, {"coherent_eps", m.coherent_eps},
          {"readout", ro}, {"seed", m.seed}};
}

inline json zne_to_json(const ZNEResult& r) {
  json pts = json::array();
  for (const auto& p : r.points)
    pts.push_back({{"lambda", p.lambda}, {"value", p.value},
                   {"stderr", p.stderr_}});
  json j = {{"points", pts},       {"A", r.A},
            {"k", r.k},            {"B", r.B},
            {"extrapolated", r.extrapolated},
            {"r_squared", r.r_squared},
            {"degenerate", r.degenerate},
            {"unmitigated", r.unmitigated}};
  if (!r.bootstrap.empty()) {
    j["bootstrap_std"] = r.bootstrap_std;
    j["bootstrap"] = r.bootstrap;
  }
  return j;
}

inline json estimates_to_json(const std::vector<ChromEstimate>& est) {
  json rows = json::array();
  for (const auto& e : est) {
    const double rel =
        e.exact != 0.0 ? std::abs(e.mean - e.exact) / std::abs(e.exact) : 0.0;
    rows.push_back({{"class", e.class_id},
                    {"multiplicity", e.multiplicity},
                    {"mean", e.mean},
                    {"stderr", e.stderr_},
                    {"exact", e.exact},
                    {"relative_error", rel}});
  }
  return rows;
}

inline std::string estimates_to_csv(const std::vector<ChromEstimate>& est) {
  std::ostringstream os;
  os << "class,multiplicity,mean,stderr,exact,relative_error\n";
  for (const auto& e : est) {
    const double rel =
        e.exact != 0.0 ? std::abs(e.mean - e.exact) / std::abs(e.exact) : 0.0;
    os << e.class_id << ',' << e.multiplicity << ',' << e.mean << ','
       << e.stderr_ << ',' << e.exact << ',' << rel << '\n';
  }
  return os.str();
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace fibnet
