// Copyright 2026 The qemlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qemlab/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qem {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

bool is_clifford_angle(double theta) {
  const double steps = theta / kHalfPi;
  return std::abs(steps - std::round(steps)) <= 1e-12 * std::max(1.0, std::abs(steps));
}

std::string format_angle(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* token_of(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CX: return "CX";
    case GateKind::CZ: return "CZ";
    case GateKind::Swap: return "SWAP";
    case GateKind::Rx: return "RX";
    case GateKind::Ry: return "RY";
    case GateKind::Rz: return "RZ";
    case GateKind::CPauli: return "CPAULI";
    case GateKind::MeasureZ: return "MEASZ";
    case GateKind::Reset: return "RESET";
  }
  return "?";
}

}  // namespace

bool Circuit::is_clifford() const {
  for (const auto& g : gates) {
    if (g.is_rotation() && !is_clifford_angle(g.angle)) return false;
  }
  return true;
}

bool Circuit::has_measurement() const {
  for (const auto& g : gates) {
    if (g.is_measurement()) return true;
  }
  return false;
}

void Circuit::validate() const {
  const uint32_t total = total_qubits();
  if (total == 0) throw std::invalid_argument("circuit: no qubits");
  if (total > 64) throw std::invalid_argument("circuit: too many qubits");
  for (const auto& g : gates) {
    if (g.qubits[0] >= total) throw std::invalid_argument("circuit: operand out of range");
    if (g.is_two_qubit()) {
      if (g.qubits[1] >= total) throw std::invalid_argument("circuit: operand out of range");
      if (g.qubits[0] == g.qubits[1]) throw std::invalid_argument("circuit: repeated operand");
    }
    if (g.is_rotation() && !std::isfinite(g.angle)) {
      throw std::invalid_argument("circuit: non-finite rotation angle");
    }
    if (g.kind == GateKind::CPauli) {
      if (g.pauli.num_qubits != n_data) {
        throw std::invalid_argument("circuit: CPauli width must equal n_data");
      }
      if (g.pauli.is_identity_up_to_phase()) {
        throw std::invalid_argument("circuit: CPauli with identity pauli");
      }
      if (!g.pauli.is_hermitian()) {
        throw std::invalid_argument("circuit: CPauli pauli must be Hermitian");
      }
      if (g.qubits[0] < n_data) {
        throw std::invalid_argument("circuit: CPauli control must be an ancilla");
      }
    }
  }
}

std::string to_text(const Circuit& c, const std::vector<std::string>& manifest) {
  std::string out;
  for (const auto& line : manifest) {
    out += "# ";
    out += line;
    out += '\n';
  }
  out += "qubits=" + std::to_string(c.n_data);
  out += " ancillas=" + std::to_string(c.n_ancilla);
  out += " seed=" + std::to_string(c.metadata.seed);
  out += " depth=" + std::to_string(c.metadata.depth);
  out += " label=" + (c.metadata.label.empty() ? "-" : c.metadata.label);
  out += '\n';
  for (const auto& g : c.gates) {
    out += token_of(g.kind);
    if (g.kind == GateKind::CPauli) {
      out += ' ';
      out += std::to_string(g.qubits[0]);
      out += ' ';
      out += to_string(g.pauli);
    } else {
      out += ' ';
      out += std::to_string(g.qubits[0]);
      if (g.is_two_qubit()) {
        out += ' ';
        out += std::to_string(g.qubits[1]);
      }
      if (g.is_rotation()) {
        out += ' ';
        out += format_angle(g.angle);
      }
    }
    out += '\n';
  }
  return out;
}

Circuit circuit_from_text(std::string_view text) {
  Circuit c;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      // qubits=N ancillas=M seed=S depth=D label=L
      std::string field;
      while (ls >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) {
          throw std::invalid_argument("circuit text: malformed header field '" + field + "'");
        }
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "qubits") c.n_data = static_cast<uint32_t>(std::stoul(value));
        else if (key == "ancillas") c.n_ancilla = static_cast<uint32_t>(std::stoul(value));
        else if (key == "seed") c.metadata.seed = std::stoull(value);
        else if (key == "depth") c.metadata.depth = static_cast<uint32_t>(std::stoul(value));
        else if (key == "label") c.metadata.label = value == "-" ? "" : value;
        else throw std::invalid_argument("circuit text: unknown header key '" + key + "'");
      }
      have_header = true;
      continue;
    }
    std::string tok;
    ls >> tok;
    if (tok.empty()) continue;
    auto read_q = [&ls, &line]() {
      uint32_t q;
      if (!(ls >> q)) throw std::invalid_argument("circuit text: bad operand in '" + line + "'");
      return q;
    };
    Gate g{};
    if (tok == "H") g = Gate::one(GateKind::H, read_q());
    else if (tok == "S") g = Gate::one(GateKind::S, read_q());
    else if (tok == "SDG") g = Gate::one(GateKind::Sdg, read_q());
    else if (tok == "X") g = Gate::one(GateKind::X, read_q());
    else if (tok == "Y") g = Gate::one(GateKind::Y, read_q());
    else if (tok == "Z") g = Gate::one(GateKind::Z, read_q());
    else if (tok == "MEASZ") g = Gate::one(GateKind::MeasureZ, read_q());
    else if (tok == "RESET") g = Gate::one(GateKind::Reset, read_q());
    else if (tok == "CX" || tok == "CZ" || tok == "SWAP") {
      const uint32_t a = read_q();
      const uint32_t b = read_q();
      g = Gate::two(tok == "CX" ? GateKind::CX : tok == "CZ" ? GateKind::CZ : GateKind::Swap, a, b);
    } else if (tok == "RX" || tok == "RY" || tok == "RZ") {
      const uint32_t q = read_q();
      double theta;
      if (!(ls >> theta)) throw std::invalid_argument("circuit text: bad angle in '" + line + "'");
      g = Gate::rotation(tok == "RX" ? GateKind::Rx : tok == "RY" ? GateKind::Ry : GateKind::Rz,
                         q, theta);
    } else if (tok == "CPAULI") {
      const uint32_t control = read_q();
      std::string literal;
      if (!(ls >> literal)) throw std::invalid_argument("circuit text: missing CPauli literal");
      g = Gate::cpauli(control, parse_pauli(literal));
    } else {
      throw std::invalid_argument("circuit text: unknown gate '" + tok + "'");
    }
    c.gates.push_back(g);
  }
  if (!have_header) throw std::invalid_argument("circuit text: missing header");
  c.validate();
  return c;
}

void save_circuit(const Circuit& c, const std::string& path,
                  const std::vector<std::string>& manifest) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  out << to_text(c, manifest);
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return circuit_from_text(buf.str());
}

}  // namespace qem
