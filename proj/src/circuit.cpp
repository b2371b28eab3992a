// Copyright 2026 The dqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dqc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dqc/errors.hpp"

namespace dqc {

QasmError::QasmError(const std::string& message, std::size_t line,
                     std::size_t column)
    : Error(line == 0 ? message
                      : "line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "rx";
    case GateKind::RZ: return "rz";
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::CX: return "cx";
    case GateKind::CCX: return "ccx";
    case GateKind::Measure: return "measure";
    case GateKind::Barrier: return "barrier";
    case GateKind::EprPrepare: return "epr_prepare";
    case GateKind::Teleport: return "teleport";
    case GateKind::RemoteCX: return "remote_cx";
  }
  return "?";
}

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::EprPrepare:
    case GateKind::Teleport:
    case GateKind::RemoteCX:
      return 2;
    case GateKind::CCX:
      return 3;
    case GateKind::Barrier:
      return 0;
    default:
      return 1;
  }
}

bool is_parametric(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RZ;
}

bool is_marker(GateKind kind) {
  return kind == GateKind::EprPrepare || kind == GateKind::Teleport ||
         kind == GateKind::RemoteCX;
}

bool is_native(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RZ:
    case GateKind::H:
    case GateKind::CX:
    case GateKind::Measure:
    case GateKind::Barrier:
      return true;
    default:
      return false;
  }
}

std::string to_string(const Gate& gate) {
  std::ostringstream out;
  if (gate.condition) {
    out << "if(c" << gate.condition->bit << "==" << gate.condition->value << ") ";
  }
  out << gate_name(gate.kind);
  if (is_parametric(gate.kind)) out << "(" << gate.angle << ")";
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    out << (i == 0 ? " q" : ",q") << gate.qubits[i];
  }
  if (gate.target_bit) out << " -> c" << *gate.target_bit;
  return out.str();
}

Circuit::Circuit(std::size_t num_qubits, std::size_t num_bits)
    : num_qubits_(num_qubits), num_bits_(0) {
  if (num_qubits > 0) qregs_.push_back({"q", num_qubits});
  for (std::size_t i = 0; i < num_bits; ++i) add_bit();
}

void Circuit::validate(const Gate& gate) const {
  const std::size_t arity = gate_arity(gate.kind);
  if (arity != 0 && gate.qubits.size() != arity) {
    throw CircuitError(std::string(gate_name(gate.kind)) + " expects " +
                       std::to_string(arity) + " qubit operand(s)");
  }
  if (gate.kind == GateKind::Barrier && gate.qubits.empty()) {
    throw CircuitError("barrier without operands");
  }
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    if (gate.qubits[i] >= num_qubits_) {
      throw CircuitError("qubit " + std::to_string(gate.qubits[i]) +
                         " out of range in " + to_string(gate));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.qubits[i] == gate.qubits[j]) {
        throw CircuitError("repeated operand in " + to_string(gate));
      }
    }
  }
  if (!std::isfinite(gate.angle)) {
    throw CircuitError("non-finite angle in " + to_string(gate));
  }
  if (gate.kind == GateKind::Measure) {
    if (!gate.target_bit) throw CircuitError("measure without a target bit");
    if (*gate.target_bit >= num_bits_) {
      throw CircuitError("bit " + std::to_string(*gate.target_bit) + " out of range");
    }
  } else if (gate.target_bit) {
    throw CircuitError("only measure writes a classical bit");
  }
  if (gate.condition) {
    if (gate.condition->bit >= num_bits_) {
      throw CircuitError("condition bit " + std::to_string(gate.condition->bit) +
                         " out of range");
    }
    if (gate.condition->value != 0 && gate.condition->value != 1) {
      throw CircuitError("condition value must be 0 or 1");
    }
  }
}

Circuit& Circuit::add(Gate gate) {
  validate(gate);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const std::vector<Gate>& gates) {
  for (const Gate& g : gates) add(g);
  return *this;
}

std::string Circuit::unique_creg_name(const std::string& hint) const {
  auto taken = [&](const std::string& name) {
    return std::any_of(cregs_.begin(), cregs_.end(),
                       [&](const Register& r) { return r.name == name; }) ||
           std::any_of(qregs_.begin(), qregs_.end(),
                       [&](const Register& r) { return r.name == name; });
  };
  for (std::size_t i = num_bits_;; ++i) {
    std::string name = hint + std::to_string(i);
    if (!taken(name)) return name;
  }
}

Bit Circuit::add_bit(const std::string& name_hint) {
  cregs_.push_back({unique_creg_name(name_hint), 1});
  return num_bits_++;
}

void Circuit::set_registers(std::vector<Register> qregs, std::vector<Register> cregs) {
  std::size_t nq = 0;
  std::size_t nb = 0;
  for (const Register& r : qregs) nq += r.size;
  for (const Register& r : cregs) nb += r.size;
  if (nq != num_qubits_ || nb != num_bits_) {
    throw CircuitError("register sizes do not match circuit widths");
  }
  qregs_ = std::move(qregs);
  cregs_ = std::move(cregs);
}

}  // namespace dqc
