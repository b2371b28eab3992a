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

#include "dqc/lowering.hpp"

#include <numbers>

#include "dqc/errors.hpp"

namespace dqc {

std::vector<Gate> toffoli_clifford_t(Qubit a, Qubit b, Qubit c) {
  return {
      Gate::h(c),     Gate::cx(b, c), Gate::tdg(c), Gate::cx(a, c), Gate::t(c),
      Gate::cx(b, c), Gate::tdg(c),   Gate::cx(a, c), Gate::t(b),   Gate::t(c),
      Gate::h(c),     Gate::cx(a, b), Gate::t(a),   Gate::tdg(b),   Gate::cx(a, b),
  };
}

namespace {

constexpr double kPi = std::numbers::pi;

void lower_one(const Gate& g, std::vector<Gate>& out) {
  const Qubit q = g.qubits.empty() ? 0 : g.qubits[0];
  switch (g.kind) {
    case GateKind::RX:
    case GateKind::RZ:
    case GateKind::H:
    case GateKind::CX:
    case GateKind::Measure:
    case GateKind::Barrier:
      out.push_back(g);
      return;
    case GateKind::X: out.push_back(Gate::rx(q, kPi)); return;
    case GateKind::Z: out.push_back(Gate::rz(q, kPi)); return;
    case GateKind::S: out.push_back(Gate::rz(q, kPi / 2)); return;
    case GateKind::Sdg: out.push_back(Gate::rz(q, -kPi / 2)); return;
    case GateKind::T: out.push_back(Gate::rz(q, kPi / 4)); return;
    case GateKind::Tdg: out.push_back(Gate::rz(q, -kPi / 4)); return;
    case GateKind::CCX:
      for (const Gate& part : toffoli_clifford_t(g.qubits[0], g.qubits[1], g.qubits[2])) {
        lower_one(part, out);
      }
      return;
    case GateKind::EprPrepare:
    case GateKind::Teleport:
    case GateKind::RemoteCX:
      break;
  }
  throw CircuitError("cannot lower marker gate '" + std::string(gate_name(g.kind)) + "'");
}

}  // namespace

Circuit decompose_to_basis(const Circuit& circuit) {
  Circuit out(circuit.num_qubits(), 0);
  for (std::size_t b = 0; b < circuit.num_bits(); ++b) out.add_bit();
  out.set_registers(circuit.qregs(), circuit.cregs());
  std::vector<Gate> lowered;
  for (const Gate& g : circuit.gates()) {
    lowered.clear();
    lower_one(g, lowered);
    for (Gate& part : lowered) {
      part.condition = g.condition;
      out.add(std::move(part));
    }
  }
  return out;
}

}  // namespace dqc
