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

#include "dqc/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "dqc/errors.hpp"

namespace dqc {

double DurationModel::duration(const Gate& gate) const {
  switch (gate.kind) {
    case GateKind::RX: return rx;
    case GateKind::RZ: return rz;
    case GateKind::H: return h;
    case GateKind::CX: return cx;
    case GateKind::Measure: return measure;
    case GateKind::X: return x;
    case GateKind::Z: return z;
    case GateKind::Barrier: return 0.0;
    default:
      throw CircuitError("no duration for non-native gate '" +
                         std::string(gate_name(gate.kind)) + "'; lower the circuit first");
  }
}

void DurationModel::validate() const {
  for (double d : {rx, rz, h, cx, measure, x, z, epr_generation_period}) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw CircuitError("gate durations must be positive and finite");
    }
  }
}

double ScheduledCircuit::finish_time(std::size_t gate) const {
  return start_time.at(gate) + durations.duration(circuit.gates()[gate]);
}

double ScheduledCircuit::makespan() const {
  double end = 0.0;
  for (std::size_t i = 0; i < start_time.size(); ++i) end = std::max(end, finish_time(i));
  return end;
}

ScheduledCircuit schedule_asap(const Circuit& circuit, const DurationModel& model) {
  model.validate();
  std::vector<double> qubit_free(circuit.num_qubits(), 0.0);
  std::vector<double> bit_free(circuit.num_bits(), 0.0);
  ScheduledCircuit out{circuit, {}, model};
  out.start_time.reserve(circuit.size());

  for (const Gate& g : circuit.gates()) {
    const double d = model.duration(g);
    double start = 0.0;
    for (Qubit q : g.qubits) start = std::max(start, qubit_free[q]);
    if (g.target_bit) start = std::max(start, bit_free[*g.target_bit]);
    if (g.condition) start = std::max(start, bit_free[g.condition->bit]);

    const double finish = start + d;
    for (Qubit q : g.qubits) qubit_free[q] = finish;
    // Readers also hold the bit so a later measurement cannot overtake them.
    if (g.target_bit) bit_free[*g.target_bit] = finish;
    if (g.condition) bit_free[g.condition->bit] = std::max(bit_free[g.condition->bit], finish);
    out.start_time.push_back(start);
  }
  return out;
}

}  // namespace dqc
