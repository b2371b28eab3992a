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

#include "dqc/metrics.hpp"

#include "dqc/errors.hpp"

namespace dqc {

std::size_t count_two_qubit(const Circuit& circuit) {
  std::size_t n = 0;
  for (const Gate& g : circuit.gates()) n += g.is_two_qubit() ? 1 : 0;
  return n;
}

std::size_t count_inter_qpu(const Circuit& circuit, std::span<const int> qpu_of) {
  auto qpu = [&](Qubit q) {
    if (q >= qpu_of.size() || qpu_of[q] < 0) {
      throw CircuitError("qubit " + std::to_string(q) + " has no QPU assignment");
    }
    return qpu_of[q];
  };
  std::size_t n = 0;
  for (const Gate& g : circuit.gates()) {
    if (!g.is_two_qubit()) continue;
    const bool spans = qpu(g.qubits[0]) != qpu(g.qubits[1]);
    if (g.kind == GateKind::Teleport || spans) ++n;
  }
  return n;
}

std::vector<int> trivial_qpu_map(std::size_t num_qubits, std::size_t num_qpus) {
  if (num_qpus == 0) throw CircuitError("trivial map needs at least one QPU");
  const std::size_t block = (num_qubits + num_qpus - 1) / num_qpus;
  std::vector<int> out(num_qubits);
  for (std::size_t q = 0; q < num_qubits; ++q) out[q] = static_cast<int>(q / block);
  return out;
}

}  // namespace dqc
