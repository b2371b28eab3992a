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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dqc/circuit.hpp"

namespace dqc {

/// Gates with exactly two qubit operands: cx, teleport and remote_cx, each
/// counted once. ccx and barriers do not count.
std::size_t count_two_qubit(const Circuit& circuit);

/// Two-qubit gates whose operands sit on different QPUs under `qpu_of`
/// (qubit -> QPU index, negative for unassigned), plus every teleport.
/// Throws CircuitError if a touched qubit is unassigned.
std::size_t count_inter_qpu(const Circuit& circuit, std::span<const int> qpu_of);

/// Trivial split of `num_qubits` logical qubits over `num_qpus` QPUs:
/// consecutive blocks of ceil(n / k) in index order.
std::vector<int> trivial_qpu_map(std::size_t num_qubits, std::size_t num_qpus);

}  // namespace dqc
