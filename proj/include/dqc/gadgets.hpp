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
#include <vector>

#include "dqc/circuit.hpp"
#include "dqc/mapper.hpp"

namespace dqc {

/// h a; cx a, b. Takes |00> to (|00> + |11>)/sqrt(2).
std::vector<Gate> epr_prepare(Qubit a, Qubit b);

/// EPR-mediated CNOT. `slot1` sits with the control, `slot2` with the
/// target, and the pair must already hold a Bell state. Leaves both slots
/// measured (not reset).
std::vector<Gate> expand_remote_cnot(Qubit control, Qubit target, Qubit slot1, Qubit slot2,
                                     Bit m, Bit n);

/// Teleports `src` into `dst` through a Bell pair on (slot1, dst), where
/// slot1 sits with src. Resets src and slot1 to |0> afterwards.
std::vector<Gate> expand_teleport(Qubit src, Qubit slot1, Qubit dst, Bit m, Bit n);

/// Local relocation of a state into a slot known to hold |0>. Leaves `from`
/// in |0>.
std::vector<Gate> move_to_empty(Qubit from, Qubit to);

/// Fully expanded program over physical qubits.
struct ExpandedProgram {
  Circuit circuit;
  std::vector<int> qpu_of_qubit;
  /// Gate indices of the cx inside each EPR preparation: the interconnect
  /// events, which span QPUs by design.
  std::vector<std::size_t> interconnect_gates;
  std::vector<Qubit> input_map;   // logical -> physical before execution
  std::vector<Qubit> output_map;  // logical -> physical after execution
  std::size_t epr_pairs = 0;

  /// cx gates, other than interconnect events, whose qubits sit on
  /// different QPUs.
  std::size_t cross_qpu_gates() const;
};

/// Options that deliberately break the output, for fault-injection tests.
struct ExpansionFaults {
  /// Drop the n-th classical correction (0-based) emitted by a gadget.
  std::optional<std::size_t> drop_correction;
};

/// Replaces migrations and remote cx gates by their gadgets, with a fresh
/// Bell pair before each and fresh classical bits per gadget. Throws
/// MappingError when EPR throttling is enabled and a window exceeds its
/// budget.
ExpandedProgram expand_program(const MappedProgram& mp, const ExpansionFaults& faults = {});

}  // namespace dqc
