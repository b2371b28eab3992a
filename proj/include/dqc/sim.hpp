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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dqc/circuit.hpp"

namespace dqc {

using Amplitude = std::complex<double>;
using StateVector = std::vector<Amplitude>;

inline constexpr std::size_t kMaxSimQubits = 14;

/// One measurement history. `state` is normalized; `probability` is the
/// chance of reaching this branch.
struct BranchState {
  StateVector state;
  std::vector<int> bits;
  double probability = 1.0;
};

struct SimOptions {
  double prune_below = 1e-12;
  /// Fold together branches whose states agree up to a global phase and
  /// whose still-to-be-read bits agree. Off by default so every measurement
  /// history stays visible.
  bool merge_branches = false;
  std::size_t max_branches = 1U << 12;
};

/// Little-endian basis state: qubit i is bit i of `index`.
StateVector basis_state(std::size_t num_qubits, std::size_t index);

/// Tensor product of single-qubit states; factors[i] is qubit i.
StateVector product_state(std::span<const std::array<Amplitude, 2>> factors);

/// Runs the circuit from `initial`, forking at every measurement with both
/// outcomes possible. Classically controlled gates act per branch. Throws
/// SimulationError past kMaxSimQubits, on marker gates, or when the branch
/// count exceeds the limit.
std::vector<BranchState> simulate(const Circuit& circuit, StateVector initial,
                                  const SimOptions& options = {});

/// |<a|b>|^2 for normalized states.
double state_fidelity(std::span<const Amplitude> a, std::span<const Amplitude> b);

struct EquivalenceReport {
  bool equivalent = true;
  double worst_fidelity = 1.0;
  std::size_t inputs_checked = 0;
  std::size_t branches_checked = 0;
  std::string failing_input;  // empty when equivalent
  std::string failing_branch;
};

/// Compares a measurement-free reference over N qubits with a candidate
/// that may use extra qubits and bits. Reference qubit i enters the
/// candidate at input_map[i] (others start in |0>) and is read back from
/// output_map[i]. Inputs are all 2^N basis states plus the six uniform
/// products of |0>, |1>, |+>, |->, |+i>, |-i>. Every candidate branch must
/// reach fidelity >= 1 - tol with the reference output on the data qubits,
/// summed over the configurations of the remaining qubits.
EquivalenceReport check_equivalence(const Circuit& reference, const Circuit& candidate,
                                    std::span<const Qubit> input_map,
                                    std::span<const Qubit> output_map, double tol,
                                    const SimOptions& options = {});

/// check_equivalence with the same data qubits on both ends.
bool equivalent(const Circuit& reference, const Circuit& candidate,
                std::span<const Qubit> data_qubits, double tol);

/// Branch fidelity of `candidate_out` against `expected` on `data_qubits`,
/// summed over the configurations of the other qubits.
double reduced_fidelity(std::span<const Amplitude> expected, std::span<const Amplitude> candidate_out,
                        std::span<const Qubit> data_qubits);

/// Embeds an N-qubit state into `num_qubits` qubits, qubit i at map[i],
/// other qubits in |0>.
StateVector embed_state(std::span<const Amplitude> state, std::size_t num_qubits,
                        std::span<const Qubit> map);

}  // namespace dqc
