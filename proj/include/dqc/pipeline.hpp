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
#include <cstdint>
#include <optional>
#include <string>

#include "dqc/gadgets.hpp"
#include "dqc/hardware.hpp"
#include "dqc/mapper.hpp"
#include "dqc/schedule.hpp"
#include "dqc/sim.hpp"

namespace dqc {

struct CompileOptions {
  std::optional<double> dt;  // default: the EPR generation period
  std::uint64_t seed = 0;
  ExpansionFaults faults;
};

/// Counts gathered for one compilation.
struct CompileMetrics {
  std::string name;
  std::size_t num_qubits = 0;
  std::size_t base_total_2q = 0;
  std::size_t base_interqpu_trivial = 0;
  std::size_t global_interqpu = 0;
  /// Remote cx and teleports counted once each.
  std::size_t local_total_2q_logical = 0;
  /// Physical cx gates after gadget expansion, Bell-pair preparation included.
  std::size_t local_total_2q_expanded = 0;
  std::size_t local_interqpu = 0;
  std::size_t remote_gates = 0;
  std::size_t teleports = 0;
  std::size_t epr_consumed = 0;
  std::size_t windows = 0;
  std::size_t windows_over_budget = 0;
  double makespan = 0.0;
  double compile_runtime_seconds = 0.0;
  std::uint64_t seed = 0;
  double dt = 0.0;
  std::string hardware_fingerprint;
};

struct CompileResult {
  Circuit input;
  Circuit native;
  HardwareSpec hardware;  // resolved for the input width
  Assignment global;
  MappedProgram mapped;
  ExpandedProgram expanded;
  CompileMetrics metrics;
};

/// lower -> schedule -> global_assign -> local_optimize -> expand_program.
/// Throws CapacityError when the circuit does not fit.
CompileResult compile(const Circuit& input, const HardwareSpec& hw, const CompileOptions& options,
                      const std::string& name = "circuit");

/// Simulator check of a compiled program against its input.
EquivalenceReport verify_compiled(const CompileResult& result, double tol);

}  // namespace dqc
