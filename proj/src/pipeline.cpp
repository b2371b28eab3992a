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

#include "dqc/pipeline.hpp"

#include <chrono>

#include "dqc/errors.hpp"
#include "dqc/lowering.hpp"
#include "dqc/metrics.hpp"

namespace dqc {

CompileResult compile(const Circuit& input, const HardwareSpec& hw_in, const CompileOptions& options,
                      const std::string& name) {
  hw_in.validate();
  CompileResult r;
  r.input = input;
  const auto started = std::chrono::steady_clock::now();

  r.hardware = hw_in.resolved(input.num_qubits());
  r.native = decompose_to_basis(input);
  const ScheduledCircuit sched = schedule_asap(r.native, r.hardware.durations);
  const double dt = options.dt.value_or(r.hardware.durations.epr_generation_period);
  if (!(dt > 0.0)) throw MappingError("window length must be positive");
  r.global = global_assign(r.native, r.hardware, options.seed);
  r.mapped = local_optimize(sched, r.hardware, r.global, dt, options.seed);
  r.expanded = expand_program(r.mapped, options.faults);

  const auto finished = std::chrono::steady_clock::now();

  CompileMetrics& m = r.metrics;
  m.name = name;
  m.num_qubits = input.num_qubits();
  m.base_total_2q = count_two_qubit(r.native);
  m.base_interqpu_trivial =
      count_inter_qpu(r.native, trivial_qpu_map(input.num_qubits(), r.hardware.num_qpus()));
  m.global_interqpu = count_inter_qpu(r.native, r.global.qpu_vector());
  const Circuit view = r.mapped.logical_view();
  m.local_total_2q_logical = count_two_qubit(view);
  m.local_total_2q_expanded = count_two_qubit(r.expanded.circuit);
  m.local_interqpu = count_inter_qpu(view, r.hardware.physical_qpu_map());
  m.remote_gates = r.mapped.remote_gate_count();
  m.teleports = r.mapped.teleport_count();
  m.epr_consumed = r.mapped.epr_consumed();
  m.windows = r.mapped.windows.size();
  for (const auto& w : r.mapped.windows) m.windows_over_budget += w.within_budget() ? 0 : 1;
  m.makespan = sched.makespan();
  m.compile_runtime_seconds = std::chrono::duration<double>(finished - started).count();
  m.seed = options.seed;
  m.dt = dt;
  m.hardware_fingerprint = r.hardware.fingerprint();
  return r;
}

EquivalenceReport verify_compiled(const CompileResult& result, double tol) {
  SimOptions opts;
  opts.merge_branches = true;
  return check_equivalence(result.input, result.expanded.circuit, result.expanded.input_map,
                           result.expanded.output_map, tol, opts);
}

}  // namespace dqc
