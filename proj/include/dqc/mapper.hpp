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
#include <span>
#include <vector>

#include "dqc/graph.hpp"
#include "dqc/hardware.hpp"
#include "dqc/partition.hpp"
#include "dqc/schedule.hpp"

namespace dqc {

/// A data slot on a QPU (QPU position in the hardware spec, slot within its
/// data block).
struct Location {
  std::size_t qpu = 0;
  std::size_t slot = 0;

  friend bool operator==(const Location&, const Location&) = default;
};

/// Injective map from logical qubits to data slots.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::vector<std::size_t> capacities, std::size_t num_qubits);

  std::size_t num_qubits() const { return where_.size(); }
  std::size_t num_qpus() const { return capacities_.size(); }
  std::size_t capacity(std::size_t qpu) const { return capacities_.at(qpu); }
  std::size_t occupancy(std::size_t qpu) const;

  bool is_placed(Qubit q) const { return where_.at(q).has_value(); }
  bool is_complete() const;
  /// Throws MappingError for an unplaced qubit.
  const Location& location(Qubit q) const;
  std::size_t qpu(Qubit q) const { return location(q).qpu; }
  std::optional<Qubit> occupant(Location loc) const;
  std::vector<std::size_t> free_slots(std::size_t qpu) const;

  /// Places an unplaced qubit into a free slot.
  void place(Qubit q, Location loc);
  /// Moves a placed qubit into a free slot.
  void move(Qubit q, Location loc);
  /// Swaps the slots of two placed qubits.
  void exchange(Qubit a, Qubit b);

  /// qubit -> QPU, -1 for unplaced qubits.
  std::vector<int> qpu_vector() const;
  PartitionVector partition() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  void check_location(Location loc) const;

  std::vector<std::size_t> capacities_;
  std::vector<std::optional<Location>> where_;
  std::vector<std::vector<std::optional<Qubit>>> slots_;
};

/// Teleportation of one logical qubit between QPUs. Two entries that name
/// each other in `exchange_with` form an exchange and sit next to each
/// other in the window's migration list.
struct Migration {
  Qubit qubit = 0;
  Location from;
  Location to;
  std::optional<Qubit> exchange_with;

  friend bool operator==(const Migration&, const Migration&) = default;
};

enum class GateTag : std::uint8_t { Local, Remote };

struct MappingWindow {
  TimeWindow interval;
  std::vector<Migration> migrations;  // applied at the start of the window
  Assignment assignment;              // in force during the window
  std::vector<std::size_t> gates;     // source gate indices, in list order
  std::size_t remote_gates = 0;
  std::size_t epr_consumed = 0;
  std::size_t epr_budget = 0;

  bool within_budget() const { return epr_consumed <= epr_budget; }
};

struct MappedProgram {
  HardwareSpec hardware;  // resolved
  ScheduledCircuit source;
  double dt = 0.0;
  Assignment initial;
  std::vector<MappingWindow> windows;
  std::vector<GateTag> tags;  // per source gate

  const Assignment& final_assignment() const;
  std::size_t remote_gate_count() const;
  std::size_t teleport_count() const;
  std::size_t epr_consumed() const;

  /// Source gate indices in execution order (window by window).
  std::vector<std::size_t> execution_order() const;

  /// Marker-level program over physical qubits: each migration becomes a
  /// teleport marker, each remote cx a remote_cx marker, other gates are
  /// relabelled through their window's assignment.
  Circuit logical_view() const;
};

/// Partition of the full interaction graph over the QPUs. Qubits without
/// two-qubit gates are spread first (into the QPU with most room); the rest
/// are split by spectral partitioning plus KL over the remaining room.
PartitionVector global_partition(const Circuit& circuit, const HardwareSpec& hw);

/// global_partition followed by a seeded random choice of slots within each
/// QPU. Throws CapacityError if the circuit is wider than the hardware.
Assignment global_assign(const Circuit& circuit, const HardwareSpec& hw, std::uint64_t seed);

/// Consecutive windows [i dt, (i+1) dt) covering [0, makespan]. Empty for an
/// empty circuit. Throws MappingError unless dt > 0.
std::vector<TimeWindow> make_windows(const ScheduledCircuit& sched, double dt);

/// Window holding time t among `count` windows of length dt; times at or
/// past the end fall into the last window.
std::size_t window_index(double t, double dt, std::size_t count);

struct MigrationDecision {
  bool migrate = false;
  double benefit = 0.0;  // remote gates saved - remote gates created - 1
};

/// Evaluates moving `q` to its proposed QPU in isolation (no capacity check).
MigrationDecision migration_rule(Qubit q, const InteractionGraph& window_graph,
                                 std::span<const int> current_qpu,
                                 const PartitionVector& proposal);

/// Rolling-window re-partitioning. Every window repartitions its active
/// qubits (those with a two-qubit gate in the window) over the room left by
/// resident inactive qubits, then applies profitable migrations greedily.
MappedProgram local_optimize(const ScheduledCircuit& sched, const HardwareSpec& hw,
                             const Assignment& init, double dt, std::uint64_t seed);

}  // namespace dqc
