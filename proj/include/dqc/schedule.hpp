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

#include <optional>
#include <vector>

#include "dqc/circuit.hpp"

namespace dqc {

/// Gate durations in abstract time units. All values must be positive;
/// barriers take no time.
struct DurationModel {
  double rx = 1.0;
  double rz = 1.0;
  double h = 1.0;
  double cx = 2.0;
  double measure = 5.0;
  // Classical corrections and resets emitted by gadget expansion.
  double x = 1.0;
  double z = 1.0;
  double epr_generation_period = 200.0;

  /// Throws CircuitError for kinds outside the native + correction set.
  double duration(const Gate& gate) const;
  void validate() const;

  friend bool operator==(const DurationModel&, const DurationModel&) = default;
};

/// Half-open time interval [start, start + length).
struct TimeWindow {
  double start = 0.0;
  double length = 0.0;

  double end() const { return start + length; }
  bool contains(double t) const { return start <= t && t < end(); }

  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

struct ScheduledCircuit {
  Circuit circuit;
  std::vector<double> start_time;
  DurationModel durations;

  double finish_time(std::size_t gate) const;
  /// Latest finish time over all gates; 0 for an empty circuit.
  double makespan() const;
};

/// ASAP list scheduling: each gate starts when every qubit and classical bit
/// it touches is free. Barriers align their qubits without taking time.
ScheduledCircuit schedule_asap(const Circuit& circuit, const DurationModel& model = {});

}  // namespace dqc
