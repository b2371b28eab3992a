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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dqc/schedule.hpp"

namespace dqc {

struct QpuSpec {
  int id = 0;
  std::optional<std::size_t> data_capacity;  // empty means "auto": ceil(N / k)
  std::size_t epr_slots = 2;

  friend bool operator==(const QpuSpec&, const QpuSpec&) = default;
};

struct LinkSpec {
  int qpu_a = 0;
  int qpu_b = 1;
  std::size_t channels = 1;

  friend bool operator==(const LinkSpec&, const LinkSpec&) = default;
};

/// Target machine: all-to-all QPUs, each with data slots followed by EPR
/// reservoir slots, joined by EPR-generating links.
struct HardwareSpec {
  std::vector<QpuSpec> qpus;
  std::vector<LinkSpec> links;
  DurationModel durations;
  bool throttle_epr = false;

  /// Two QPUs with auto capacity, two reservoir slots each and one link.
  static HardwareSpec two_qpu_default();

  std::size_t num_qpus() const { return qpus.size(); }
  /// Position of the QPU with `id`; throws HardwareSpecError if absent.
  std::size_t qpu_index(int id) const;
  /// Throws HardwareSpecError for bad ids, capacities or durations.
  void validate() const;

  bool is_resolved() const;
  /// Replaces "auto" capacities for a circuit of `num_qubits` qubits.
  HardwareSpec resolved(std::size_t num_qubits) const;

  /// Requires a resolved spec.
  std::size_t data_capacity(std::size_t qpu) const;
  std::size_t total_data_capacity() const;
  std::size_t epr_slots(std::size_t qpu) const { return qpus.at(qpu).epr_slots; }

  /// EPR channels summed over all links.
  std::size_t total_channels() const;
  /// EPR pairs the links can supply within an interval of length `dt`.
  std::size_t epr_budget(double dt) const;

  // Physical layout of a resolved spec: QPU q owns a contiguous block of
  // data slots followed by its reservoir slots.
  std::size_t num_physical_qubits() const;
  std::size_t physical_base(std::size_t qpu) const;
  std::size_t data_slot(std::size_t qpu, std::size_t slot) const;
  std::size_t reservoir_slot(std::size_t qpu, std::size_t slot) const;
  std::vector<int> physical_qpu_map() const;

  /// Stable 64-bit FNV-1a hash of the canonical JSON form, as 16 hex digits.
  std::string fingerprint() const;
  std::string to_json() const;

  friend bool operator==(const HardwareSpec&, const HardwareSpec&) = default;
};

HardwareSpec parse_hardware_spec(std::string_view json_text);
HardwareSpec load_hardware_spec(const std::string& path);

}  // namespace dqc
