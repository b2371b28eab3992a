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
#include <string>
#include <vector>

#include "dqc/hardware.hpp"
#include "dqc/pipeline.hpp"

namespace dqc {

inline constexpr const char* kReportSchema = "dqc-report/1";

/// Mean and sample standard deviation (0 for fewer than two values).
struct Spread {
  double mean = 0.0;
  double stddev = 0.0;
};

Spread spread(std::span<const double> values);

/// All runs of one corpus circuit.
struct BenchRecord {
  std::string name;
  std::string path;
  bool ok = false;
  std::string error;
  std::vector<CompileMetrics> runs;  // one per seed
};

struct BenchOptions {
  std::size_t repeats = 1;
  std::uint64_t first_seed = 0;
  std::optional<double> dt;
};

/// Compiles one file once per seed. Failures are captured in the record.
BenchRecord bench_file(const std::string& path, const HardwareSpec& hw, const BenchOptions& options);

/// Every *.qasm file in `dir`, in name order.
std::vector<std::string> corpus_files(const std::string& dir);

std::string compile_report_json(const CompileMetrics& metrics);
std::string bench_report_json(std::span<const BenchRecord> records, const BenchOptions& options);

/// Fixed column order: name, num_qubits, base_total_2q, base_interqpu_trivial,
/// global_interqpu_mean, global_interqpu_std, local_interqpu_mean,
/// local_interqpu_std, local_total_2q_logical_mean,
/// local_total_2q_expanded_mean, epr_consumed_mean,
/// compile_runtime_seconds_mean, repeats, dt, hardware_fingerprint, status.
std::string bench_report_csv(std::span<const BenchRecord> records);

}  // namespace dqc
