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

// Command-line driver: compile, bench and verify.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dqc/errors.hpp"
#include "dqc/hardware.hpp"
#include "dqc/pipeline.hpp"
#include "dqc/qasm.hpp"
#include "dqc/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitNotEquivalent = 3;

dqc::HardwareSpec load_spec(const std::string& path) {
  return path.empty() ? dqc::HardwareSpec::two_qpu_default() : dqc::load_hardware_spec(path);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw dqc::Error("cannot write '" + path + "'");
  out << text;
}

struct CommonArgs {
  std::string hardware;
  std::optional<double> dt;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--hardware", args.hardware, "Hardware spec (JSON); default: two QPUs")
      ->check(CLI::ExistingFile);
  cmd->add_option("--dt", args.dt, "Window length in time units (default: EPR period)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", args.seed, "Seed for slot placement");
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const dqc::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed quantum circuit compiler"};
  app.require_subcommand(1);

  CommonArgs compile_args;
  std::string compile_input;
  bool expand = false;
  std::string emit_path;
  std::string report_path;
  auto* compile_cmd = app.add_subcommand("compile", "Map a circuit onto the QPUs");
  compile_cmd->add_option("input", compile_input, "OpenQASM 2.0 file")->required();
  add_common(compile_cmd, compile_args);
  compile_cmd->add_flag("--expand-gadgets", expand, "Emit the gadget-expanded physical circuit");
  compile_cmd->add_option("--emit", emit_path, "Write the compiled circuit as OpenQASM");
  compile_cmd->add_option("--report", report_path, "Write a JSON report");

  CommonArgs bench_args;
  std::string corpus_dir;
  std::size_t repeats = 1;
  std::string bench_json;
  std::string bench_csv;
  auto* bench_cmd = app.add_subcommand("bench", "Compile every circuit of a corpus");
  bench_cmd->add_option("corpus", corpus_dir, "Directory of .qasm files")->required();
  add_common(bench_cmd, bench_args);
  bench_cmd->add_option("--repeats", repeats, "Seeds per circuit")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--report", bench_json, "Write a JSON report");
  bench_cmd->add_option("--csv", bench_csv, "Write a CSV report");

  CommonArgs verify_args;
  std::string verify_input;
  double tol = 1e-9;
  std::optional<std::size_t> drop_correction;
  auto* verify_cmd = app.add_subcommand("verify", "Compile and check equivalence by simulation");
  verify_cmd->add_option("input", verify_input, "OpenQASM 2.0 file")->required();
  add_common(verify_cmd, verify_args);
  verify_cmd->add_option("--tol", tol, "Fidelity tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--drop-correction", drop_correction)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  if (*compile_cmd) {
    return guarded([&] {
      const dqc::Circuit input = dqc::parse_qasm_file(compile_input);
      dqc::CompileOptions opts{compile_args.dt, compile_args.seed, {}};
      const auto result = dqc::compile(input, load_spec(compile_args.hardware), opts,
                                       std::filesystem::path(compile_input).stem().string());
      if (!emit_path.empty()) {
        write_file(emit_path, expand ? dqc::emit_qasm(result.expanded.circuit)
                                     : dqc::emit_qasm(result.mapped.logical_view(),
                                                      {.markers_as_comments = true}));
      }
      const std::string report = dqc::compile_report_json(result.metrics);
      if (!report_path.empty()) write_file(report_path, report);
      const auto& m = result.metrics;
      std::cout << m.name << ": qubits " << m.num_qubits << ", 2q " << m.base_total_2q
                << ", inter-QPU trivial " << m.base_interqpu_trivial << ", global "
                << m.global_interqpu << ", local " << m.local_interqpu << " (" << m.remote_gates
                << " remote, " << m.teleports << " teleports)\n";
      return kExitOk;
    });
  }

  if (*bench_cmd) {
    return guarded([&] {
      const auto hw = load_spec(bench_args.hardware);
      const auto files = dqc::corpus_files(corpus_dir);
      if (files.empty()) {
        std::cerr << "error: no .qasm files in '" << corpus_dir << "'\n";
        return kExitInput;
      }
      dqc::BenchOptions opts{repeats, bench_args.seed, bench_args.dt};
      std::vector<dqc::BenchRecord> records;
      std::size_t ok = 0;
      for (const auto& f : files) {
        records.push_back(dqc::bench_file(f, hw, opts));
        const auto& r = records.back();
        if (r.ok) {
          ++ok;
        } else {
          std::cerr << "warning: " << r.name << ": " << r.error << "\n";
        }
      }
      if (!bench_json.empty()) write_file(bench_json, dqc::bench_report_json(records, opts));
      const std::string csv = dqc::bench_report_csv(records);
      if (!bench_csv.empty()) write_file(bench_csv, csv);
      std::cout << csv;
      return ok > 0 ? kExitOk : kExitInput;
    });
  }

  return guarded([&] {
    const dqc::Circuit input = dqc::parse_qasm_file(verify_input);
    dqc::CompileOptions opts{verify_args.dt, verify_args.seed, {}};
    opts.faults.drop_correction = drop_correction;
    const auto result = dqc::compile(input, load_spec(verify_args.hardware), opts);
    const auto report = dqc::verify_compiled(result, tol);
    if (!report.equivalent) {
      std::cerr << "not equivalent: input " << report.failing_input << ", branch "
                << report.failing_branch << "\n";
      return kExitNotEquivalent;
    }
    std::cout << "equivalent: " << report.inputs_checked << " inputs, " << report.branches_checked
              << " branches, worst fidelity " << report.worst_fidelity << "\n";
    return kExitOk;
  });
}
