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

#include "dqc/report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "dqc/errors.hpp"
#include "dqc/qasm.hpp"

namespace dqc {

using nlohmann::json;
namespace fs = std::filesystem;

Spread spread(std::span<const double> values) {
  if (values.empty()) return {};
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

BenchRecord bench_file(const std::string& path, const HardwareSpec& hw, const BenchOptions& options) {
  BenchRecord rec;
  rec.path = path;
  rec.name = fs::path(path).stem().string();
  try {
    const Circuit input = parse_qasm_file(path);
    for (std::size_t r = 0; r < options.repeats; ++r) {
      CompileOptions co;
      co.dt = options.dt;
      co.seed = options.first_seed + r;
      rec.runs.push_back(compile(input, hw, co, rec.name).metrics);
    }
    rec.ok = true;
  } catch (const std::exception& e) {
    rec.ok = false;
    rec.error = e.what();
    rec.runs.clear();
  }
  return rec;
}

std::vector<std::string> corpus_files(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error("corpus directory '" + dir + "' does not exist");
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".qasm") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

namespace {

json metrics_json(const CompileMetrics& m) {
  return {
      {"name", m.name},
      {"num_qubits", m.num_qubits},
      {"base_total_2q", m.base_total_2q},
      {"base_interqpu_trivial", m.base_interqpu_trivial},
      {"global_interqpu", m.global_interqpu},
      {"local_total_2q_logical", m.local_total_2q_logical},
      {"local_total_2q_expanded", m.local_total_2q_expanded},
      {"local_interqpu", m.local_interqpu},
      {"remote_gates", m.remote_gates},
      {"teleports", m.teleports},
      {"epr_consumed", m.epr_consumed},
      {"windows", m.windows},
      {"windows_over_budget", m.windows_over_budget},
      {"makespan", m.makespan},
      {"compile_runtime_seconds", m.compile_runtime_seconds},
      {"seed", m.seed},
      {"dt", m.dt},
      {"hardware_fingerprint", m.hardware_fingerprint},
  };
}

Spread field_spread(const BenchRecord& rec, const std::function<double(const CompileMetrics&)>& get) {
  std::vector<double> values;
  for (const auto& m : rec.runs) values.push_back(get(m));
  return spread(values);
}

json spread_json(Spread s) { return {{"mean", s.mean}, {"std", s.stddev}}; }

}  // namespace

std::string compile_report_json(const CompileMetrics& metrics) {
  json root{{"schema", kReportSchema}, {"kind", "compile"}, {"record", metrics_json(metrics)}};
  return root.dump(2);
}

std::string bench_report_json(std::span<const BenchRecord> records, const BenchOptions& options) {
  json list = json::array();
  for (const BenchRecord& rec : records) {
    json node{{"name", rec.name}, {"path", rec.path}, {"ok", rec.ok}};
    if (!rec.ok) {
      node["error"] = rec.error;
      list.push_back(std::move(node));
      continue;
    }
    const CompileMetrics& first = rec.runs.front();
    node["num_qubits"] = first.num_qubits;
    node["base_total_2q"] = first.base_total_2q;
    node["base_interqpu_trivial"] = first.base_interqpu_trivial;
    node["dt"] = first.dt;
    node["hardware_fingerprint"] = first.hardware_fingerprint;
    node["summary"] = {
        {"global_interqpu", spread_json(field_spread(rec, [](auto& m) { return double(m.global_interqpu); }))},
        {"local_interqpu", spread_json(field_spread(rec, [](auto& m) { return double(m.local_interqpu); }))},
        {"local_total_2q_logical",
         spread_json(field_spread(rec, [](auto& m) { return double(m.local_total_2q_logical); }))},
        {"local_total_2q_expanded",
         spread_json(field_spread(rec, [](auto& m) { return double(m.local_total_2q_expanded); }))},
        {"epr_consumed", spread_json(field_spread(rec, [](auto& m) { return double(m.epr_consumed); }))},
        {"compile_runtime_seconds",
         spread_json(field_spread(rec, [](auto& m) { return m.compile_runtime_seconds; }))},
    };
    json runs = json::array();
    for (const auto& m : rec.runs) runs.push_back(metrics_json(m));
    node["runs"] = std::move(runs);
    list.push_back(std::move(node));
  }
  json root{{"schema", kReportSchema},
            {"kind", "bench"},
            {"repeats", options.repeats},
            {"first_seed", options.first_seed},
            {"records", std::move(list)}};
  return root.dump(2);
}

std::string bench_report_csv(std::span<const BenchRecord> records) {
  std::ostringstream out;
  out << "name,num_qubits,base_total_2q,base_interqpu_trivial,global_interqpu_mean,"
         "global_interqpu_std,local_interqpu_mean,local_interqpu_std,"
         "local_total_2q_logical_mean,local_total_2q_expanded_mean,epr_consumed_mean,"
         "compile_runtime_seconds_mean,repeats,dt,hardware_fingerprint,status\n";
  for (const BenchRecord& rec : records) {
    if (!rec.ok) {
      out << rec.name << ",,,,,,,,,,,,0,,,error\n";
      continue;
    }
    const CompileMetrics& f = rec.runs.front();
    const auto g = field_spread(rec, [](auto& m) { return double(m.global_interqpu); });
    const auto l = field_spread(rec, [](auto& m) { return double(m.local_interqpu); });
    const auto tl = field_spread(rec, [](auto& m) { return double(m.local_total_2q_logical); });
    const auto te = field_spread(rec, [](auto& m) { return double(m.local_total_2q_expanded); });
    const auto e = field_spread(rec, [](auto& m) { return double(m.epr_consumed); });
    const auto t = field_spread(rec, [](auto& m) { return m.compile_runtime_seconds; });
    out << rec.name << ',' << f.num_qubits << ',' << f.base_total_2q << ','
        << f.base_interqpu_trivial << ',' << g.mean << ',' << g.stddev << ',' << l.mean << ','
        << l.stddev << ',' << tl.mean << ',' << te.mean << ',' << e.mean << ',' << t.mean << ','
        << rec.runs.size() << ',' << f.dt << ',' << f.hardware_fingerprint << ",ok\n";
  }
  return out.str();
}

}  // namespace dqc
