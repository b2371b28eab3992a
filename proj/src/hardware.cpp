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

#include "dqc/hardware.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "dqc/errors.hpp"

namespace dqc {

using nlohmann::json;

namespace {

std::size_t get_count(const json& node, const char* key, std::size_t fallback) {
  if (!node.contains(key)) return fallback;
  const json& v = node.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw HardwareSpecError(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

double get_duration(const json& node, const char* key, double fallback) {
  if (!node.contains(key)) return fallback;
  const json& v = node.at(key);
  if (!v.is_number()) throw HardwareSpecError(std::string("duration '") + key + "' must be a number");
  return v.get<double>();
}

json to_json_tree(const HardwareSpec& hw) {
  json qpus = json::array();
  for (const QpuSpec& q : hw.qpus) {
    json node{{"id", q.id}, {"epr_slots", q.epr_slots}};
    node["data_capacity"] = q.data_capacity ? json(*q.data_capacity) : json("auto");
    qpus.push_back(std::move(node));
  }
  json links = json::array();
  for (const LinkSpec& l : hw.links) {
    links.push_back({{"qpu_a", l.qpu_a}, {"qpu_b", l.qpu_b}, {"channels", l.channels}});
  }
  const DurationModel& d = hw.durations;
  return {{"qpus", qpus},
          {"links", links},
          {"durations",
           {{"rx", d.rx},
            {"rz", d.rz},
            {"h", d.h},
            {"cx", d.cx},
            {"measure", d.measure},
            {"x", d.x},
            {"z", d.z},
            {"epr_period", d.epr_generation_period}}},
          {"throttle_epr", hw.throttle_epr}};
}

}  // namespace

HardwareSpec HardwareSpec::two_qpu_default() {
  HardwareSpec hw;
  hw.qpus = {QpuSpec{0, std::nullopt, 2}, QpuSpec{1, std::nullopt, 2}};
  hw.links = {LinkSpec{0, 1, 2}};
  return hw;
}

std::size_t HardwareSpec::qpu_index(int id) const {
  for (std::size_t i = 0; i < qpus.size(); ++i) {
    if (qpus[i].id == id) return i;
  }
  throw HardwareSpecError("unknown QPU id " + std::to_string(id));
}

void HardwareSpec::validate() const {
  if (qpus.empty()) throw HardwareSpecError("hardware spec lists no QPUs");
  std::set<int> ids;
  for (const QpuSpec& q : qpus) {
    if (!ids.insert(q.id).second) throw HardwareSpecError("duplicate QPU id " + std::to_string(q.id));
    if (q.data_capacity && *q.data_capacity == 0) {
      throw HardwareSpecError("QPU " + std::to_string(q.id) + " has zero data capacity");
    }
  }
  for (const LinkSpec& l : links) {
    const std::size_t a = qpu_index(l.qpu_a);
    const std::size_t b = qpu_index(l.qpu_b);
    if (a == b) throw HardwareSpecError("link joins QPU " + std::to_string(l.qpu_a) + " to itself");
    if (l.channels == 0) throw HardwareSpecError("link has zero channels");
    if (qpus[a].epr_slots == 0 || qpus[b].epr_slots == 0) {
      throw HardwareSpecError("linked QPUs need at least one EPR slot");
    }
  }
  if (qpus.size() > 1 && links.empty()) throw HardwareSpecError("QPUs are not linked");
  try {
    durations.validate();
  } catch (const CircuitError& e) {
    throw HardwareSpecError(e.what());
  }
}

bool HardwareSpec::is_resolved() const {
  for (const QpuSpec& q : qpus) {
    if (!q.data_capacity) return false;
  }
  return true;
}

HardwareSpec HardwareSpec::resolved(std::size_t num_qubits) const {
  validate();
  HardwareSpec out = *this;
  const std::size_t k = qpus.size();
  const std::size_t share = std::max<std::size_t>(1, (num_qubits + k - 1) / k);
  for (QpuSpec& q : out.qpus) {
    if (!q.data_capacity) q.data_capacity = share;
  }
  return out;
}

std::size_t HardwareSpec::data_capacity(std::size_t qpu) const {
  const auto& cap = qpus.at(qpu).data_capacity;
  if (!cap) throw HardwareSpecError("data capacity is unresolved ('auto')");
  return *cap;
}

std::size_t HardwareSpec::total_data_capacity() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < qpus.size(); ++i) total += data_capacity(i);
  return total;
}

std::size_t HardwareSpec::total_channels() const {
  std::size_t total = 0;
  for (const LinkSpec& l : links) total += l.channels;
  return total;
}

std::size_t HardwareSpec::epr_budget(double dt) const {
  const double rounds = std::ceil(dt / durations.epr_generation_period);
  return total_channels() * static_cast<std::size_t>(std::max(rounds, 0.0));
}

std::size_t HardwareSpec::num_physical_qubits() const {
  return physical_base(qpus.size());
}

std::size_t HardwareSpec::physical_base(std::size_t qpu) const {
  std::size_t base = 0;
  for (std::size_t i = 0; i < qpu; ++i) base += data_capacity(i) + qpus[i].epr_slots;
  return base;
}

std::size_t HardwareSpec::data_slot(std::size_t qpu, std::size_t slot) const {
  if (slot >= data_capacity(qpu)) throw HardwareSpecError("data slot out of range");
  return physical_base(qpu) + slot;
}

std::size_t HardwareSpec::reservoir_slot(std::size_t qpu, std::size_t slot) const {
  if (slot >= qpus.at(qpu).epr_slots) throw HardwareSpecError("reservoir slot out of range");
  return physical_base(qpu) + data_capacity(qpu) + slot;
}

std::vector<int> HardwareSpec::physical_qpu_map() const {
  std::vector<int> map;
  for (std::size_t i = 0; i < qpus.size(); ++i) {
    map.insert(map.end(), data_capacity(i) + qpus[i].epr_slots, static_cast<int>(i));
  }
  return map;
}

std::string HardwareSpec::to_json() const { return to_json_tree(*this).dump(2); }

std::string HardwareSpec::fingerprint() const {
  const std::string canonical = to_json_tree(*this).dump();
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

namespace {

HardwareSpec spec_from_tree(const json& root) {
  if (!root.contains("qpus") || !root.at("qpus").is_array()) {
    throw HardwareSpecError("hardware spec needs a 'qpus' array");
  }
  HardwareSpec hw;
  for (const json& node : root.at("qpus")) {
    if (!node.is_object()) throw HardwareSpecError("each QPU entry must be an object");
    QpuSpec q;
    if (!node.contains("id") || !node.at("id").is_number_integer()) {
      throw HardwareSpecError("QPU entry needs an integer 'id'");
    }
    q.id = node.at("id").get<int>();
    if (node.contains("data_capacity")) {
      const json& cap = node.at("data_capacity");
      if (cap.is_string()) {
        if (cap.get<std::string>() != "auto") {
          throw HardwareSpecError("data_capacity must be an integer or \"auto\"");
        }
      } else {
        q.data_capacity = get_count(node, "data_capacity", 0);
      }
    }
    q.epr_slots = get_count(node, "epr_slots", 2);
    hw.qpus.push_back(q);
  }
  if (root.contains("links")) {
    if (!root.at("links").is_array()) throw HardwareSpecError("'links' must be an array");
    for (const json& node : root.at("links")) {
      if (!node.is_object() || !node.contains("qpu_a") || !node.contains("qpu_b")) {
        throw HardwareSpecError("each link needs 'qpu_a' and 'qpu_b'");
      }
      LinkSpec l;
      l.qpu_a = node.at("qpu_a").get<int>();
      l.qpu_b = node.at("qpu_b").get<int>();
      l.channels = get_count(node, "channels", 1);
      hw.links.push_back(l);
    }
  }
  if (root.contains("durations")) {
    const json& d = root.at("durations");
    if (!d.is_object()) throw HardwareSpecError("'durations' must be an object");
    DurationModel& m = hw.durations;
    m.rx = get_duration(d, "rx", m.rx);
    m.rz = get_duration(d, "rz", m.rz);
    m.h = get_duration(d, "h", m.h);
    m.cx = get_duration(d, "cx", m.cx);
    m.measure = get_duration(d, "measure", m.measure);
    m.x = get_duration(d, "x", m.x);
    m.z = get_duration(d, "z", m.z);
    m.epr_generation_period = get_duration(d, "epr_period", m.epr_generation_period);
  }
  if (root.contains("throttle_epr")) {
    if (!root.at("throttle_epr").is_boolean()) {
      throw HardwareSpecError("'throttle_epr' must be a boolean");
    }
    hw.throttle_epr = root.at("throttle_epr").get<bool>();
  }
  hw.validate();
  return hw;
}

}  // namespace

HardwareSpec parse_hardware_spec(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw HardwareSpecError(std::string("hardware spec is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw HardwareSpecError("hardware spec must be a JSON object");
  try {
    return spec_from_tree(root);
  } catch (const json::exception& e) {
    throw HardwareSpecError(std::string("malformed hardware spec: ") + e.what());
  }
}

HardwareSpec load_hardware_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HardwareSpecError("cannot open hardware spec '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hardware_spec(buf.str());
}

}  // namespace dqc
