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
#include <string_view>
#include <vector>

namespace dqc {

using Qubit = std::size_t;
using Bit = std::size_t;

enum class GateKind : std::uint8_t {
  RX,
  RZ,
  H,
  X,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  CX,
  CCX,
  Measure,
  Barrier,
  // Markers produced by the mapper. They never reach the simulator.
  EprPrepare,
  Teleport,
  RemoteCX,
};

std::string_view gate_name(GateKind kind);

/// Number of qubit operands a kind takes; 0 for variadic (barrier).
std::size_t gate_arity(GateKind kind);

bool is_parametric(GateKind kind);
bool is_marker(GateKind kind);

/// The lowering target: {rx, rz, h, cx} plus measure/barrier.
bool is_native(GateKind kind);

/// Classical control: apply the gate only when `bit` holds `value`.
struct Condition {
  Bit bit = 0;
  int value = 1;

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<Qubit> qubits;
  double angle = 0.0;
  std::optional<Bit> target_bit;  // measure destination
  std::optional<Condition> condition;

  std::size_t num_qubits() const { return qubits.size(); }
  bool is_two_qubit() const { return qubits.size() == 2 && kind != GateKind::Barrier; }

  static Gate rx(Qubit q, double theta) { return {GateKind::RX, {q}, theta, {}, {}}; }
  static Gate rz(Qubit q, double theta) { return {GateKind::RZ, {q}, theta, {}, {}}; }
  static Gate h(Qubit q) { return {GateKind::H, {q}, 0.0, {}, {}}; }
  static Gate x(Qubit q) { return {GateKind::X, {q}, 0.0, {}, {}}; }
  static Gate z(Qubit q) { return {GateKind::Z, {q}, 0.0, {}, {}}; }
  static Gate s(Qubit q) { return {GateKind::S, {q}, 0.0, {}, {}}; }
  static Gate sdg(Qubit q) { return {GateKind::Sdg, {q}, 0.0, {}, {}}; }
  static Gate t(Qubit q) { return {GateKind::T, {q}, 0.0, {}, {}}; }
  static Gate tdg(Qubit q) { return {GateKind::Tdg, {q}, 0.0, {}, {}}; }
  static Gate cx(Qubit control, Qubit target) {
    return {GateKind::CX, {control, target}, 0.0, {}, {}};
  }
  static Gate ccx(Qubit c0, Qubit c1, Qubit target) {
    return {GateKind::CCX, {c0, c1, target}, 0.0, {}, {}};
  }
  static Gate measure(Qubit q, Bit b) { return {GateKind::Measure, {q}, 0.0, b, {}}; }
  static Gate barrier(std::vector<Qubit> qs) {
    return {GateKind::Barrier, std::move(qs), 0.0, {}, {}};
  }
  static Gate cc_x(Bit b, Qubit q) { return {GateKind::X, {q}, 0.0, {}, Condition{b, 1}}; }
  static Gate cc_z(Bit b, Qubit q) { return {GateKind::Z, {q}, 0.0, {}, Condition{b, 1}}; }
  static Gate epr_prepare(Qubit a, Qubit b) {
    return {GateKind::EprPrepare, {a, b}, 0.0, {}, {}};
  }
  static Gate teleport(Qubit src, Qubit dst) {
    return {GateKind::Teleport, {src, dst}, 0.0, {}, {}};
  }
  static Gate remote_cx(Qubit control, Qubit target) {
    return {GateKind::RemoteCX, {control, target}, 0.0, {}, {}};
  }

  Gate conditioned(Bit b, int value = 1) const {
    Gate g = *this;
    g.condition = Condition{b, value};
    return g;
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

std::string to_string(const Gate& gate);

/// Named register, kept for emission only; the circuit itself works on a
/// single flat index space.
struct Register {
  std::string name;
  std::size_t size = 0;

  friend bool operator==(const Register&, const Register&) = default;
};

/// Ordered gate list over `num_qubits` qubits and `num_bits` classical bits.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits, std::size_t num_bits = 0);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_bits() const { return num_bits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Validates operands against the circuit's registers and appends.
  Circuit& add(Gate gate);
  Circuit& append(const std::vector<Gate>& gates);

  /// Allocates a fresh classical bit in its own one-bit register.
  Bit add_bit(const std::string& name_hint = "c");

  const std::vector<Register>& qregs() const { return qregs_; }
  const std::vector<Register>& cregs() const { return cregs_; }

  /// Replaces register metadata. Sizes must sum to the circuit's widths.
  void set_registers(std::vector<Register> qregs, std::vector<Register> cregs);

  /// Same widths and gate list; register names are not compared.
  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_qubits_ == b.num_qubits_ && a.num_bits_ == b.num_bits_ &&
           a.gates_ == b.gates_;
  }

 private:
  void validate(const Gate& gate) const;
  std::string unique_creg_name(const std::string& hint) const;

  std::size_t num_qubits_ = 0;
  std::size_t num_bits_ = 0;
  std::vector<Gate> gates_;
  std::vector<Register> qregs_;
  std::vector<Register> cregs_;
};

}  // namespace dqc
