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

// Writes the benchmark corpus: Clifford+T OpenQASM files plus the recorded
// baseline counts in baselines.json.
//
//   gen_corpus <output-dir>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <string>
#include <vector>

#include "dqc/lowering.hpp"
#include "dqc/metrics.hpp"
#include "dqc/qasm.hpp"

namespace {

using dqc::Circuit;
using dqc::Gate;
using dqc::Qubit;
using dqc::Register;

struct Program {
  std::string name;
  std::string description;
  Circuit circuit;
  // Reference counts for the original benchmark, when the file reproduces it.
  std::optional<std::pair<std::size_t, std::size_t>> reference;
  std::string note;
};

class Builder {
 public:
  explicit Builder(std::vector<Register> regs) : regs_(std::move(regs)) {
    std::size_t n = 0;
    for (const auto& r : regs_) n += r.size;
    c_ = Circuit(n);
    c_.set_registers(regs_, {});
  }

  Qubit at(const std::string& reg, std::size_t i) const {
    std::size_t base = 0;
    for (const auto& r : regs_) {
      if (r.name == reg) return base + i;
      base += r.size;
    }
    throw std::runtime_error("no register " + reg);
  }

  void gate(Gate g) { c_.add(std::move(g)); }
  void tof(Qubit a, Qubit b, Qubit t) { c_.append(dqc::toffoli_clifford_t(a, b, t)); }

  Circuit take() { return std::move(c_); }

 private:
  std::vector<Register> regs_;
  Circuit c_;
};

// GF(2^m) multiplier: c ^= a * b mod P. High-degree products land in c, are
// folded by m in-place multiplications by x (wire relabelling plus CNOTs for
// the middle terms of P), then the low-degree products are added.
Circuit gf_mult(std::size_t m, const std::vector<std::size_t>& middle_terms) {
  Builder b({{"a", m}, {"b", m}, {"c", m}});
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = m + i - j;
      if (k < m) b.tof(b.at("a", j), b.at("b", k), b.at("c", i));
    }
  }
  std::vector<std::size_t> wire(m);
  for (std::size_t i = 0; i < m; ++i) wire[i] = i;
  for (std::size_t step = 0; step < m; ++step) {
    std::rotate(wire.rbegin(), wire.rbegin() + 1, wire.rend());
    if (step == 0) continue;  // the top coefficient starts out zero
    for (std::size_t t : middle_terms) b.gate(Gate::cx(b.at("c", wire[0]), b.at("c", wire[t])));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) b.tof(b.at("a", j), b.at("b", i - j), b.at("c", i));
  }
  return b.take();
}

// Multi-controlled X by a clean-ancilla ladder: 2k - 3 Toffolis.
void mct_ladder(Builder& b, const std::vector<Qubit>& controls, Qubit target,
                const std::vector<Qubit>& ancillas) {
  const std::size_t k = controls.size();
  if (k == 2) {
    b.tof(controls[0], controls[1], target);
    return;
  }
  std::vector<std::array<Qubit, 3>> up;
  up.push_back({controls[0], controls[1], ancillas[0]});
  for (std::size_t i = 2; i + 1 < k; ++i) up.push_back({controls[i], ancillas[i - 2], ancillas[i - 1]});
  for (const auto& t : up) b.tof(t[0], t[1], t[2]);
  b.tof(controls[k - 1], ancillas[k - 3], target);
  for (auto it = up.rbegin(); it != up.rend(); ++it) b.tof((*it)[0], (*it)[1], (*it)[2]);
}

Circuit tof_n(std::size_t k) {
  Builder b({{"c", k}, {"t", 1}, {"anc", k - 2}});
  std::vector<Qubit> controls;
  std::vector<Qubit> ancillas;
  for (std::size_t i = 0; i < k; ++i) controls.push_back(b.at("c", i));
  for (std::size_t i = 0; i + 2 < k; ++i) ancillas.push_back(b.at("anc", i));
  mct_ladder(b, controls, b.at("t", 0), ancillas);
  return b.take();
}

// Multi-controlled X with dirty ancillas: 4(k - 2) Toffolis.
Circuit barenco_tof_n(std::size_t k) {
  Builder b({{"c", k}, {"t", 1}, {"anc", k - 2}});
  auto c = [&](std::size_t i) { return b.at("c", i); };
  auto a = [&](std::size_t i) { return b.at("anc", i); };
  const Qubit t = b.at("t", 0);
  auto half = [&](bool with_top) {
    if (with_top) b.tof(c(k - 1), a(k - 3), t);
    for (std::size_t i = k - 2; i >= 2; --i) b.tof(c(i), a(i - 2), a(i - 1));
    b.tof(c(0), c(1), a(0));
    for (std::size_t i = 2; i <= k - 2; ++i) b.tof(c(i), a(i - 2), a(i - 1));
    if (with_top) b.tof(c(k - 1), a(k - 3), t);
  };
  half(true);
  half(false);
  return b.take();
}

// Grover search over 5 data qubits with a phase oracle on one marked item.
Circuit grover() {
  Builder b({{"x", 5}, {"anc", 3}, {"o", 1}});
  const std::size_t marked = 0b01011;
  std::vector<Qubit> data;
  for (std::size_t i = 0; i < 5; ++i) data.push_back(b.at("x", i));
  const Qubit oracle = b.at("o", 0);
  std::vector<Qubit> anc{b.at("anc", 0), b.at("anc", 1), b.at("anc", 2)};
  b.gate(Gate::x(oracle));
  b.gate(Gate::h(oracle));
  for (Qubit q : data) b.gate(Gate::h(q));
  for (int iter = 0; iter < 4; ++iter) {
    for (std::size_t i = 0; i < 5; ++i) {
      if (!((marked >> i) & 1U)) b.gate(Gate::x(data[i]));
    }
    mct_ladder(b, data, oracle, anc);
    for (std::size_t i = 0; i < 5; ++i) {
      if (!((marked >> i) & 1U)) b.gate(Gate::x(data[i]));
    }
    for (Qubit q : data) b.gate(Gate::h(q));
    for (Qubit q : data) b.gate(Gate::x(q));
    b.gate(Gate::h(data[4]));
    mct_ladder(b, {data[0], data[1], data[2], data[3]}, data[4], {anc[0], anc[1]});
    b.gate(Gate::h(data[4]));
    for (Qubit q : data) b.gate(Gate::x(q));
    for (Qubit q : data) b.gate(Gate::h(q));
  }
  return b.take();
}

// Ripple-carry adder in the VBE style; b <- a + b. With `overflow` the
// final carry lands in an extra b qubit, otherwise the sum is mod 2^n.
// `interleaved` stores bit i as the triple (carry, a, b) in one register.
Circuit vbe_adder(std::size_t n, bool overflow, bool interleaved) {
  const std::size_t width = 3 * n + (overflow ? 1 : 0);
  Builder b(interleaved ? std::vector<Register>{{"q", width}}
                        : std::vector<Register>{{"cin", n}, {"a", n}, {"b", n + (overflow ? 1 : 0)}});
  auto c = [&](std::size_t i) { return interleaved ? 3 * i : b.at("cin", i); };
  auto a = [&](std::size_t i) { return interleaved ? 3 * i + 1 : b.at("a", i); };
  auto s = [&](std::size_t i) {
    if (interleaved) return i < n ? 3 * i + 2 : 3 * n;
    return b.at("b", i);
  };
  auto carry_out = [&](std::size_t i) { return i + 1 < n ? c(i + 1) : s(n); };
  auto carry = [&](std::size_t i) {
    b.tof(a(i), s(i), carry_out(i));
    b.gate(Gate::cx(a(i), s(i)));
    b.tof(c(i), s(i), carry_out(i));
  };
  auto carry_inv = [&](std::size_t i) {
    b.tof(c(i), s(i), carry_out(i));
    b.gate(Gate::cx(a(i), s(i)));
    b.tof(a(i), s(i), carry_out(i));
  };
  auto sum = [&](std::size_t i) {
    b.gate(Gate::cx(a(i), s(i)));
    b.gate(Gate::cx(c(i), s(i)));
  };
  const std::size_t top = overflow ? n : n - 1;
  for (std::size_t i = 0; i < top; ++i) carry(i);
  if (overflow) b.gate(Gate::cx(a(n - 1), s(n - 1)));
  sum(n - 1);
  for (std::size_t i = n - 1; i-- > 0;) {
    carry_inv(i);
    sum(i);
  }
  return b.take();
}

// In-place ripple-carry adder with majority / unmajority blocks.
Circuit rc_adder(std::size_t n) {
  Builder b({{"cin", 1}, {"a", n}, {"b", n}, {"cout", 1}});
  auto a = [&](std::size_t i) { return b.at("a", i); };
  auto s = [&](std::size_t i) { return b.at("b", i); };
  auto carry = [&](std::size_t i) { return i == 0 ? b.at("cin", 0) : a(i - 1); };
  for (std::size_t i = 0; i < n; ++i) {
    b.gate(Gate::cx(a(i), s(i)));
    b.gate(Gate::cx(a(i), carry(i)));
    b.tof(carry(i), s(i), a(i));
  }
  b.gate(Gate::cx(a(n - 1), b.at("cout", 0)));
  for (std::size_t i = n; i-- > 0;) {
    b.tof(carry(i), s(i), a(i));
    b.gate(Gate::cx(a(i), carry(i)));
    b.gate(Gate::cx(carry(i), s(i)));
  }
  return b.take();
}

// Flags 4-bit inputs divisible by 5 ({0, 5, 10, 15}).
Circuit mod5() {
  Builder b({{"x", 4}, {"f", 1}});
  auto x = [&](std::size_t i) { return b.at("x", i); };
  b.gate(Gate::cx(x(0), x(2)));
  b.gate(Gate::cx(x(1), x(3)));
  b.gate(Gate::x(x(2)));
  b.gate(Gate::x(x(3)));
  b.tof(x(2), x(3), b.at("f", 0));
  b.gate(Gate::x(x(2)));
  b.gate(Gate::x(x(3)));
  b.gate(Gate::cx(x(1), x(3)));
  b.gate(Gate::cx(x(0), x(2)));
  return b.take();
}

// Quantum Fourier transform; controlled phases use rz and two cx.
Circuit qft(std::size_t n) {
  Builder b({{"q", n}});
  constexpr double pi = std::numbers::pi;
  for (std::size_t j = 0; j < n; ++j) {
    b.gate(Gate::h(j));
    for (std::size_t k = j + 1; k < n; ++k) {
      const double theta = pi / static_cast<double>(std::size_t{1} << (k - j));
      b.gate(Gate::rz(k, theta / 2));
      b.gate(Gate::cx(k, j));
      b.gate(Gate::rz(j, -theta / 2));
      b.gate(Gate::cx(k, j));
      b.gate(Gate::rz(j, theta / 2));
    }
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    const Qubit p = i;
    const Qubit q = n - 1 - i;
    b.gate(Gate::cx(p, q));
    b.gate(Gate::cx(q, p));
    b.gate(Gate::cx(p, q));
  }
  return b.take();
}

std::vector<Program> programs() {
  std::vector<Program> out;
  auto add = [&](std::string name, std::string desc, Circuit c,
                 std::optional<std::pair<std::size_t, std::size_t>> reference, std::string note) {
    out.push_back({std::move(name), std::move(desc), std::move(c), reference, std::move(note)});
  };
  add("adder_8", "8-bit ripple-carry adder mod 2^8 (VBE style), bit i at (3i, 3i+1, 3i+2) = (carry, a, b)", vbe_adder(8, false, true), std::nullopt,
      "stand-in for the 8-bit adder benchmark; reference counts 409 / 49");
  add("gf2_4_mult", "GF(2^4) multiplier, P = x^4 + x + 1", gf_mult(4, {1}), {{99, 64}}, "");
  add("gf2_6_mult", "GF(2^6) multiplier, P = x^6 + x + 1", gf_mult(6, {1}), {{221, 144}}, "");
  add("gf2_7_mult", "GF(2^7) multiplier, P = x^7 + x + 1", gf_mult(7, {1}), {{300, 196}}, "");
  add("gf2_8_mult", "GF(2^8) multiplier, P = x^8 + x^4 + x^3 + x + 1", gf_mult(8, {1, 3, 4}),
      {{405, 256}}, "");
  add("gf2_10_mult", "GF(2^10) multiplier, P = x^10 + x^3 + 1", gf_mult(10, {3}), {{609, 400}}, "");
  add("grover_9", "Grover search, 5 data qubits, 3 ancillas, 1 oracle qubit, 4 iterations",
      grover(), {{288, 192}}, "");
  for (std::size_t k : {3, 4, 5, 10}) {
    add("tof_" + std::to_string(k), std::to_string(k) + "-control Toffoli, clean-ancilla ladder",
        tof_n(k), {{6 * (2 * k - 3), 4 * (2 * k - 3)}}, "");
    add("barenco_tof_" + std::to_string(k),
        std::to_string(k) + "-control Toffoli, dirty-ancilla construction", barenco_tof_n(k),
        {{24 * (k - 2), 16 * (k - 2)}}, "");
  }
  add("rc_adder_6", "6-bit in-place ripple-carry adder (majority / unmajority)", rc_adder(6),
      std::nullopt, "stand-in for the 6-qubit RC adder benchmark; reference counts 93 / 11");
  add("mod5_4", "divisible-by-5 test on 4 input bits", mod5(), std::nullopt, "");
  add("qft_4", "4-qubit quantum Fourier transform", qft(4), std::nullopt, "");
  add("vbe_adder_3", "3-bit VBE adder with carry out", vbe_adder(3, true, false), std::nullopt, "");
  return out;
}

}  // namespace

constexpr const char* kLicenseHeader = R"(// Copyright 2026 The dqc Authors
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
)";

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_corpus <output-dir>\n";
    return 1;
  }
  namespace fs = std::filesystem;
  const fs::path dir = argv[1];
  fs::create_directories(dir);
  nlohmann::json baselines = nlohmann::json::object();
  for (const Program& p : programs()) {
    const std::size_t total = dqc::count_two_qubit(dqc::decompose_to_basis(p.circuit));
    const std::size_t trivial = dqc::count_inter_qpu(
        dqc::decompose_to_basis(p.circuit), dqc::trivial_qpu_map(p.circuit.num_qubits(), 2));
    std::ofstream out(dir / (p.name + ".qasm"));
    out << kLicenseHeader << "\n";
    out << "// " << p.description << "\n";
    out << "// qubits " << p.circuit.num_qubits() << ", two-qubit gates " << total
        << ", inter-QPU under the trivial two-QPU split " << trivial << "\n";
    out << dqc::emit_qasm(p.circuit);
    nlohmann::json rec{{"num_qubits", p.circuit.num_qubits()},
                       {"total_2q", total},
                       {"interqpu_trivial", trivial}};
    if (p.reference) {
      rec["reference"] = {{"total_2q", p.reference->first},
                          {"interqpu_trivial", p.reference->second}};
    }
    if (!p.note.empty()) rec["note"] = p.note;
    baselines[p.name] = rec;
    std::cout << p.name << ": " << p.circuit.num_qubits() << " qubits, " << total << " / "
              << trivial << "\n";
  }
  std::ofstream(dir / "baselines.json") << baselines.dump(2) << "\n";
  return 0;
}
