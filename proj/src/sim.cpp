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

#include "dqc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "dqc/errors.hpp"

namespace dqc {

namespace {

using Matrix2 = std::array<Amplitude, 4>;  // row-major

constexpr Amplitude kI{0.0, 1.0};

Matrix2 single_qubit_matrix(const Gate& g) {
  const double r = 1.0 / std::numbers::sqrt2;
  const double half = g.angle / 2.0;
  switch (g.kind) {
    case GateKind::H: return {r, r, r, -r};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::S: return {1.0, 0.0, 0.0, kI};
    case GateKind::Sdg: return {1.0, 0.0, 0.0, -kI};
    case GateKind::T: return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)};
    case GateKind::Tdg: return {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4)};
    case GateKind::RZ: return {std::polar(1.0, -half), 0.0, 0.0, std::polar(1.0, half)};
    case GateKind::RX:
      return {std::cos(half), -kI * std::sin(half), -kI * std::sin(half), std::cos(half)};
    default: throw SimulationError("not a single-qubit gate: " + std::string(gate_name(g.kind)));
  }
}

// Sparse amplitude map; entries below kDrop in magnitude are discarded.
class SparseState {
 public:
  using Map = std::unordered_map<std::size_t, Amplitude>;

  explicit SparseState(const StateVector& dense) {
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (std::norm(dense[i]) > kDrop) amp_.emplace(i, dense[i]);
    }
  }

  void apply_1q(Qubit q, const Matrix2& m) {
    const std::size_t bit = std::size_t{1} << q;
    if (m[1] == 0.0 && m[2] == 0.0) {
      for (auto& [x, a] : amp_) a *= (x & bit) ? m[3] : m[0];
      return;
    }
    Map next;
    next.reserve(amp_.size() * 2);
    if (m[0] == 0.0 && m[3] == 0.0) {
      for (const auto& [x, a] : amp_) next.emplace(x ^ bit, a * ((x & bit) ? m[1] : m[2]));
      amp_ = std::move(next);
      return;
    }
    for (const auto& [x, a] : amp_) {
      const std::size_t x0 = x & ~bit;
      const std::size_t x1 = x | bit;
      if (x & bit) {
        next[x0] += m[1] * a;
        next[x1] += m[3] * a;
      } else {
        next[x0] += m[0] * a;
        next[x1] += m[2] * a;
      }
    }
    std::erase_if(next, [](const auto& e) { return std::norm(e.second) <= kDrop; });
    amp_ = std::move(next);
  }

  // Flips `target` where every control is set.
  void apply_controlled_x(std::span<const Qubit> controls, Qubit target) {
    std::size_t mask = 0;
    for (Qubit c : controls) mask |= std::size_t{1} << c;
    const std::size_t tbit = std::size_t{1} << target;
    Map next;
    next.reserve(amp_.size());
    for (const auto& [x, a] : amp_) next.emplace((x & mask) == mask ? x ^ tbit : x, a);
    amp_ = std::move(next);
  }

  // Unnormalized weight of each outcome of measuring q.
  std::array<double, 2> outcome_weights(Qubit q) const {
    const std::size_t bit = std::size_t{1} << q;
    std::array<double, 2> w{0.0, 0.0};
    for (const auto& [x, a] : amp_) w[(x & bit) ? 1 : 0] += std::norm(a);
    return w;
  }

  // Keeps the entries where qubit q reads `outcome` and rescales them to unit
  // norm; `weight` is their total squared magnitude.
  SparseState collapsed(Qubit q, int outcome, double weight) const {
    const std::size_t bit = std::size_t{1} << q;
    const double scale = 1.0 / std::sqrt(weight);
    SparseState out;
    out.amp_.reserve(amp_.size());
    for (const auto& [x, a] : amp_) {
      if (((x & bit) != 0) == (outcome == 1)) out.amp_.emplace(x, a * scale);
    }
    return out;
  }

  // Equal up to a global phase, entry by entry; entries missing on one side
  // count as zero.
  bool same_up_to_phase(const SparseState& other) const {
    if (amp_.empty() || other.amp_.empty()) return amp_.empty() && other.amp_.empty();
    const auto pivot = std::max_element(amp_.begin(), amp_.end(), [](const auto& l, const auto& r) {
      return std::norm(l.second) < std::norm(r.second);
    });
    const auto it = other.amp_.find(pivot->first);
    if (it == other.amp_.end() || std::abs(it->second) < 1e-6) return false;
    const Amplitude phase = pivot->second / it->second;
    if (std::abs(std::abs(phase) - 1.0) > kMergeTol) return false;
    for (const auto& [x, a] : amp_) {
      const auto o = other.amp_.find(x);
      const Amplitude b = o == other.amp_.end() ? Amplitude{} : o->second;
      if (std::abs(a - phase * b) > kMergeTol) return false;
    }
    for (const auto& [x, b] : other.amp_) {
      if (!amp_.contains(x) && std::abs(b) > kMergeTol) return false;
    }
    return true;
  }

  StateVector dense(std::size_t dim) const {
    StateVector out(dim, 0.0);
    for (const auto& [x, a] : amp_) out[x] = a;
    return out;
  }

 private:
  SparseState() = default;

  static constexpr double kDrop = 1e-26;
  static constexpr double kMergeTol = 1e-10;
  Map amp_;
};

struct Branch {
  SparseState state;
  std::vector<int> bits;
  double probability;
};

double norm_squared(std::span<const Amplitude> v) {
  double s = 0.0;
  for (const Amplitude& a : v) s += std::norm(a);
  return s;
}

std::string describe_bits(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) s += b ? '1' : '0';
  return s.empty() ? "(no bits)" : s;
}

}  // namespace

StateVector basis_state(std::size_t num_qubits, std::size_t index) {
  if (num_qubits > kMaxSimQubits) throw SimulationError("too many qubits to simulate");
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) throw SimulationError("basis index out of range");
  StateVector psi(dim, 0.0);
  psi[index] = 1.0;
  return psi;
}

StateVector product_state(std::span<const std::array<Amplitude, 2>> factors) {
  if (factors.size() > kMaxSimQubits) throw SimulationError("too many qubits to simulate");
  StateVector psi{1.0};
  for (std::size_t q = 0; q < factors.size(); ++q) {
    StateVector next(psi.size() * 2);
    for (std::size_t i = 0; i < psi.size(); ++i) {
      next[i] = psi[i] * factors[q][0];
      next[i + psi.size()] = psi[i] * factors[q][1];
    }
    psi = std::move(next);
  }
  return psi;
}

std::vector<BranchState> simulate(const Circuit& circuit, StateVector initial,
                                  const SimOptions& options) {
  const std::size_t n = circuit.num_qubits();
  if (n > kMaxSimQubits) {
    throw SimulationError("circuit has " + std::to_string(n) + " qubits; the simulator limit is " +
                          std::to_string(kMaxSimQubits));
  }
  if (initial.size() != (std::size_t{1} << n)) {
    throw SimulationError("initial state has the wrong dimension");
  }
  const double norm = norm_squared(initial);
  if (std::abs(norm - 1.0) > 1e-9) throw SimulationError("initial state is not normalized");

  const auto& gates = circuit.gates();
  // last_read[b]: index of the final gate whose condition reads bit b.
  std::vector<std::ptrdiff_t> last_read(circuit.num_bits(), -1);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (is_marker(gates[i].kind)) {
      throw SimulationError("marker gate '" + std::string(gate_name(gates[i].kind)) +
                            "' must be expanded before simulation");
    }
    if (gates[i].condition) last_read[gates[i].condition->bit] = static_cast<std::ptrdiff_t>(i);
  }

  std::vector<Branch> branches;
  branches.push_back({SparseState(initial), std::vector<int>(circuit.num_bits(), 0), 1.0});

  auto merge = [&](std::size_t position) {
    std::vector<Branch> kept;
    for (Branch& b : branches) {
      bool absorbed = false;
      for (Branch& k : kept) {
        bool live_equal = true;
        for (std::size_t bit = 0; bit < b.bits.size() && live_equal; ++bit) {
          if (last_read[bit] > static_cast<std::ptrdiff_t>(position)) {
            live_equal = b.bits[bit] == k.bits[bit];
          }
        }
        if (live_equal && k.state.same_up_to_phase(b.state)) {
          k.probability += b.probability;
          absorbed = true;
          break;
        }
      }
      if (!absorbed) kept.push_back(std::move(b));
    }
    branches = std::move(kept);
  };

  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind == GateKind::Barrier) continue;
    if (g.kind == GateKind::Measure) {
      const Qubit q = g.qubits[0];
      std::vector<Branch> next;
      for (Branch& b : branches) {
        const auto w = b.state.outcome_weights(q);
        const double total = w[0] + w[1];
        for (int outcome = 0; outcome < 2; ++outcome) {
          const double p = w[outcome] / total;
          if (p < options.prune_below) continue;
          Branch child{b.state.collapsed(q, outcome, w[outcome]), b.bits, b.probability * p};
          child.bits[*g.target_bit] = outcome;
          next.push_back(std::move(child));
        }
      }
      branches = std::move(next);
      if (branches.size() > options.max_branches) {
        throw SimulationError("branch count exceeds the limit of " +
                              std::to_string(options.max_branches));
      }
      continue;
    }
    for (Branch& b : branches) {
      if (g.condition && b.bits[g.condition->bit] != g.condition->value) continue;
      switch (g.kind) {
        case GateKind::CX: b.state.apply_controlled_x(std::span(g.qubits).first(1), g.qubits[1]); break;
        case GateKind::CCX: b.state.apply_controlled_x(std::span(g.qubits).first(2), g.qubits[2]); break;
        default: b.state.apply_1q(g.qubits[0], single_qubit_matrix(g)); break;
      }
    }
    // Branches can only coincide once a bit that told them apart is dead.
    if (g.condition && options.merge_branches && branches.size() > 1 &&
        last_read[g.condition->bit] == static_cast<std::ptrdiff_t>(i)) {
      merge(i);
    }
  }
  if (options.merge_branches && branches.size() > 1) merge(gates.size());

  std::vector<BranchState> out;
  out.reserve(branches.size());
  for (const Branch& b : branches) {
    out.push_back({b.state.dense(std::size_t{1} << n), b.bits, b.probability});
  }
  return out;
}

double state_fidelity(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  if (a.size() != b.size()) throw SimulationError("state dimensions differ");
  Amplitude overlap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(a[i]) * b[i];
  return std::norm(overlap);
}

StateVector embed_state(std::span<const Amplitude> state, std::size_t num_qubits,
                        std::span<const Qubit> map) {
  if (state.size() != (std::size_t{1} << map.size())) {
    throw SimulationError("state dimension does not match the qubit map");
  }
  StateVector out(std::size_t{1} << num_qubits, 0.0);
  for (std::size_t x = 0; x < state.size(); ++x) {
    std::size_t y = 0;
    for (std::size_t i = 0; i < map.size(); ++i) {
      if ((x >> i) & 1U) y |= std::size_t{1} << map[i];
    }
    out[y] = state[x];
  }
  return out;
}

double reduced_fidelity(std::span<const Amplitude> expected, std::span<const Amplitude> candidate_out,
                        std::span<const Qubit> data_qubits) {
  const std::size_t nd = data_qubits.size();
  if (expected.size() != (std::size_t{1} << nd)) {
    throw SimulationError("reference state dimension does not match the data qubits");
  }
  std::size_t data_mask = 0;
  for (Qubit q : data_qubits) data_mask |= std::size_t{1} << q;
  // Gather ancilla configurations into a compact index.
  std::vector<Qubit> others;
  for (std::size_t q = 0; (std::size_t{1} << q) < candidate_out.size(); ++q) {
    if (!((data_mask >> q) & 1U)) others.push_back(q);
  }
  std::vector<Amplitude> overlap(std::size_t{1} << others.size(), 0.0);
  for (std::size_t y = 0; y < candidate_out.size(); ++y) {
    if (candidate_out[y] == 0.0) continue;
    std::size_t x = 0;
    for (std::size_t i = 0; i < nd; ++i) {
      if ((y >> data_qubits[i]) & 1U) x |= std::size_t{1} << i;
    }
    std::size_t a = 0;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if ((y >> others[i]) & 1U) a |= std::size_t{1} << i;
    }
    overlap[a] += std::conj(expected[x]) * candidate_out[y];
  }
  double f = 0.0;
  for (const Amplitude& o : overlap) f += std::norm(o);
  return f;
}

EquivalenceReport check_equivalence(const Circuit& reference, const Circuit& candidate,
                                    std::span<const Qubit> input_map,
                                    std::span<const Qubit> output_map, double tol,
                                    const SimOptions& options) {
  const std::size_t n = reference.num_qubits();
  if (input_map.size() != n || output_map.size() != n) {
    throw SimulationError("qubit maps must cover every reference qubit");
  }
  for (const Gate& g : reference.gates()) {
    if (g.kind == GateKind::Measure || g.condition) {
      throw SimulationError("the reference circuit must be measurement-free");
    }
  }
  for (Qubit q : input_map) {
    if (q >= candidate.num_qubits()) throw SimulationError("input map leaves the candidate");
  }
  for (Qubit q : output_map) {
    if (q >= candidate.num_qubits()) throw SimulationError("output map leaves the candidate");
  }
  if (candidate.num_qubits() > kMaxSimQubits || n > kMaxSimQubits) {
    throw SimulationError("circuit too wide for the simulator");
  }

  struct Input {
    std::string label;
    StateVector state;
  };
  std::vector<Input> inputs;
  for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
    std::string label = "|";
    for (std::size_t i = n; i-- > 0;) label += ((x >> i) & 1U) ? '1' : '0';
    inputs.push_back({label + ">", basis_state(n, x)});
  }
  const double r = 1.0 / std::numbers::sqrt2;
  const std::array<std::pair<const char*, std::array<Amplitude, 2>>, 6> axes{{
      {"0", {1.0, 0.0}},
      {"1", {0.0, 1.0}},
      {"+", {r, r}},
      {"-", {r, -r}},
      {"+i", {r, kI * r}},
      {"-i", {r, -kI * r}},
  }};
  for (const auto& [name, factor] : axes) {
    const std::vector<std::array<Amplitude, 2>> factors(n, factor);
    inputs.push_back({std::string("|") + name + ">^" + std::to_string(n), product_state(factors)});
  }

  SimOptions opts = options;
  EquivalenceReport report;
  for (const Input& in : inputs) {
    const auto ref = simulate(reference, in.state, opts);
    const StateVector& expected = ref.front().state;
    const auto out = simulate(candidate, embed_state(in.state, candidate.num_qubits(), input_map), opts);
    ++report.inputs_checked;
    for (const BranchState& b : out) {
      ++report.branches_checked;
      const double f = reduced_fidelity(expected, b.state, output_map);
      report.worst_fidelity = std::min(report.worst_fidelity, f);
      if (f < 1.0 - tol && report.equivalent) {
        report.equivalent = false;
        report.failing_input = in.label;
        std::ostringstream os;
        os << "bits " << describe_bits(b.bits) << " (probability " << b.probability
           << ", fidelity " << f << ")";
        report.failing_branch = os.str();
      }
    }
  }
  return report;
}

bool equivalent(const Circuit& reference, const Circuit& candidate,
                std::span<const Qubit> data_qubits, double tol) {
  SimOptions opts;
  opts.merge_branches = true;
  return check_equivalence(reference, candidate, data_qubits, data_qubits, tol, opts).equivalent;
}

}  // namespace dqc
