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

#include "dqc/mapper.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "dqc/errors.hpp"

namespace dqc {

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(std::vector<std::size_t> capacities, std::size_t num_qubits)
    : capacities_(std::move(capacities)), where_(num_qubits) {
  for (std::size_t cap : capacities_) slots_.emplace_back(cap);
}

std::size_t Assignment::occupancy(std::size_t qpu) const {
  const auto& row = slots_.at(qpu);
  return static_cast<std::size_t>(
      std::count_if(row.begin(), row.end(), [](const auto& s) { return s.has_value(); }));
}

bool Assignment::is_complete() const {
  return std::all_of(where_.begin(), where_.end(), [](const auto& w) { return w.has_value(); });
}

const Location& Assignment::location(Qubit q) const {
  const auto& w = where_.at(q);
  if (!w) throw MappingError("qubit " + std::to_string(q) + " is not placed");
  return *w;
}

void Assignment::check_location(Location loc) const {
  if (loc.qpu >= slots_.size() || loc.slot >= slots_[loc.qpu].size()) {
    throw MappingError("slot " + std::to_string(loc.slot) + " on QPU " +
                       std::to_string(loc.qpu) + " does not exist");
  }
}

std::optional<Qubit> Assignment::occupant(Location loc) const {
  check_location(loc);
  return slots_[loc.qpu][loc.slot];
}

std::vector<std::size_t> Assignment::free_slots(std::size_t qpu) const {
  std::vector<std::size_t> out;
  const auto& row = slots_.at(qpu);
  for (std::size_t s = 0; s < row.size(); ++s) {
    if (!row[s]) out.push_back(s);
  }
  return out;
}

void Assignment::place(Qubit q, Location loc) {
  check_location(loc);
  if (where_.at(q)) throw MappingError("qubit " + std::to_string(q) + " is already placed");
  if (slots_[loc.qpu][loc.slot]) throw MappingError("target slot is occupied");
  slots_[loc.qpu][loc.slot] = q;
  where_[q] = loc;
}

void Assignment::move(Qubit q, Location loc) {
  const Location from = location(q);
  check_location(loc);
  if (slots_[loc.qpu][loc.slot]) throw MappingError("target slot is occupied");
  slots_[from.qpu][from.slot].reset();
  slots_[loc.qpu][loc.slot] = q;
  where_[q] = loc;
}

void Assignment::exchange(Qubit a, Qubit b) {
  const Location la = location(a);
  const Location lb = location(b);
  slots_[la.qpu][la.slot] = b;
  slots_[lb.qpu][lb.slot] = a;
  where_[a] = lb;
  where_[b] = la;
}

std::vector<int> Assignment::qpu_vector() const {
  std::vector<int> out(where_.size(), -1);
  for (std::size_t q = 0; q < where_.size(); ++q) {
    if (where_[q]) out[q] = static_cast<int>(where_[q]->qpu);
  }
  return out;
}

PartitionVector Assignment::partition() const {
  if (!is_complete()) throw MappingError("assignment is incomplete");
  return PartitionVector(qpu_vector(), static_cast<int>(num_qpus()));
}

// ---------------------------------------------------------------------------
// MappedProgram

const Assignment& MappedProgram::final_assignment() const {
  return windows.empty() ? initial : windows.back().assignment;
}

std::size_t MappedProgram::remote_gate_count() const {
  std::size_t n = 0;
  for (const auto& w : windows) n += w.remote_gates;
  return n;
}

std::size_t MappedProgram::teleport_count() const {
  std::size_t n = 0;
  for (const auto& w : windows) n += w.migrations.size();
  return n;
}

std::size_t MappedProgram::epr_consumed() const {
  std::size_t n = 0;
  for (const auto& w : windows) n += w.epr_consumed;
  return n;
}

std::vector<std::size_t> MappedProgram::execution_order() const {
  std::vector<std::size_t> order;
  order.reserve(source.circuit.size());
  for (const auto& w : windows) order.insert(order.end(), w.gates.begin(), w.gates.end());
  return order;
}

Circuit MappedProgram::logical_view() const {
  const HardwareSpec& hw = hardware;
  Circuit out(hw.num_physical_qubits(), source.circuit.num_bits());
  out.set_registers({Register{"q", hw.num_physical_qubits()}}, source.circuit.cregs());
  auto phys = [&](Location loc) { return hw.data_slot(loc.qpu, loc.slot); };
  const auto& gates = source.circuit.gates();
  for (const auto& w : windows) {
    for (const Migration& m : w.migrations) out.add(Gate::teleport(phys(m.from), phys(m.to)));
    for (std::size_t i : w.gates) {
      Gate g = gates[i];
      for (Qubit& q : g.qubits) q = phys(w.assignment.location(q));
      if (tags[i] == GateTag::Remote) g.kind = GateKind::RemoteCX;
      out.add(std::move(g));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Global pass

namespace {

HardwareSpec resolve_for(const HardwareSpec& hw, std::size_t num_qubits) {
  HardwareSpec r = hw.is_resolved() ? hw : hw.resolved(num_qubits);
  r.validate();
  if (num_qubits > r.total_data_capacity()) {
    throw CapacityError("circuit needs " + std::to_string(num_qubits) +
                        " data qubits but the hardware holds " +
                        std::to_string(r.total_data_capacity()));
  }
  return r;
}

std::vector<std::size_t> capacities_of(const HardwareSpec& hw) {
  std::vector<std::size_t> caps;
  for (std::size_t j = 0; j < hw.num_qpus(); ++j) caps.push_back(hw.data_capacity(j));
  return caps;
}

std::size_t count_differences(const PartitionVector& a, const PartitionVector& b) {
  std::size_t d = 0;
  for (std::size_t v = 0; v < a.size(); ++v) d += a.cluster(v) != b.cluster(v) ? 1 : 0;
  return d;
}

PartitionVector propose_nonempty(const InteractionGraph& sub, const SizeSpec& spec,
                                 const std::optional<PartitionVector>& incumbent) {
  const int k = spec.num_clusters();
  if (k == 1) return PartitionVector(std::vector<int>(sub.size(), 0), 1);
  PartitionVector best = kl_refine(sub, spectral_partition(sub, spec), spec);
  if (!incumbent) return best;
  const PartitionVector warm = kl_refine(sub, *incumbent, spec);
  const double warm_cut = cut_cost(sub, warm);
  const double best_cut = cut_cost(sub, best);
  if (warm_cut < best_cut - 1e-9) return warm;
  if (warm_cut <= best_cut + 1e-9 &&
      count_differences(warm, *incumbent) <= count_differences(best, *incumbent)) {
    return warm;
  }
  return best;
}

// Best partition of the active subgraph: KL from the incumbent (if any) and
// KL from the spectral split; lower cut wins, ties keep the incumbent.
// QPUs without room take no part.
PartitionVector propose(const InteractionGraph& sub, const std::vector<std::size_t>& room,
                        const std::optional<PartitionVector>& incumbent) {
  std::vector<int> open;
  std::vector<int> local_of(room.size(), -1);
  SizeSpec spec;
  for (std::size_t j = 0; j < room.size(); ++j) {
    if (room[j] == 0) continue;
    local_of[j] = static_cast<int>(open.size());
    open.push_back(static_cast<int>(j));
    spec.sizes.push_back(room[j]);
  }
  std::optional<PartitionVector> local_incumbent;
  if (incumbent) {
    std::vector<int> c;
    for (int j : incumbent->clusters()) c.push_back(local_of[static_cast<std::size_t>(j)]);
    local_incumbent = PartitionVector(std::move(c), spec.num_clusters());
  }
  const PartitionVector local = propose_nonempty(sub, spec, local_incumbent);
  std::vector<int> out;
  for (int c : local.clusters()) out.push_back(open[static_cast<std::size_t>(c)]);
  return PartitionVector(std::move(out), static_cast<int>(room.size()));
}

std::vector<std::size_t> active_vertices(const InteractionGraph& g) {
  const Eigen::VectorXd d = g.degrees();
  std::vector<std::size_t> active;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (d(static_cast<Eigen::Index>(v)) > 0.0) active.push_back(v);
  }
  return active;
}

void require_native(const Circuit& c) {
  for (const Gate& g : c.gates()) {
    if (!is_native(g.kind) && !(g.kind == GateKind::X || g.kind == GateKind::Z)) {
      throw MappingError("mapper input must be lowered to the native set; found " +
                         std::string(gate_name(g.kind)));
    }
  }
}

}  // namespace

PartitionVector global_partition(const Circuit& circuit, const HardwareSpec& hw_in) {
  const std::size_t n = circuit.num_qubits();
  const HardwareSpec hw = resolve_for(hw_in, n);
  const std::size_t k = hw.num_qpus();
  const InteractionGraph g = interaction_graph(circuit);
  const std::vector<std::size_t> active = active_vertices(g);

  std::vector<int> cluster(n, -1);
  std::vector<std::size_t> room = capacities_of(hw);
  if (!active.empty()) {
    const PartitionVector part = propose(g.induced(active), room, std::nullopt);
    for (std::size_t i = 0; i < active.size(); ++i) {
      cluster[active[i]] = part.cluster(i);
      --room[static_cast<std::size_t>(part.cluster(i))];
    }
  }
  // Idle qubits take whatever room the active ones left.
  for (std::size_t v = 0; v < n; ++v) {
    if (cluster[v] >= 0) continue;
    const auto most = std::max_element(room.begin(), room.end());
    cluster[v] = static_cast<int>(most - room.begin());
    --*most;
  }
  return PartitionVector(std::move(cluster), static_cast<int>(k));
}

Assignment global_assign(const Circuit& circuit, const HardwareSpec& hw_in, std::uint64_t seed) {
  const HardwareSpec hw = resolve_for(hw_in, circuit.num_qubits());
  const PartitionVector part = global_partition(circuit, hw);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> order;
  for (std::size_t j = 0; j < hw.num_qpus(); ++j) {
    std::vector<std::size_t> slots(hw.data_capacity(j));
    std::iota(slots.begin(), slots.end(), std::size_t{0});
    std::shuffle(slots.begin(), slots.end(), rng);
    order.push_back(std::move(slots));
  }
  Assignment a(capacities_of(hw), circuit.num_qubits());
  std::vector<std::size_t> next(hw.num_qpus(), 0);
  for (Qubit q = 0; q < circuit.num_qubits(); ++q) {
    const auto j = static_cast<std::size_t>(part.cluster(q));
    a.place(q, Location{j, order[j][next[j]++]});
  }
  return a;
}

// ---------------------------------------------------------------------------
// Windows

std::vector<TimeWindow> make_windows(const ScheduledCircuit& sched, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw MappingError("window length must be positive");
  if (sched.circuit.empty()) return {};
  const double span = sched.makespan();
  const auto count = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span / dt)));
  std::vector<TimeWindow> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(TimeWindow{static_cast<double>(i) * dt, dt});
  }
  return out;
}

std::size_t window_index(double t, double dt, std::size_t count) {
  if (count == 0) throw MappingError("no windows");
  const double raw = std::floor(t / dt);
  if (raw <= 0.0) return 0;
  return std::min(count - 1, static_cast<std::size_t>(raw));
}

// ---------------------------------------------------------------------------
// Local pass

namespace {

double link_weight(const InteractionGraph& g, Qubit q, std::span<const int> qpu, int cluster) {
  double w = 0.0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (u != q && qpu[u] == cluster) w += g.weight(q, u);
  }
  return w;
}

}  // namespace

MigrationDecision migration_rule(Qubit q, const InteractionGraph& window_graph,
                                 std::span<const int> current_qpu,
                                 const PartitionVector& proposal) {
  const int from = current_qpu[q];
  const int to = proposal.cluster(q);
  if (from == to) return {false, 0.0};
  const double benefit = link_weight(window_graph, q, current_qpu, to) -
                         link_weight(window_graph, q, current_qpu, from) - 1.0;
  return {benefit > 1e-9, benefit};
}

MappedProgram local_optimize(const ScheduledCircuit& sched, const HardwareSpec& hw_in,
                             const Assignment& init, double dt, std::uint64_t seed) {
  const Circuit& circuit = sched.circuit;
  const std::size_t n = circuit.num_qubits();
  require_native(circuit);
  const HardwareSpec hw = resolve_for(hw_in, n);
  if (init.num_qubits() != n || !init.is_complete() || init.num_qpus() != hw.num_qpus()) {
    throw MappingError("initial assignment does not cover the circuit");
  }
  for (std::size_t j = 0; j < hw.num_qpus(); ++j) {
    if (init.capacity(j) != hw.data_capacity(j)) {
      throw MappingError("initial assignment does not match the hardware capacities");
    }
  }

  MappedProgram mp;
  mp.hardware = hw;
  mp.source = sched;
  mp.dt = dt;
  mp.initial = init;
  mp.tags.assign(circuit.size(), GateTag::Local);

  const std::vector<TimeWindow> intervals = make_windows(sched, dt);
  std::vector<std::vector<std::size_t>> members(intervals.size());
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    members[window_index(sched.start_time[i], dt, intervals.size())].push_back(i);
  }

  const std::size_t k = hw.num_qpus();
  const bool exchange_ok = std::any_of(hw.qpus.begin(), hw.qpus.end(),
                                       [](const QpuSpec& q) { return q.epr_slots >= 2; });
  std::mt19937_64 rng(seed);
  Assignment cur = init;
  const auto& gates = circuit.gates();

  for (std::size_t w = 0; w < intervals.size(); ++w) {
    MappingWindow win;
    win.interval = intervals[w];
    win.gates = members[w];

    InteractionGraph g(n);
    for (std::size_t i : win.gates) {
      if (gates[i].is_two_qubit()) g.add_edge(gates[i].qubits[0], gates[i].qubits[1]);
    }
    const std::vector<std::size_t> active = active_vertices(g);

    if (!active.empty() && k > 1) {
      std::vector<int> qpu = cur.qpu_vector();
      std::vector<bool> is_active(n, false);
      for (std::size_t v : active) is_active[v] = true;
      std::vector<std::size_t> room(k);
      for (std::size_t j = 0; j < k; ++j) room[j] = hw.data_capacity(j);
      for (std::size_t v = 0; v < n; ++v) {
        if (!is_active[v]) --room[static_cast<std::size_t>(qpu[v])];
      }
      std::vector<int> incumbent_sub;
      for (std::size_t v : active) incumbent_sub.push_back(qpu[v]);
      const PartitionVector sub_choice =
          propose(g.induced(active), room, PartitionVector(incumbent_sub, static_cast<int>(k)));
      std::vector<int> proposal_full = qpu;
      for (std::size_t i = 0; i < active.size(); ++i) {
        proposal_full[active[i]] = sub_choice.cluster(i);
      }
      const PartitionVector proposal(proposal_full, static_cast<int>(k));

      std::vector<bool> locked(n, false);
      for (;;) {
        double best = 1e-9;
        std::optional<std::pair<Qubit, std::optional<Qubit>>> action;
        for (std::size_t q : active) {
          if (locked[q] || proposal.cluster(q) == qpu[q]) continue;
          const MigrationDecision d = migration_rule(q, g, qpu, proposal);
          const auto to = static_cast<std::size_t>(proposal.cluster(q));
          if (cur.occupancy(to) < cur.capacity(to)) {
            if (d.benefit > best) {
              best = d.benefit;
              action = {q, std::nullopt};
            }
            continue;
          }
          if (!exchange_ok) continue;
          for (std::size_t p : active) {
            if (locked[p] || p == q || qpu[p] != proposal.cluster(q) ||
                proposal.cluster(p) != qpu[q]) {
              continue;
            }
            const double total =
                d.benefit + migration_rule(p, g, qpu, proposal).benefit - 2.0 * g.weight(q, p);
            if (total > best) {
              best = total;
              action = {q, p};
            }
          }
        }
        if (!action) break;
        const auto [q, partner] = *action;
        const Location from = cur.location(q);
        if (partner) {
          const Location pfrom = cur.location(*partner);
          cur.exchange(q, *partner);
          win.migrations.push_back(Migration{q, from, pfrom, *partner});
          win.migrations.push_back(Migration{*partner, pfrom, from, q});
          locked[*partner] = true;
          qpu[*partner] = static_cast<int>(from.qpu);
        } else {
          const auto to = static_cast<std::size_t>(proposal.cluster(q));
          const std::vector<std::size_t> free = cur.free_slots(to);
          std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
          const Location dest{to, free[pick(rng)]};
          cur.move(q, dest);
          win.migrations.push_back(Migration{q, from, dest, std::nullopt});
        }
        locked[q] = true;
        qpu[q] = static_cast<int>(cur.qpu(q));
      }
    }

    win.assignment = cur;
    for (std::size_t i : win.gates) {
      const Gate& gate = gates[i];
      if (gate.is_two_qubit() && cur.qpu(gate.qubits[0]) != cur.qpu(gate.qubits[1])) {
        mp.tags[i] = GateTag::Remote;
        ++win.remote_gates;
      }
    }
    win.epr_consumed = win.remote_gates + win.migrations.size();
    win.epr_budget = hw.epr_budget(dt);
    mp.windows.push_back(std::move(win));
  }
  return mp;
}

}  // namespace dqc
