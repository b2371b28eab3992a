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

#include "dqc/gadgets.hpp"

#include "dqc/errors.hpp"

namespace dqc {

std::vector<Gate> epr_prepare(Qubit a, Qubit b) { return {Gate::h(a), Gate::cx(a, b)}; }

std::vector<Gate> expand_remote_cnot(Qubit control, Qubit target, Qubit slot1, Qubit slot2,
                                     Bit m, Bit n) {
  return {
      Gate::cx(control, slot1),  Gate::cx(slot2, target), Gate::measure(slot1, m),
      Gate::cc_x(m, target),     Gate::h(slot2),          Gate::measure(slot2, n),
      Gate::cc_z(n, control),
  };
}

std::vector<Gate> expand_teleport(Qubit src, Qubit slot1, Qubit dst, Bit m, Bit n) {
  return {
      Gate::cx(src, slot1),   Gate::h(src),         Gate::measure(src, m),
      Gate::measure(slot1, n), Gate::cc_x(n, dst),  Gate::cc_z(m, dst),
      Gate::cc_x(m, src),     Gate::cc_x(n, slot1),
  };
}

std::vector<Gate> move_to_empty(Qubit from, Qubit to) {
  return {Gate::cx(from, to), Gate::cx(to, from)};
}

std::size_t ExpandedProgram::cross_qpu_gates() const {
  std::size_t count = 0;
  std::size_t next = 0;
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (next < interconnect_gates.size() && interconnect_gates[next] == i) {
      ++next;
      continue;
    }
    const Gate& g = gates[i];
    if (g.is_two_qubit() && qpu_of_qubit[g.qubits[0]] != qpu_of_qubit[g.qubits[1]]) ++count;
  }
  return count;
}

namespace {

class Emitter {
 public:
  Emitter(const MappedProgram& mp, const ExpansionFaults& faults)
      : hw_(mp.hardware), faults_(faults) {
    const Circuit& src = mp.source.circuit;
    out_.circuit = Circuit(hw_.num_physical_qubits(), src.num_bits());
    out_.circuit.set_registers({Register{"q", hw_.num_physical_qubits()}}, src.cregs());
    out_.qpu_of_qubit = hw_.physical_qpu_map();
  }

  std::size_t data(Location loc) const { return hw_.data_slot(loc.qpu, loc.slot); }
  std::size_t reservoir(std::size_t qpu, std::size_t i) const {
    return hw_.reservoir_slot(qpu, i);
  }

  void emit(Gate g) { out_.circuit.add(std::move(g)); }

  void bell_pair(Qubit a, Qubit b) {
    emit(Gate::h(a));
    out_.interconnect_gates.push_back(out_.circuit.size());
    emit(Gate::cx(a, b));
    ++out_.epr_pairs;
  }

  // Appends gadget gates, dropping the selected correction when asked.
  void emit_gadget(const std::vector<Gate>& gates) {
    for (const Gate& g : gates) {
      if (g.condition && faults_.drop_correction && *faults_.drop_correction == corrections_++) {
        continue;
      }
      emit(g);
    }
  }

  std::pair<Bit, Bit> fresh_bits() {
    const Bit m = out_.circuit.add_bit("m");
    const Bit n = out_.circuit.add_bit("n");
    return {m, n};
  }

  void remote_cx(Qubit control, std::size_t control_qpu, Qubit target, std::size_t target_qpu) {
    const Qubit s1 = reservoir(control_qpu, 0);
    const Qubit s2 = reservoir(target_qpu, 0);
    const auto [m, n] = fresh_bits();
    bell_pair(s1, s2);
    std::vector<Gate> gadget = expand_remote_cnot(control, target, s1, s2, m, n);
    gadget.push_back(Gate::cc_x(m, s1));
    gadget.push_back(Gate::cc_x(n, s2));
    emit_gadget(gadget);
  }

  void teleport(Qubit src, std::size_t src_qpu, Qubit dst) {
    const Qubit s1 = reservoir(src_qpu, 0);
    const auto [m, n] = fresh_bits();
    bell_pair(s1, dst);
    emit_gadget(expand_teleport(src, s1, dst, m, n));
  }

  void migrate(const Migration& m) {
    teleport(data(m.from), m.from.qpu, data(m.to));
  }

  // q1 leaves QPU a for q2's slot on b while q2 goes the other way. The side
  // with two reservoir slots parks the first arrival in its second slot.
  void exchange(const Migration& first, const Migration& second) {
    const Migration* a = &first;
    const Migration* b = &second;
    if (hw_.epr_slots(a->to.qpu) < 2) std::swap(a, b);
    if (hw_.epr_slots(a->to.qpu) < 2) throw MappingError("exchange needs two reservoir slots");
    const Qubit parking = reservoir(a->to.qpu, 1);
    teleport(data(a->from), a->from.qpu, parking);
    teleport(data(b->from), b->from.qpu, data(b->to));
    for (const Gate& g : move_to_empty(parking, data(a->to))) emit(g);
  }

  ExpandedProgram take() { return std::move(out_); }

 private:
  const HardwareSpec& hw_;
  const ExpansionFaults& faults_;
  ExpandedProgram out_;
  std::size_t corrections_ = 0;
};

}  // namespace

ExpandedProgram expand_program(const MappedProgram& mp, const ExpansionFaults& faults) {
  const HardwareSpec& hw = mp.hardware;
  const std::size_t n = mp.source.circuit.num_qubits();
  for (std::size_t j = 0; j < hw.num_qpus(); ++j) {
    if (hw.epr_slots(j) == 0) throw MappingError("QPU without reservoir slots");
  }
  Emitter em(mp, faults);
  const auto& gates = mp.source.circuit.gates();
  for (std::size_t w = 0; w < mp.windows.size(); ++w) {
    const MappingWindow& win = mp.windows[w];
    if (hw.throttle_epr && !win.within_budget()) {
      throw MappingError("window " + std::to_string(w) + " consumes " +
                         std::to_string(win.epr_consumed) + " EPR pairs but the links supply " +
                         std::to_string(win.epr_budget));
    }
    for (std::size_t i = 0; i < win.migrations.size(); ++i) {
      const Migration& m = win.migrations[i];
      if (m.exchange_with) {
        if (i + 1 >= win.migrations.size()) throw MappingError("unpaired exchange");
        em.exchange(m, win.migrations[i + 1]);
        ++i;
      } else {
        em.migrate(m);
      }
    }
    for (std::size_t gi : win.gates) {
      Gate g = gates[gi];
      if (mp.tags[gi] == GateTag::Remote) {
        const Location c = win.assignment.location(g.qubits[0]);
        const Location t = win.assignment.location(g.qubits[1]);
        if (g.condition) throw MappingError("classically controlled remote gates are unsupported");
        em.remote_cx(em.data(c), c.qpu, em.data(t), t.qpu);
        continue;
      }
      for (Qubit& q : g.qubits) q = em.data(win.assignment.location(q));
      em.emit(std::move(g));
    }
  }
  ExpandedProgram out = em.take();
  for (Qubit q = 0; q < n; ++q) {
    out.input_map.push_back(em.data(mp.initial.location(q)));
    out.output_map.push_back(em.data(mp.final_assignment().location(q)));
  }
  return out;
}

}  // namespace dqc
