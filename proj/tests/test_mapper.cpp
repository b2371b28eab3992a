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


#include <gtest/gtest.h>

#include <string>

#include "dqc/errors.hpp"
#include "dqc/lowering.hpp"
#include "dqc/mapper.hpp"
#include "dqc/metrics.hpp"
#include "dqc/qasm.hpp"
#include "dqc/report.hpp"
#include "dqc/schedule.hpp"

namespace dqc {
namespace {

HardwareSpec two_qpus(std::size_t cap0, std::size_t cap1) {
  HardwareSpec hw = HardwareSpec::two_qpu_default();
  hw.qpus[0].data_capacity = cap0;
  hw.qpus[1].data_capacity = cap1;
  return hw;
}

Circuit load(const std::string& name) {
  return decompose_to_basis(parse_qasm_file(std::string(DQC_CORPUS_DIR) + "/" + name + ".qasm"));
}

TEST(Assignment, Bookkeeping) {
  Assignment a({2, 1}, 3);
  EXPECT_FALSE(a.is_complete());
  a.place(0, {0, 1});
  a.place(1, {1, 0});
  EXPECT_THROW(a.place(2, {1, 0}), MappingError);
  EXPECT_THROW(a.place(2, {1, 1}), MappingError);
  EXPECT_THROW(a.location(2), MappingError);
  a.place(2, {0, 0});
  EXPECT_TRUE(a.is_complete());
  EXPECT_EQ(a.occupancy(0), 2U);
  EXPECT_EQ(a.occupant({0, 1}), 0U);
  EXPECT_EQ(a.qpu_vector(), std::vector<int>({0, 1, 0}));
  a.exchange(0, 1);
  EXPECT_EQ(a.location(0), (Location{1, 0}));
  EXPECT_EQ(a.location(1), (Location{0, 1}));
  EXPECT_THROW(a.move(2, {0, 1}), MappingError);
  EXPECT_TRUE(a.free_slots(0).empty());
}

TEST(GlobalAssign, GfMultGlobalCount) {
  const Circuit c = load("gf2_4_mult");
  const Assignment a = global_assign(c, HardwareSpec::two_qpu_default(), 0);
  EXPECT_EQ(count_inter_qpu(c, a.qpu_vector()), 49U);
}

TEST(GlobalAssign, ForcedSplit) {
  Circuit c(2);
  for (int i = 0; i < 5; ++i) c.add(Gate::cx(0, 1));
  const Assignment a = global_assign(c, two_qpus(1, 1), 3);
  EXPECT_NE(a.qpu(0), a.qpu(1));
  EXPECT_EQ(count_inter_qpu(c, a.qpu_vector()), 5U);
}

TEST(GlobalAssign, DisjointSubcircuitsStayLocal) {
  Circuit c(6);
  c.add(Gate::cx(0, 3)).add(Gate::cx(3, 5)).add(Gate::cx(5, 0));
  c.add(Gate::cx(1, 2)).add(Gate::cx(2, 4)).add(Gate::cx(4, 1));
  const Assignment a = global_assign(c, two_qpus(3, 3), 1);
  EXPECT_EQ(count_inter_qpu(c, a.qpu_vector()), 0U);
}

TEST(GlobalAssign, IdleQubitsFillSpareRoom) {
  Circuit c(5);
  c.add(Gate::cx(0, 1)).add(Gate::cx(1, 2)).add(Gate::h(3)).add(Gate::h(4));
  const Assignment a = global_assign(c, two_qpus(3, 3), 0);
  EXPECT_EQ(count_inter_qpu(c, a.qpu_vector()), 0U);
  EXPECT_TRUE(a.is_complete());
}

TEST(GlobalAssign, TooWideForHardware) {
  EXPECT_THROW(global_assign(Circuit(30), two_qpus(2, 2), 0), CapacityError);
}

TEST(GlobalAssign, SeedMovesSlotsNotQpus) {
  const Circuit c = load("tof_4");
  const HardwareSpec hw = HardwareSpec::two_qpu_default();
  const Assignment a = global_assign(c, hw, 1);
  const Assignment b = global_assign(c, hw, 2);
  EXPECT_EQ(a.qpu_vector(), b.qpu_vector());
  EXPECT_EQ(a, global_assign(c, hw, 1));
  bool slots_differ = false;
  for (Qubit q = 0; q < c.num_qubits(); ++q) slots_differ |= a.location(q) != b.location(q);
  EXPECT_TRUE(slots_differ);
}

ScheduledCircuit sched_with_makespan(double makespan) {
  Circuit c(1);
  for (int i = 0; i < static_cast<int>(makespan); ++i) c.add(Gate::h(0));
  return schedule_asap(c);
}

TEST(MakeWindows, CoverTheMakespan) {
  const auto w = make_windows(sched_with_makespan(450), 200);
  ASSERT_EQ(w.size(), 3U);
  EXPECT_EQ(w[0], (TimeWindow{0, 200}));
  EXPECT_EQ(w[1], (TimeWindow{200, 200}));
  EXPECT_EQ(w[2], (TimeWindow{400, 200}));
}

TEST(MakeWindows, EmptyCircuit) { EXPECT_TRUE(make_windows(schedule_asap(Circuit(2)), 200).empty()); }

TEST(MakeWindows, LongWindowIsSingle) {
  EXPECT_EQ(make_windows(sched_with_makespan(450), 450).size(), 1U);
  EXPECT_EQ(make_windows(sched_with_makespan(450), 1e9).size(), 1U);
  EXPECT_THROW(make_windows(sched_with_makespan(4), 0.0), MappingError);
}

TEST(MakeWindows, EveryGateInExactlyOneWindow) {
  const ScheduledCircuit s = schedule_asap(load("gf2_6_mult"));
  for (double dt : {7.0, 20.0, 200.0}) {
    const auto w = make_windows(s, dt);
    for (double t : s.start_time) {
      int hits = 0;
      for (const TimeWindow& win : w) hits += win.contains(t) ? 1 : 0;
      EXPECT_EQ(hits, 1);
      EXPECT_TRUE(w[window_index(t, dt, w.size())].contains(t));
    }
  }
}

TEST(MigrationRule, Arithmetic) {
  // q0 on QPU 0; q1..q3 on QPU 1.
  const std::vector<int> cur{0, 1, 1, 1};
  const PartitionVector to_one({1, 1, 1, 1}, 2);
  InteractionGraph three(4);
  three.add_edge(0, 1);
  three.add_edge(0, 2);
  three.add_edge(0, 3);
  const MigrationDecision a = migration_rule(0, three, cur, to_one);
  EXPECT_TRUE(a.migrate);
  EXPECT_DOUBLE_EQ(a.benefit, 2.0);

  InteractionGraph one(4);
  one.add_edge(0, 1);
  const MigrationDecision b = migration_rule(0, one, cur, to_one);
  EXPECT_FALSE(b.migrate);
  EXPECT_DOUBLE_EQ(b.benefit, 0.0);

  const MigrationDecision c = migration_rule(0, InteractionGraph(4), cur, to_one);
  EXPECT_FALSE(c.migrate);

  // Moving away from local partners costs them.
  InteractionGraph mixed(4);
  mixed.add_edge(0, 1, 2.0);
  const std::vector<int> cur2{0, 1, 0, 1};
  mixed.add_edge(0, 2, 2.0);
  EXPECT_FALSE(migration_rule(0, mixed, cur2, to_one).migrate);
  EXPECT_DOUBLE_EQ(migration_rule(0, mixed, cur2, to_one).benefit, -1.0);
}

TEST(LocalOptimize, MigratesWhenPartnersChange) {
  // q0 talks to q1 three times, then to q2 twice.
  Circuit c(3);
  for (int i = 0; i < 3; ++i) c.add(Gate::cx(0, 1));
  for (int i = 0; i < 2; ++i) c.add(Gate::cx(0, 2));
  const ScheduledCircuit s = schedule_asap(c);
  ASSERT_EQ(s.start_time, std::vector<double>({0, 2, 4, 6, 8}));
  const HardwareSpec hw = two_qpus(2, 2);
  const Assignment init = global_assign(c, hw, 0);
  ASSERT_EQ(init.qpu(0), init.qpu(1));
  ASSERT_EQ(count_inter_qpu(c, init.qpu_vector()), 2U);

  const MappedProgram mp = local_optimize(s, hw, init, 6.0, 0);
  ASSERT_EQ(mp.windows.size(), 2U);
  EXPECT_TRUE(mp.windows[0].migrations.empty());
  ASSERT_EQ(mp.windows[1].migrations.size(), 1U);
  EXPECT_EQ(mp.windows[1].migrations[0].qubit, 0U);
  EXPECT_EQ(mp.remote_gate_count(), 0U);
  EXPECT_EQ(mp.teleport_count(), 1U);
  EXPECT_EQ(count_inter_qpu(mp.logical_view(), mp.hardware.physical_qpu_map()), 1U);
}

TEST(LocalOptimize, SingleRemoteGateDoesNotMigrate) {
  Circuit c(3);
  c.add(Gate::cx(0, 1)).add(Gate::cx(0, 1)).add(Gate::cx(0, 2));
  const HardwareSpec hw = two_qpus(2, 2);
  const Assignment init = global_assign(c, hw, 0);
  const MappedProgram mp = local_optimize(schedule_asap(c), hw, init, 4.0, 0);
  EXPECT_EQ(mp.teleport_count(), 0U);
  EXPECT_EQ(mp.remote_gate_count(), 1U);
}

TEST(LocalOptimize, SingleWindowReproducesGlobalPass) {
  const Circuit c = load("barenco_tof_4");
  const ScheduledCircuit s = schedule_asap(c);
  const HardwareSpec hw = HardwareSpec::two_qpu_default();
  const Assignment init = global_assign(c, hw, 5);
  const MappedProgram mp = local_optimize(s, hw, init, s.makespan() + 1.0, 5);
  ASSERT_EQ(mp.windows.size(), 1U);
  EXPECT_EQ(mp.final_assignment(), init);
  EXPECT_EQ(mp.teleport_count(), 0U);
  EXPECT_EQ(mp.remote_gate_count(), count_inter_qpu(c, init.qpu_vector()));
}

TEST(LocalOptimize, RejectsUnloweredInput) {
  Circuit c(3);
  c.add(Gate::ccx(0, 1, 2));
  const HardwareSpec hw = HardwareSpec::two_qpu_default();
  EXPECT_THROW(local_optimize(ScheduledCircuit{c, {0.0}, {}}, hw, global_assign(c, hw, 0), 10, 0),
               MappingError);
}

TEST(LocalOptimize, ExchangeWhenBothSidesAreFull) {
  // Both QPUs full; q0 and q3 each talk only across the link in window 2.
  Circuit c(4);
  for (int i = 0; i < 3; ++i) c.add(Gate::cx(0, 1)).add(Gate::cx(2, 3));
  for (int i = 0; i < 3; ++i) c.add(Gate::cx(0, 2)).add(Gate::cx(1, 3));
  const HardwareSpec hw = two_qpus(2, 2);
  const ScheduledCircuit s = schedule_asap(c);
  const Assignment init = global_assign(c, hw, 0);
  const MappedProgram mp = local_optimize(s, hw, init, 6.0, 0);
  std::size_t exchanges = 0;
  for (const auto& w : mp.windows) {
    for (std::size_t i = 0; i < w.migrations.size(); ++i) {
      if (!w.migrations[i].exchange_with) continue;
      ++exchanges;
      ASSERT_LT(i + 1, w.migrations.size());
      EXPECT_EQ(w.migrations[i + 1].exchange_with, w.migrations[i].qubit);
      ++i;
    }
  }
  EXPECT_GE(exchanges, 1U);
  EXPECT_LT(mp.epr_consumed(), count_inter_qpu(c, init.qpu_vector()));
}

// Structural properties over the whole corpus at several window lengths.
class MapperCorpus : public ::testing::TestWithParam<double> {};

TEST_P(MapperCorpus, WindowInvariants) {
  const double dt = GetParam();
  const HardwareSpec hw_in = HardwareSpec::two_qpu_default();
  for (const std::string& path : corpus_files(DQC_CORPUS_DIR)) {
    SCOPED_TRACE(path);
    const Circuit c = decompose_to_basis(parse_qasm_file(path));
    const HardwareSpec hw = hw_in.resolved(c.num_qubits());
    const ScheduledCircuit s = schedule_asap(c, hw.durations);
    const Assignment init = global_assign(c, hw, 3);
    const MappedProgram mp = local_optimize(s, hw, init, dt, 3);
    const auto& gates = c.gates();

    std::vector<bool> seen(c.size(), false);
    const Assignment* prev = &mp.initial;
    for (const MappingWindow& w : mp.windows) {
      // Assignments thread through the migrations.
      Assignment replay = *prev;
      for (std::size_t i = 0; i < w.migrations.size(); ++i) {
        const Migration& m = w.migrations[i];
        EXPECT_EQ(replay.location(m.qubit), m.from);
        EXPECT_NE(m.from.qpu, m.to.qpu);
        if (m.exchange_with) {
          replay.exchange(m.qubit, *m.exchange_with);
          ++i;
        } else {
          replay.move(m.qubit, m.to);
        }
      }
      EXPECT_EQ(replay, w.assignment);
      for (std::size_t j = 0; j < hw.num_qpus(); ++j) {
        EXPECT_LE(w.assignment.occupancy(j), hw.data_capacity(j));
      }

      // Locality and per-window accounting.
      std::size_t remote = 0;
      std::size_t inherited_remote = 0;
      for (std::size_t g : w.gates) {
        EXPECT_FALSE(seen[g]);
        seen[g] = true;
        EXPECT_TRUE(w.interval.contains(s.start_time[g]) || &w == &mp.windows.back());
        if (!gates[g].is_two_qubit()) continue;
        const bool split = w.assignment.qpu(gates[g].qubits[0]) != w.assignment.qpu(gates[g].qubits[1]);
        EXPECT_EQ(mp.tags[g] == GateTag::Remote, split);
        remote += split ? 1 : 0;
        inherited_remote += prev->qpu(gates[g].qubits[0]) != prev->qpu(gates[g].qubits[1]) ? 1 : 0;
      }
      EXPECT_EQ(w.remote_gates, remote);
      EXPECT_EQ(w.epr_consumed, remote + w.migrations.size());
      EXPECT_LE(w.epr_consumed, inherited_remote);
      prev = &w.assignment;
    }
    for (bool b : seen) EXPECT_TRUE(b);

    EXPECT_EQ(mp.epr_consumed(), mp.remote_gate_count() + mp.teleport_count());
    EXPECT_EQ(mp.epr_consumed(), count_inter_qpu(mp.logical_view(), hw.physical_qpu_map()));
    EXPECT_EQ(count_two_qubit(mp.logical_view()), count_two_qubit(c) + mp.teleport_count());

    const MappedProgram again = local_optimize(s, hw, init, dt, 3);
    EXPECT_EQ(again.tags, mp.tags);
    EXPECT_EQ(again.final_assignment(), mp.final_assignment());
  }
}

INSTANTIATE_TEST_SUITE_P(WindowLengths, MapperCorpus, ::testing::Values(10.0, 20.0, 200.0));

}  // namespace
}  // namespace dqc
