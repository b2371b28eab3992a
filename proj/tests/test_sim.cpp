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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "dqc/errors.hpp"
#include "dqc/gadgets.hpp"
#include "dqc/sim.hpp"
#include "test_support.hpp"

namespace dqc {
namespace {

double norm_of(const StateVector& s) {
  double n = 0.0;
  for (const Amplitude& a : s) n += std::norm(a);
  return n;
}

// Random circuit mixing unitaries, measurements and corrections.
Circuit random_dynamic_circuit(std::size_t n, std::size_t bits, std::size_t gates,
                               std::mt19937_64& rng, bool unitary_only) {
  Circuit c(n, bits);
  std::uniform_int_distribution<std::size_t> q(0, n - 1);
  std::uniform_int_distribution<std::size_t> b(0, bits - 1);
  std::uniform_int_distribution<int> kind(0, unitary_only ? 4 : 7);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::vector<bool> written(bits, false);
  for (std::size_t i = 0; i < gates; ++i) {
    const Qubit a = q(rng);
    Qubit t = q(rng);
    while (t == a) t = q(rng);
    switch (kind(rng)) {
      case 0: c.add(Gate::h(a)); break;
      case 1: c.add(Gate::rz(a, angle(rng))); break;
      case 2: c.add(Gate::rx(a, angle(rng))); break;
      case 3:
      case 4: c.add(Gate::cx(a, t)); break;
      case 5: {
        const Bit bit = b(rng);
        c.add(Gate::measure(a, bit));
        written[bit] = true;
        break;
      }
      default: {
        const Bit bit = b(rng);
        if (written[bit]) c.add((kind(rng) % 2 ? Gate::x(a) : Gate::z(a)).conditioned(bit));
        break;
      }
    }
  }
  return c;
}

TEST(Simulate, HadamardTwiceIsIdentity) {
  Circuit c(1);
  c.add(Gate::h(0)).add(Gate::h(0));
  const auto out = simulate(c, basis_state(1, 0));
  ASSERT_EQ(out.size(), 1U);
  EXPECT_NEAR(std::abs(out[0].state[0]), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(out[0].state[1]), 0.0, 1e-12);
}

TEST(Simulate, BellMeasurementBranches) {
  Circuit c(2, 2);
  c.append(epr_prepare(0, 1));
  c.add(Gate::measure(0, 0)).add(Gate::measure(1, 1));
  const auto out = simulate(c, basis_state(2, 0));
  ASSERT_EQ(out.size(), 2U);
  EXPECT_EQ(out[0].bits, std::vector<int>({0, 0}));
  EXPECT_EQ(out[1].bits, std::vector<int>({1, 1}));
  EXPECT_NEAR(out[0].probability, 0.5, 1e-12);
  EXPECT_NEAR(out[1].probability, 0.5, 1e-12);
  EXPECT_NEAR(std::abs(out[1].state[3]), 1.0, 1e-12);
}

TEST(Simulate, GadgetOnOneZeroHasFourBranches) {
  Circuit c(4, 2);
  c.append(epr_prepare(2, 3));
  c.append(expand_remote_cnot(0, 1, 2, 3, 0, 1));
  const auto out = simulate(c, basis_state(4, 0b0001));
  ASSERT_EQ(out.size(), 4U);
  for (const BranchState& b : out) {
    EXPECT_NEAR(b.probability, 0.25, 1e-12);
    double p = 0.0;
    for (std::size_t x = 0; x < b.state.size(); ++x) {
      if ((x & 3U) == 3U) p += std::norm(b.state[x]);
    }
    EXPECT_NEAR(p, 1.0, 1e-12);
  }
}

TEST(Simulate, DeterministicOutcomeIsNotForked) {
  Circuit c(1, 1);
  c.add(Gate::measure(0, 0));
  EXPECT_EQ(simulate(c, basis_state(1, 0)).size(), 1U);
}

TEST(Simulate, UnlikelyOutcomeStaysNormalized) {
  Circuit c(2, 2);
  c.add(Gate::rx(0, 1e-3)).add(Gate::cx(0, 1)).add(Gate::measure(0, 0));
  c.add(Gate::rx(1, 3.1)).add(Gate::measure(1, 1));
  for (const BranchState& b : simulate(c, basis_state(2, 0))) {
    EXPECT_NEAR(norm_of(b.state), 1.0, 1e-12);
  }
}

TEST(Simulate, ConditionalGatesFollowTheirBranch) {
  Circuit c(2, 1);
  c.add(Gate::h(0)).add(Gate::measure(0, 0)).add(Gate::cc_x(0, 1));
  for (const BranchState& b : simulate(c, basis_state(2, 0))) {
    const std::size_t want = b.bits[0] ? 0b11U : 0b00U;
    EXPECT_NEAR(std::abs(b.state[want]), 1.0, 1e-12);
  }
}

TEST(Simulate, MergeFoldsBranchesOnceBitsAreDead) {
  Circuit c(3, 2);
  c.append(epr_prepare(1, 2));
  c.append(expand_teleport(0, 1, 2, 0, 1));
  std::mt19937_64 rng(4);
  const auto psi = testing::random_state(1, rng);
  const std::array<Qubit, 1> src{0};
  const StateVector in = embed_state(StateVector(psi.begin(), psi.end()), 3, src);
  EXPECT_EQ(simulate(c, in).size(), 4U);
  SimOptions merge;
  merge.merge_branches = true;
  const auto out = simulate(c, in, merge);
  ASSERT_EQ(out.size(), 1U);
  EXPECT_NEAR(out[0].probability, 1.0, 1e-12);
}

TEST(Simulate, Errors) {
  EXPECT_THROW(simulate(Circuit(15), StateVector(1U << 15)), SimulationError);
  Circuit marker(2);
  marker.add(Gate::remote_cx(0, 1));
  EXPECT_THROW(simulate(marker, basis_state(2, 0)), SimulationError);
  EXPECT_THROW(simulate(Circuit(2), basis_state(1, 0)), SimulationError);
  EXPECT_THROW(simulate(Circuit(1), StateVector{1.0, 1.0}), SimulationError);
  Circuit wide(3, 3);
  for (Qubit q = 0; q < 3; ++q) wide.add(Gate::h(q)).add(Gate::measure(q, q));
  SimOptions tight;
  tight.max_branches = 4;
  EXPECT_THROW(simulate(wide, basis_state(3, 0), tight), SimulationError);
  EXPECT_THROW(basis_state(2, 4), SimulationError);
}

TEST(SimulateProperty, MatchesDenseReferenceOnUnitaryCircuits) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit c = random_dynamic_circuit(5, 1, 40, rng, true);
    const auto in = testing::random_state(5, rng);
    const auto want = testing::run_unitary(c, in);
    const auto out = simulate(c, StateVector(in.begin(), in.end()));
    ASSERT_EQ(out.size(), 1U);
    for (std::size_t x = 0; x < want.size(); ++x) EXPECT_NEAR(std::abs(out[0].state[x] - want[x]), 0.0, 1e-10);
  }
}

TEST(SimulateProperty, BranchNormsAndTotalProbability) {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit c = random_dynamic_circuit(4, 3, 30, rng, false);
    const auto in = testing::random_state(4, rng);
    for (bool merge : {false, true}) {
      SimOptions o;
      o.merge_branches = merge;
      const auto out = simulate(c, StateVector(in.begin(), in.end()), o);
      double total = 0.0;
      for (const BranchState& b : out) {
        total += b.probability;
        EXPECT_NEAR(norm_of(b.state), 1.0, 1e-9);
      }
      EXPECT_NEAR(total, 1.0, 1e-9);
    }
  }
}

TEST(SimulateProperty, PermutationCovariance) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4;
    const Circuit c = random_dynamic_circuit(n, 2, 25, rng, false);
    std::vector<Qubit> perm(n);
    std::iota(perm.begin(), perm.end(), Qubit{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    Circuit pc(n, 2);
    for (Gate g : c.gates()) {
      for (Qubit& q : g.qubits) q = perm[q];
      pc.add(g);
    }
    const auto in = testing::random_state(n, rng);
    StateVector pin(in.size());
    for (std::size_t x = 0; x < in.size(); ++x) {
      std::size_t y = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if ((x >> i) & 1U) y |= std::size_t{1} << perm[i];
      }
      pin[y] = in[x];
    }
    const auto a = simulate(c, StateVector(in.begin(), in.end()));
    const auto b = simulate(pc, pin);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a[k].bits, b[k].bits);
      EXPECT_NEAR(a[k].probability, b[k].probability, 1e-12);
      for (std::size_t x = 0; x < a[k].state.size(); ++x) {
        std::size_t y = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if ((x >> i) & 1U) y |= std::size_t{1} << perm[i];
        }
        EXPECT_NEAR(std::abs(a[k].state[x] - b[k].state[y]), 0.0, 1e-10);
      }
    }
  }
}

TEST(Equivalence, GlobalPhaseIgnored) {
  Circuit z(1);
  z.add(Gate::z(0));
  Circuit rz(1);
  rz.add(Gate::rz(0, std::numbers::pi));
  const std::array<Qubit, 1> data{0};
  EXPECT_TRUE(equivalent(z, rz, data, 1e-9));
}

TEST(Equivalence, DetectsRelativePhase) {
  Circuit s(1);
  s.add(Gate::s(0));
  Circuit t(1);
  t.add(Gate::t(0));
  const std::array<Qubit, 1> data{0};
  const EquivalenceReport r = check_equivalence(s, t, data, data, 1e-9);
  EXPECT_FALSE(r.equivalent);
  EXPECT_FALSE(r.failing_input.empty());
  EXPECT_EQ(r.inputs_checked, 2U + 6U);
}

TEST(Equivalence, InputAndOutputMapsMayDiffer) {
  // The candidate swaps its data into fresh qubits.
  Circuit ref(1);
  ref.add(Gate::h(0));
  Circuit cand(2);
  cand.add(Gate::h(0)).add(Gate::cx(0, 1)).add(Gate::cx(1, 0));
  const std::array<Qubit, 1> in{0};
  const std::array<Qubit, 1> out{1};
  EXPECT_TRUE(check_equivalence(ref, cand, in, out, 1e-9).equivalent);
  EXPECT_FALSE(check_equivalence(ref, cand, in, in, 1e-9).equivalent);
}

TEST(Equivalence, EntangledAncillaFails) {
  Circuit ref(1);
  Circuit cand(2);
  cand.add(Gate::cx(0, 1));
  const std::array<Qubit, 1> data{0};
  EXPECT_FALSE(equivalent(ref, cand, data, 1e-9));
}

TEST(Equivalence, ReferenceMustBeMeasurementFree) {
  Circuit ref(1, 1);
  ref.add(Gate::measure(0, 0));
  const std::array<Qubit, 1> data{0};
  EXPECT_THROW(equivalent(ref, Circuit(1), data, 1e-9), SimulationError);
}

TEST(StateHelpers, ProductAndEmbed) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<std::array<Amplitude, 2>, 2> f{{{1.0, 0.0}, {r, r}}};
  const StateVector s = product_state(f);
  EXPECT_NEAR(std::abs(s[0] - r), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s[2] - r), 0.0, 1e-12);
  const std::array<Qubit, 2> map{2, 0};
  const StateVector e = embed_state(s, 3, map);
  EXPECT_NEAR(std::abs(e[0] - r), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(e[1] - r), 0.0, 1e-12);
  EXPECT_NEAR(state_fidelity(s, s), 1.0, 1e-12);
}

}  // namespace
}  // namespace dqc
