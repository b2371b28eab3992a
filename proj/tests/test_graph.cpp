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
#include <numeric>
#include <random>
#include <string>

#include "dqc/errors.hpp"
#include "dqc/graph.hpp"
#include "dqc/qasm.hpp"
#include "dqc/schedule.hpp"
#include "test_support.hpp"

namespace dqc {
namespace {

using testing::complete_graph;
using testing::two_triangles_bridge;

PartitionVector split(std::vector<int> c) { return PartitionVector(std::move(c), 2); }

TEST(InteractionGraph, ValidatesAdjacency) {
  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(2, 2);
  asym(0, 1) = 1.0;
  EXPECT_THROW(InteractionGraph{asym}, GraphError);
  Eigen::MatrixXd diag = Eigen::MatrixXd::Identity(2, 2);
  EXPECT_THROW(InteractionGraph{diag}, GraphError);
  Eigen::MatrixXd neg = Eigen::MatrixXd::Zero(2, 2);
  neg(0, 1) = neg(1, 0) = -1.0;
  EXPECT_THROW(InteractionGraph{neg}, GraphError);
  InteractionGraph g(3);
  EXPECT_THROW(g.add_edge(1, 1), GraphError);
  EXPECT_THROW(g.add_edge(0, 3), GraphError);
}

TEST(InteractionGraph, CountsGatesPerPair) {
  Circuit c(3);
  c.add(Gate::cx(0, 1)).add(Gate::cx(1, 0)).add(Gate::cx(0, 1)).add(Gate::h(2));
  c.add(Gate::barrier({0, 1, 2}));
  const InteractionGraph g = interaction_graph(c);
  EXPECT_DOUBLE_EQ(g.weight(0, 1), 3.0);
  EXPECT_DOUBLE_EQ(g.weight(1, 0), 3.0);
  EXPECT_DOUBLE_EQ(g.weight(0, 2), 0.0);
  EXPECT_DOUBLE_EQ(g.total_weight(), 3.0);
}

TEST(InteractionGraph, GfMultTotalWeight) {
  const Circuit c = parse_qasm_file(std::string(DQC_CORPUS_DIR) + "/gf2_4_mult.qasm");
  EXPECT_DOUBLE_EQ(interaction_graph(c).total_weight(), 99.0);
}

TEST(InteractionGraph, WindowKeepsGatesStartingInside) {
  Circuit c(2);
  c.add(Gate::cx(0, 1));
  for (int i = 0; i < 298; ++i) c.add(Gate::rz(0, 0.1));
  c.add(Gate::cx(0, 1));
  const ScheduledCircuit s = schedule_asap(c);
  ASSERT_DOUBLE_EQ(s.start_time.back(), 300.0);
  EXPECT_DOUBLE_EQ(interaction_graph(s, TimeWindow{0.0, 200.0}).weight(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(interaction_graph(s, TimeWindow{200.0, 200.0}).weight(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(interaction_graph(s, TimeWindow{0.0, 300.0}).weight(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(interaction_graph(s).weight(0, 1), 2.0);
  EXPECT_THROW(interaction_graph(s, TimeWindow{0.0, 0.0}), GraphError);
}

TEST(InteractionGraph, InducedSubgraphRenumbers) {
  const InteractionGraph g = two_triangles_bridge();
  const std::vector<std::size_t> keep{3, 2, 5};
  const InteractionGraph sub = g.induced(keep);
  EXPECT_EQ(sub.size(), 3U);
  EXPECT_DOUBLE_EQ(sub.weight(0, 1), 1.0);  // 3-2
  EXPECT_DOUBLE_EQ(sub.weight(0, 2), 1.0);  // 3-5
  EXPECT_DOUBLE_EQ(sub.weight(1, 2), 0.0);  // 2-5
}

TEST(Laplacian, PathGraph) {
  InteractionGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const auto ev = laplacian_eigenvalues(g, 3);
  ASSERT_EQ(ev.size(), 3U);
  EXPECT_NEAR(ev[0], 0.0, 1e-9);
  EXPECT_NEAR(ev[1], 1.0, 1e-9);
  EXPECT_NEAR(ev[2], 3.0, 1e-9);
}

TEST(Laplacian, DisconnectedEdges) {
  InteractionGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  const auto ev = laplacian_eigenvalues(g, 2);
  EXPECT_NEAR(ev[0], 0.0, 1e-9);
  EXPECT_NEAR(ev[1], 0.0, 1e-9);
}

TEST(Laplacian, CompleteGraphK4) {
  const auto ev = laplacian_eigenvalues(complete_graph(4), 4);
  EXPECT_NEAR(ev[0], 0.0, 1e-9);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(ev[i], 4.0, 1e-9);
}

TEST(Laplacian, CountOutOfRange) {
  EXPECT_THROW(laplacian_eigenvalues(complete_graph(3), 0), GraphError);
  EXPECT_THROW(laplacian_eigenvalues(complete_graph(3), 4), GraphError);
}

TEST(LaplacianProperty, MatchesJacobiOracleAndIsPsd) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> size(2, 12);
  std::uniform_int_distribution<int> weight(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = size(rng);
    InteractionGraph g = testing::random_graph(n, 0.5, rng);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (g.weight(i, j) > 0) g.add_edge(i, j, weight(rng) - 1);
      }
    }
    const auto ours = laplacian_eigenvalues(g, n);
    const auto oracle = testing::jacobi_eigenvalues(g.laplacian());
    const double scale = std::max(1.0, g.laplacian().norm());
    EXPECT_NEAR(ours[0], 0.0, 1e-9 * scale);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(ours[i], oracle[i], 1e-8 * scale);
      EXPECT_GE(ours[i], -1e-9 * scale);
      if (i > 0) EXPECT_LE(ours[i - 1], ours[i]);
    }
  }
}

TEST(NormalizedLaplacian, MatchesJacobiOracle) {
  const InteractionGraph g = two_triangles_bridge();
  const Eigen::VectorXd d = g.degrees();
  const Eigen::MatrixXd dinv = d.array().rsqrt().matrix().asDiagonal();
  const auto oracle = testing::jacobi_eigenvalues(dinv * g.laplacian() * dinv);
  const auto ours = normalized_laplacian_eigenvalues(g, 6);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(ours[i], oracle[i], 1e-9);
  InteractionGraph isolated(3);
  isolated.add_edge(0, 1);
  EXPECT_THROW(normalized_laplacian_eigenvalues(isolated, 2), GraphError);
}

TEST(Conductance, K4Halves) {
  const auto phi = conductance(complete_graph(4), split({0, 0, 1, 1}));
  ASSERT_EQ(phi.size(), 2U);
  EXPECT_NEAR(phi[0], 4.0 / 6.0, 1e-12);
  EXPECT_NEAR(phi[1], 4.0 / 6.0, 1e-12);
}

TEST(Conductance, DisconnectedTriangles) {
  InteractionGraph g = two_triangles_bridge();
  Eigen::MatrixXd a = g.adjacency();
  a(2, 3) = a(3, 2) = 0.0;
  const auto phi = conductance(InteractionGraph(a), split({0, 0, 0, 1, 1, 1}));
  EXPECT_DOUBLE_EQ(phi[0], 0.0);
  EXPECT_DOUBLE_EQ(phi[1], 0.0);
}

TEST(Conductance, TrianglesWithBridge) {
  const auto phi = conductance(two_triangles_bridge(), split({0, 0, 0, 1, 1, 1}));
  EXPECT_NEAR(phi[0], 1.0 / 7.0, 1e-12);
  EXPECT_NEAR(phi[1], 1.0 / 7.0, 1e-12);
}

TEST(Conductance, ZeroVolumeClusterRejected) {
  InteractionGraph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(conductance(g, split({0, 0, 1})), GraphError);
}

TEST(AssociationRatio, Triangle) {
  InteractionGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  const auto r = association_ratio(g, PartitionVector({0, 0, 0}, 1));
  EXPECT_DOUBLE_EQ(r[0], 2.0);
}

TEST(AssociationRatio, EdgelessCluster) {
  const auto r = association_ratio(InteractionGraph(3), PartitionVector({0, 0, 0}, 1));
  EXPECT_DOUBLE_EQ(r[0], 0.0);
}

TEST(AssociationRatio, K4Halves) {
  const auto r = association_ratio(complete_graph(4), split({0, 0, 1, 1}));
  EXPECT_DOUBLE_EQ(r[0], 1.0);
  EXPECT_DOUBLE_EQ(r[1], 1.0);
}

TEST(AssociationRatio, EmptyClusterRejected) {
  EXPECT_THROW(association_ratio(complete_graph(3), split({0, 0, 0})), GraphError);
}

TEST(CheegerScreen, ClusteredTopologyIsSuitable) {
  // Two all-to-all QPUs of five qubits joined by two links.
  InteractionGraph g(10);
  for (std::size_t base : {0U, 5U}) {
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) g.add_edge(base + i, base + j);
    }
  }
  g.add_edge(0, 5);
  g.add_edge(1, 6);
  const CheegerScreen s = cheeger_screen(g, 2, 1.0);
  EXPECT_TRUE(s.suitable);
  EXPECT_NEAR(s.lambda_k, testing::jacobi_eigenvalues(g.laplacian())[1], 1e-9);
  EXPECT_LT(s.lambda_k, 1.0);
}

TEST(CheegerScreen, CompleteGraphIsNot) {
  const CheegerScreen s = cheeger_screen(complete_graph(8), 2, 1.0);
  EXPECT_FALSE(s.suitable);
  EXPECT_NEAR(s.lambda_k, 8.0, 1e-9);
}

TEST(CheegerScreen, DisjointClusters) {
  InteractionGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  const CheegerScreen s = cheeger_screen(g, 2, 1.0);
  EXPECT_TRUE(s.suitable);
  EXPECT_NEAR(s.lambda_k, 0.0, 1e-9);
}

TEST(CheegerProperty, NormalizedLambdaTwoBoundsMinimumConductance) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::size_t> size(4, 12);
  std::uniform_real_distribution<double> density(0.25, 0.75);
  int checked = 0;
  while (checked < 100) {
    const InteractionGraph g = testing::random_graph(size(rng), density(rng), rng);
    if (testing::has_isolated_vertex(g)) continue;
    const double lambda2 = normalized_laplacian_eigenvalues(g, 2)[1];
    const double phi = testing::brute_min_conductance_bisection(g);
    EXPECT_LE(lambda2 / 2.0, phi + 1e-9);
    ++checked;
  }
}

TEST(CheegerProperty, UnnormalizedSpectrumIsNotABound) {
  // On K4 the plain Laplacian gives lambda_2 / 2 = 2 while every bisection
  // has conductance 2/3, so the bound needs the normalized spectrum.
  const InteractionGraph g = complete_graph(4);
  EXPECT_GT(laplacian_eigenvalues(g, 2)[1] / 2.0, testing::brute_min_conductance_bisection(g));
  EXPECT_LE(normalized_laplacian_eigenvalues(g, 2)[1] / 2.0,
            testing::brute_min_conductance_bisection(g));
}

TEST(GraphProperty, MetricsInvariantUnderRelabelling) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 8;
    const InteractionGraph g = testing::random_graph(n, 0.5, rng);
    std::vector<int> cl(n);
    for (std::size_t v = 0; v < n; ++v) cl[v] = v < n / 2 ? 0 : 1;
    std::shuffle(cl.begin(), cl.end(), rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    // Vertex v of g becomes vertex perm[v] of h.
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    std::vector<int> cl_h(n);
    for (std::size_t i = 0; i < n; ++i) {
      cl_h[perm[i]] = cl[i];
      for (std::size_t j = 0; j < n; ++j) a(perm[i], perm[j]) = g.weight(i, j);
    }
    const InteractionGraph h(a);
    const auto vol_ok = [&](const InteractionGraph& x, const PartitionVector& p) {
      for (int j = 0; j < 2; ++j) {
        if (p.indicator(j).dot(x.degrees()) <= 0) return false;
      }
      return true;
    };
    const PartitionVector pg(cl, 2);
    const PartitionVector ph(cl_h, 2);
    const auto ag = association_ratio(g, pg);
    const auto ah = association_ratio(h, ph);
    EXPECT_NEAR(ag[0], ah[0], 1e-12);
    EXPECT_NEAR(ag[1], ah[1], 1e-12);
    if (vol_ok(g, pg)) {
      const auto cg = conductance(g, pg);
      const auto ch = conductance(h, ph);
      EXPECT_NEAR(cg[0], ch[0], 1e-12);
      EXPECT_NEAR(cg[1], ch[1], 1e-12);
    }
    const auto eg = laplacian_eigenvalues(g, n);
    const auto eh = laplacian_eigenvalues(h, n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(eg[i], eh[i], 1e-9);
  }
}

TEST(PartitionVector, Basics) {
  const PartitionVector p({0, 2, 2, 1}, 3);
  EXPECT_EQ(p.cluster_sizes(), std::vector<std::size_t>({1, 1, 2}));
  EXPECT_EQ(p.indicator(2), (Eigen::VectorXd(4) << 0, 1, 1, 0).finished());
  EXPECT_THROW(PartitionVector({0, 3}, 3), GraphError);
  EXPECT_THROW(PartitionVector({0}, 0), GraphError);
}

}  // namespace
}  // namespace dqc
