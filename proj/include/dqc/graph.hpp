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

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dqc/schedule.hpp"

namespace dqc {

/// Weighted undirected graph over qubits. A(i, j) counts two-qubit gates
/// between i and j (or coupling multiplicity for a hardware graph).
class InteractionGraph {
 public:
  InteractionGraph() = default;
  explicit InteractionGraph(std::size_t n);
  /// Throws GraphError unless `adjacency` is square, symmetric, nonnegative
  /// and has a zero diagonal.
  explicit InteractionGraph(Eigen::MatrixXd adjacency);

  std::size_t size() const { return static_cast<std::size_t>(adjacency_.rows()); }
  double weight(std::size_t i, std::size_t j) const { return adjacency_(i, j); }
  void add_edge(std::size_t i, std::size_t j, double w = 1.0);

  const Eigen::MatrixXd& adjacency() const { return adjacency_; }
  Eigen::VectorXd degrees() const;
  Eigen::MatrixXd laplacian() const;
  /// Sum of A(i, j) over i < j.
  double total_weight() const;

  /// Subgraph on `vertices`, renumbered 0..k-1 in the given order.
  InteractionGraph induced(std::span<const std::size_t> vertices) const;

 private:
  Eigen::MatrixXd adjacency_;
};

/// Vertex -> cluster assignment with k clusters.
class PartitionVector {
 public:
  PartitionVector() = default;
  /// Throws GraphError if any entry lies outside [0, k).
  PartitionVector(std::vector<int> cluster_of, int num_clusters);

  std::size_t size() const { return cluster_of_.size(); }
  int num_clusters() const { return k_; }
  int cluster(std::size_t v) const { return cluster_of_[v]; }
  const std::vector<int>& clusters() const { return cluster_of_; }
  std::vector<std::size_t> cluster_sizes() const;
  /// Indicator vector v_j: 1 for members of cluster j.
  Eigen::VectorXd indicator(int j) const;

  friend bool operator==(const PartitionVector&, const PartitionVector&) = default;

 private:
  std::vector<int> cluster_of_;
  int k_ = 0;
};

/// Interaction graph over all qubits of `sched`. With a window, only
/// two-qubit gates whose start time lies in it are counted.
InteractionGraph interaction_graph(const ScheduledCircuit& sched,
                                   std::optional<TimeWindow> window = std::nullopt);
InteractionGraph interaction_graph(const Circuit& circuit);

/// The k smallest eigenvalues of L = D - A, ascending.
std::vector<double> laplacian_eigenvalues(const InteractionGraph& g, std::size_t k);

/// The k smallest eigenvalues of the pencil L x = lambda D x (the normalized
/// Laplacian spectrum). Requires every vertex to have positive degree.
std::vector<double> normalized_laplacian_eigenvalues(const InteractionGraph& g,
                                                     std::size_t k);

/// Per-cluster v_j' L v_j / v_j' D v_j. Throws for a zero-volume cluster.
std::vector<double> conductance(const InteractionGraph& g, const PartitionVector& p);

/// Per-cluster v_j' A v_j / v_j' v_j. Throws for an empty cluster.
std::vector<double> association_ratio(const InteractionGraph& g, const PartitionVector& p);

struct CheegerScreen {
  bool suitable = false;
  double lambda_k = 0.0;
};

/// A topology is well clustered into k parts when lambda_k <= threshold.
CheegerScreen cheeger_screen(const InteractionGraph& g, std::size_t k, double threshold);

}  // namespace dqc
