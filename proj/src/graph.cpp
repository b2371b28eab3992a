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

#include "dqc/graph.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "dqc/errors.hpp"

namespace dqc {

InteractionGraph::InteractionGraph(std::size_t n)
    : adjacency_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                       static_cast<Eigen::Index>(n))) {}

InteractionGraph::InteractionGraph(Eigen::MatrixXd adjacency) : adjacency_(std::move(adjacency)) {
  if (adjacency_.rows() != adjacency_.cols()) throw GraphError("adjacency must be square");
  for (Eigen::Index i = 0; i < adjacency_.rows(); ++i) {
    if (adjacency_(i, i) != 0.0) throw GraphError("adjacency must have a zero diagonal");
    for (Eigen::Index j = 0; j < adjacency_.cols(); ++j) {
      const double w = adjacency_(i, j);
      if (!std::isfinite(w) || w < 0.0) throw GraphError("edge weights must be finite and >= 0");
      if (w != adjacency_(j, i)) throw GraphError("adjacency must be symmetric");
    }
  }
}

void InteractionGraph::add_edge(std::size_t i, std::size_t j, double w) {
  if (i >= size() || j >= size()) throw GraphError("edge endpoint out of range");
  if (i == j) throw GraphError("self loops are not allowed");
  if (!std::isfinite(w) || w < 0.0) throw GraphError("edge weights must be finite and >= 0");
  const auto a = static_cast<Eigen::Index>(i);
  const auto b = static_cast<Eigen::Index>(j);
  adjacency_(a, b) += w;
  adjacency_(b, a) += w;
}

Eigen::VectorXd InteractionGraph::degrees() const { return adjacency_.rowwise().sum(); }

Eigen::MatrixXd InteractionGraph::laplacian() const {
  Eigen::MatrixXd l = -adjacency_;
  l.diagonal() += degrees();
  return l;
}

double InteractionGraph::total_weight() const { return adjacency_.sum() / 2.0; }

InteractionGraph InteractionGraph::induced(std::span<const std::size_t> vertices) const {
  InteractionGraph sub(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = 0; b < vertices.size(); ++b) {
      sub.adjacency_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          a == b ? 0.0 : weight(vertices[a], vertices[b]);
    }
  }
  return sub;
}

PartitionVector::PartitionVector(std::vector<int> cluster_of, int num_clusters)
    : cluster_of_(std::move(cluster_of)), k_(num_clusters) {
  if (k_ < 1) throw GraphError("a partition needs at least one cluster");
  for (int c : cluster_of_) {
    if (c < 0 || c >= k_) throw GraphError("cluster id out of range");
  }
}

std::vector<std::size_t> PartitionVector::cluster_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(k_), 0);
  for (int c : cluster_of_) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

Eigen::VectorXd PartitionVector::indicator(int j) const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size()));
  for (std::size_t i = 0; i < size(); ++i) {
    if (cluster_of_[i] == j) v(static_cast<Eigen::Index>(i)) = 1.0;
  }
  return v;
}

InteractionGraph interaction_graph(const ScheduledCircuit& sched,
                                   std::optional<TimeWindow> window) {
  if (window && !(window->length > 0.0)) throw GraphError("window length must be positive");
  InteractionGraph g(sched.circuit.num_qubits());
  const auto& gates = sched.circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (!gates[i].is_two_qubit()) continue;
    if (window && !window->contains(sched.start_time[i])) continue;
    g.add_edge(gates[i].qubits[0], gates[i].qubits[1]);
  }
  return g;
}

InteractionGraph interaction_graph(const Circuit& circuit) {
  InteractionGraph g(circuit.num_qubits());
  for (const Gate& gate : circuit.gates()) {
    if (gate.is_two_qubit()) g.add_edge(gate.qubits[0], gate.qubits[1]);
  }
  return g;
}

namespace {

void check_k(const InteractionGraph& g, std::size_t k) {
  if (k < 1 || k > g.size()) {
    throw GraphError("eigenvalue count " + std::to_string(k) + " out of range for " +
                     std::to_string(g.size()) + " vertices");
  }
}

std::vector<double> head(const Eigen::VectorXd& values, std::size_t k) {
  return {values.data(), values.data() + k};
}

void check_partition(const InteractionGraph& g, const PartitionVector& p) {
  if (p.size() != g.size()) throw GraphError("partition size does not match graph");
}

}  // namespace

std::vector<double> laplacian_eigenvalues(const InteractionGraph& g, std::size_t k) {
  check_k(g, k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.laplacian(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw GraphError("eigensolver failed");
  return head(solver.eigenvalues(), k);
}

std::vector<double> normalized_laplacian_eigenvalues(const InteractionGraph& g,
                                                     std::size_t k) {
  check_k(g, k);
  const Eigen::VectorXd d = g.degrees();
  if ((d.array() <= 0.0).any()) {
    throw GraphError("normalized spectrum needs every vertex to have positive degree");
  }
  const Eigen::VectorXd inv_sqrt = d.array().rsqrt();
  const Eigen::MatrixXd normalized = inv_sqrt.asDiagonal() * g.laplacian() * inv_sqrt.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(normalized, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw GraphError("eigensolver failed");
  return head(solver.eigenvalues(), k);
}

std::vector<double> conductance(const InteractionGraph& g, const PartitionVector& p) {
  check_partition(g, p);
  const Eigen::MatrixXd l = g.laplacian();
  const Eigen::VectorXd d = g.degrees();
  std::vector<double> out;
  for (int j = 0; j < p.num_clusters(); ++j) {
    const Eigen::VectorXd v = p.indicator(j);
    const double volume = v.dot(d.cwiseProduct(v));
    if (volume <= 0.0) {
      throw GraphError("cluster " + std::to_string(j) + " has zero volume");
    }
    out.push_back(v.dot(l * v) / volume);
  }
  return out;
}

std::vector<double> association_ratio(const InteractionGraph& g, const PartitionVector& p) {
  check_partition(g, p);
  std::vector<double> out;
  for (int j = 0; j < p.num_clusters(); ++j) {
    const Eigen::VectorXd v = p.indicator(j);
    const double members = v.squaredNorm();
    if (members == 0.0) throw GraphError("cluster " + std::to_string(j) + " is empty");
    out.push_back(v.dot(g.adjacency() * v) / members);
  }
  return out;
}

CheegerScreen cheeger_screen(const InteractionGraph& g, std::size_t k, double threshold) {
  const double lambda_k = laplacian_eigenvalues(g, k).back();
  return {lambda_k <= threshold, lambda_k};
}

}  // namespace dqc
