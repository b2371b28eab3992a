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
#include <map>
#include <vector>

#include "dqc/graph.hpp"

namespace dqc {

/// Cluster capacities plus optional fixed vertices.
struct SizeSpec {
  std::vector<std::size_t> sizes;
  std::map<std::size_t, int> pinned;  // vertex -> cluster

  int num_clusters() const { return static_cast<int>(sizes.size()); }
  std::size_t total_capacity() const;
  /// Throws PartitionError unless capacities are positive, cover `n`
  /// vertices and admit the pins.
  void validate(std::size_t n) const;
  bool admits(const PartitionVector& p) const;
};

/// Sum over clusters of v_j' L v_j, i.e. twice the weight crossing clusters.
double cut_cost(const InteractionGraph& g, const PartitionVector& p);

/// Fiedler-vector partitioning. For two clusters the free vertices are
/// sorted by (Fiedler entry, index) and split at a threshold; every feasible
/// threshold in both orientations is evaluated and the cheapest kept. More
/// clusters recurse over halves of the capacity list.
PartitionVector spectral_partition(const InteractionGraph& g, const SizeSpec& spec);

/// Kernighan-Lin passes over single moves (into clusters with spare room)
/// and pair swaps. Each pass locks moved vertices, then keeps the best
/// improving prefix. Passes repeat until none improves. Pinned vertices
/// never move.
PartitionVector kl_refine(const InteractionGraph& g, const PartitionVector& p,
                          const SizeSpec& spec);

/// Exhaustive optimum for two clusters and at most 16 vertices. Ties go to
/// the assignment whose cluster-1 bitmask is smallest.
PartitionVector exact_min_cut(const InteractionGraph& g, const SizeSpec& spec);

inline constexpr std::size_t kExactMinCutLimit = 16;

}  // namespace dqc
