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

#include "dqc/partition.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "dqc/errors.hpp"

namespace dqc {

namespace {

constexpr double kGainEps = 1e-9;

double cut_weight(const InteractionGraph& g, const std::vector<int>& cluster_of) {
  double w = 0.0;
  for (std::size_t i = 0; i < cluster_of.size(); ++i) {
    for (std::size_t j = i + 1; j < cluster_of.size(); ++j) {
      if (cluster_of[i] != cluster_of[j]) w += g.weight(i, j);
    }
  }
  return w;
}

// Fiedler vector with a deterministic sign: the entry of largest magnitude
// (lowest index on ties) is made positive.
Eigen::VectorXd fiedler_vector(const InteractionGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  if (n < 2) return Eigen::VectorXd::Zero(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.laplacian());
  if (solver.info() != Eigen::Success) throw GraphError("eigensolver failed");
  Eigen::VectorXd f = solver.eigenvectors().col(1);
  Eigen::Index pivot = 0;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (std::abs(f(i)) > std::abs(f(pivot)) + 1e-12) pivot = i;
  }
  if (f(pivot) < 0) f = -f;
  return f;
}

PartitionVector bisect(const InteractionGraph& g, std::size_t cap0, std::size_t cap1,
                       const std::map<std::size_t, int>& pinned) {
  const std::size_t n = g.size();
  std::vector<int> base(n, -1);
  std::size_t pinned0 = 0;
  std::size_t pinned1 = 0;
  for (const auto& [v, c] : pinned) {
    base[v] = c;
    (c == 0 ? pinned0 : pinned1)++;
  }
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < n; ++v) {
    if (base[v] < 0) free.push_back(v);
  }
  const Eigen::VectorXd f = fiedler_vector(g);
  std::stable_sort(free.begin(), free.end(), [&](std::size_t a, std::size_t b) {
    const auto fa = f(static_cast<Eigen::Index>(a));
    const auto fb = f(static_cast<Eigen::Index>(b));
    return fa != fb ? fa < fb : a < b;
  });

  const std::size_t nf = free.size();
  const std::size_t lo = nf + pinned1 > cap1 ? nf + pinned1 - cap1 : 0;
  const std::size_t hi = std::min(nf, cap0 - pinned0);
  if (lo > hi) throw PartitionError("no capacity-respecting bisection exists");

  const double ideal = static_cast<double>(nf) * static_cast<double>(cap0) /
                       static_cast<double>(cap0 + cap1);
  std::optional<std::vector<int>> best;
  double best_cut = 0.0;
  double best_imbalance = 0.0;
  for (int orientation = 0; orientation < 2; ++orientation) {
    for (std::size_t count = lo; count <= hi; ++count) {
      std::vector<int> assign = base;
      for (std::size_t r = 0; r < nf; ++r) {
        const bool first = orientation == 0 ? r < count : r >= nf - count;
        assign[free[r]] = first ? 0 : 1;
      }
      const double cut = cut_weight(g, assign);
      const double imbalance = std::abs(static_cast<double>(count) - ideal);
      if (!best || cut < best_cut - kGainEps ||
          (cut <= best_cut + kGainEps && imbalance < best_imbalance - kGainEps)) {
        best = std::move(assign);
        best_cut = cut;
        best_imbalance = imbalance;
      }
    }
  }
  return PartitionVector(*best, 2);
}

PartitionVector spectral_recursive(const InteractionGraph& g,
                                   const std::vector<std::size_t>& sizes,
                                   const std::map<std::size_t, int>& pinned) {
  const std::size_t k = sizes.size();
  const std::size_t n = g.size();
  if (k == 1) return PartitionVector(std::vector<int>(n, 0), 1);

  const std::size_t half = k / 2;
  const auto cap0 = std::accumulate(sizes.begin(), sizes.begin() + static_cast<long>(half),
                                    std::size_t{0});
  const auto cap1 = std::accumulate(sizes.begin() + static_cast<long>(half), sizes.end(),
                                    std::size_t{0});
  std::map<std::size_t, int> group_pins;
  for (const auto& [v, c] : pinned) {
    group_pins[v] = static_cast<std::size_t>(c) < half ? 0 : 1;
  }
  const PartitionVector top = bisect(g, cap0, cap1, group_pins);
  if (k == 2) return top;

  std::vector<int> result(n, -1);
  for (int side = 0; side < 2; ++side) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (top.cluster(v) == side) members.push_back(v);
    }
    const auto first = side == 0 ? sizes.begin() : sizes.begin() + static_cast<long>(half);
    const auto last = side == 0 ? sizes.begin() + static_cast<long>(half) : sizes.end();
    const std::vector<std::size_t> sub_sizes(first, last);
    const int offset = side == 0 ? 0 : static_cast<int>(half);
    std::map<std::size_t, int> sub_pins;
    for (std::size_t local = 0; local < members.size(); ++local) {
      if (auto it = pinned.find(members[local]); it != pinned.end()) {
        sub_pins[local] = it->second - offset;
      }
    }
    const PartitionVector sub = spectral_recursive(g.induced(members), sub_sizes, sub_pins);
    for (std::size_t local = 0; local < members.size(); ++local) {
      result[members[local]] = sub.cluster(local) + offset;
    }
  }
  return PartitionVector(std::move(result), static_cast<int>(k));
}

}  // namespace

std::size_t SizeSpec::total_capacity() const {
  return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
}

void SizeSpec::validate(std::size_t n) const {
  if (sizes.empty()) throw PartitionError("size spec has no clusters");
  for (std::size_t s : sizes) {
    if (s == 0) throw PartitionError("cluster capacities must be positive");
  }
  if (total_capacity() < n) {
    throw PartitionError("total capacity " + std::to_string(total_capacity()) +
                         " is below vertex count " + std::to_string(n));
  }
  std::vector<std::size_t> used(sizes.size(), 0);
  for (const auto& [v, c] : pinned) {
    if (v >= n) throw PartitionError("pinned vertex out of range");
    if (c < 0 || c >= num_clusters()) throw PartitionError("pinned cluster out of range");
    if (++used[static_cast<std::size_t>(c)] > sizes[static_cast<std::size_t>(c)]) {
      throw PartitionError("pins exceed capacity of cluster " + std::to_string(c));
    }
  }
}

bool SizeSpec::admits(const PartitionVector& p) const {
  if (p.num_clusters() != num_clusters()) return false;
  const auto counts = p.cluster_sizes();
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    if (counts[j] > sizes[j]) return false;
  }
  for (const auto& [v, c] : pinned) {
    if (v >= p.size() || p.cluster(v) != c) return false;
  }
  return true;
}

double cut_cost(const InteractionGraph& g, const PartitionVector& p) {
  if (p.size() != g.size()) throw GraphError("partition size does not match graph");
  const Eigen::MatrixXd l = g.laplacian();
  double total = 0.0;
  for (int j = 0; j < p.num_clusters(); ++j) {
    const Eigen::VectorXd v = p.indicator(j);
    total += v.dot(l * v);
  }
  return total;
}

PartitionVector spectral_partition(const InteractionGraph& g, const SizeSpec& spec) {
  spec.validate(g.size());
  if (spec.num_clusters() < 2) throw PartitionError("spectral partitioning needs k >= 2");
  return spectral_recursive(g, spec.sizes, spec.pinned);
}

PartitionVector kl_refine(const InteractionGraph& g, const PartitionVector& p,
                          const SizeSpec& spec) {
  spec.validate(g.size());
  if (p.size() != g.size()) throw PartitionError("partition size does not match graph");
  if (!spec.admits(p)) throw PartitionError("initial partition violates the size spec");

  const std::size_t n = g.size();
  const auto k = static_cast<std::size_t>(spec.num_clusters());
  std::vector<int> assign = p.clusters();
  std::vector<bool> movable(n, true);
  for (const auto& [v, c] : spec.pinned) movable[v] = false;

  // link[v][c] = weight from v into cluster c
  std::vector<std::vector<double>> link(n, std::vector<double>(k, 0.0));
  std::vector<std::size_t> count(k, 0);
  auto rebuild = [&] {
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t v = 0; v < n; ++v) {
      std::fill(link[v].begin(), link[v].end(), 0.0);
      ++count[static_cast<std::size_t>(assign[v])];
    }
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u = 0; u < n; ++u) {
        link[v][static_cast<std::size_t>(assign[u])] += g.weight(v, u);
      }
    }
  };
  auto relocate = [&](std::size_t v, int to) {
    const auto from = static_cast<std::size_t>(assign[v]);
    for (std::size_t u = 0; u < n; ++u) {
      const double w = g.weight(u, v);
      link[u][from] -= w;
      link[u][static_cast<std::size_t>(to)] += w;
    }
    --count[from];
    ++count[static_cast<std::size_t>(to)];
    assign[v] = to;
  };

  struct Step {
    std::size_t v;
    int from;
    std::optional<std::size_t> partner;
  };

  rebuild();
  for (;;) {
    std::vector<bool> locked(n, false);
    std::vector<Step> steps;
    double running = 0.0;
    double best_total = 0.0;
    std::size_t best_len = 0;
    for (;;) {
      double best_gain = -std::numeric_limits<double>::infinity();
      std::optional<Step> chosen;
      int chosen_to = -1;
      for (std::size_t v = 0; v < n; ++v) {
        if (!movable[v] || locked[v]) continue;
        const auto a = static_cast<std::size_t>(assign[v]);
        for (std::size_t b = 0; b < k; ++b) {
          if (b == a) continue;
          const double gv = link[v][b] - link[v][a];
          if (count[b] < spec.sizes[b] && gv > best_gain + kGainEps) {
            best_gain = gv;
            chosen = Step{v, assign[v], std::nullopt};
            chosen_to = static_cast<int>(b);
          }
          for (std::size_t u = v + 1; u < n; ++u) {
            if (!movable[u] || locked[u] || static_cast<std::size_t>(assign[u]) != b) continue;
            const double gain = gv + link[u][a] - link[u][b] - 2.0 * g.weight(u, v);
            if (gain > best_gain + kGainEps) {
              best_gain = gain;
              chosen = Step{v, assign[v], u};
              chosen_to = static_cast<int>(b);
            }
          }
        }
      }
      if (!chosen) break;
      relocate(chosen->v, chosen_to);
      locked[chosen->v] = true;
      if (chosen->partner) {
        relocate(*chosen->partner, chosen->from);
        locked[*chosen->partner] = true;
      }
      steps.push_back(*chosen);
      running += best_gain;
      if (running > best_total + kGainEps) {
        best_total = running;
        best_len = steps.size();
      }
    }
    // Undo everything past the best prefix.
    for (std::size_t i = steps.size(); i > best_len; --i) {
      const Step& s = steps[i - 1];
      const int to = assign[s.v];
      relocate(s.v, s.from);
      if (s.partner) relocate(*s.partner, to);
    }
    if (best_len == 0) break;
  }
  return PartitionVector(std::move(assign), static_cast<int>(k));
}

PartitionVector exact_min_cut(const InteractionGraph& g, const SizeSpec& spec) {
  const std::size_t n = g.size();
  if (spec.num_clusters() != 2) throw PartitionError("exact_min_cut supports k = 2 only");
  if (n > kExactMinCutLimit) {
    throw PartitionError("exact_min_cut is limited to " + std::to_string(kExactMinCutLimit) +
                         " vertices");
  }
  spec.validate(n);
  std::optional<std::vector<int>> best;
  double best_cut = 0.0;
  std::vector<int> assign(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::size_t ones = 0;
    for (std::size_t v = 0; v < n; ++v) {
      assign[v] = static_cast<int>((mask >> v) & 1U);
      ones += static_cast<std::size_t>(assign[v]);
    }
    if (ones > spec.sizes[1] || n - ones > spec.sizes[0]) continue;
    bool pins_ok = true;
    for (const auto& [v, c] : spec.pinned) pins_ok = pins_ok && assign[v] == c;
    if (!pins_ok) continue;
    const double cut = cut_weight(g, assign);
    if (!best || cut < best_cut - kGainEps) {
      best = assign;
      best_cut = cut;
    }
  }
  return PartitionVector(*best, 2);
}

}  // namespace dqc
