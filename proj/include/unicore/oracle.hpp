#pragma once

// Exhaustive ground truth for small graphs, independent of the structural
// solver: alpha by include/exclude branch and bound over vertex bitmasks,
// the exact core as the running intersection of every maximum independent
// set, and mu by backtracking over the edge list. Works on arbitrary graphs
// up to 64 vertices; the configurable limit keeps verification runs honest
// about how much enumeration they are willing to pay for.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "unicore/graph.hpp"

namespace unicore {

struct OracleReport {
  int alpha = 0;
  int mu = 0;
  std::int64_t num_mis = 0;                            // |Omega(G)|
  std::vector<std::string> core;                       // sorted
  std::vector<std::vector<std::string>> omega_sample;  // first few, each sorted
};

namespace oracle_detail {

struct MisSearch {
  const std::vector<std::uint64_t>& closed_nb;
  int best = 0;

  void bound_alpha(std::uint64_t candidates, int size) {
    if (size + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
      best = size;
      return;
    }
    int v = std::countr_zero(candidates);
    bound_alpha(candidates & ~closed_nb[v], size + 1);
    bound_alpha(candidates & ~(std::uint64_t{1} << v), size);
  }
};

struct MisEnumerate {
  const std::vector<std::uint64_t>& closed_nb;
  int alpha;
  std::int64_t count = 0;
  std::uint64_t intersection = ~std::uint64_t{0};
  std::vector<std::uint64_t> samples;
  int sample_cap;

  // Visits every independent set of maximum size exactly once: the
  // include/exclude tree partitions sets by membership of the pivot.
  void run(std::uint64_t candidates, std::uint64_t chosen, int size) {
    if (size + std::popcount(candidates) < alpha) return;
    if (candidates == 0) {
      ++count;
      intersection &= chosen;
      if (static_cast<int>(samples.size()) < sample_cap)
        samples.push_back(chosen);
      return;
    }
    int v = std::countr_zero(candidates);
    run(candidates & ~closed_nb[v], chosen | (std::uint64_t{1} << v),
        size + 1);
    run(candidates & ~(std::uint64_t{1} << v), chosen, size);
  }
};

struct MuSearch {
  const std::vector<std::pair<int, int>>& edges;
  int n;
  int best = 0;

  void run(size_t i, std::uint64_t used, int size) {
    if (size > best) best = size;
    int loose = std::min(static_cast<int>(edges.size() - i),
                         (n - std::popcount(used)) / 2);
    if (size + loose <= best || i == edges.size()) return;
    auto [a, b] = edges[i];
    std::uint64_t mask =
        (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    if ((used & mask) == 0) run(i + 1, used | mask, size + 1);
    run(i + 1, used, size);
  }
};

}  // namespace oracle_detail

// Enumerates Omega(G) outright. Throws TooLarge beyond the given limit (and
// beyond the 64-vertex bitmask ceiling regardless of the limit).
inline OracleReport oracle_analyze(const Graph& g, int limit = 20,
                                   int sample_cap = 64) {
  int n = g.vertex_count();
  if (n > limit || n > 64)
    throw TooLarge("oracle limited to " + std::to_string(std::min(limit, 64)) +
                   " vertices, got " + std::to_string(n));

  std::vector<std::uint64_t> closed_nb(n, 0);
  for (int v = 0; v < n; ++v) {
    closed_nb[v] = std::uint64_t{1} << v;
    for (int w : g.neighbor_ids(v)) closed_nb[v] |= std::uint64_t{1} << w;
  }
  std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  OracleReport report;

  oracle_detail::MisSearch phase1{closed_nb};
  phase1.bound_alpha(all, 0);
  report.alpha = phase1.best;

  oracle_detail::MisEnumerate phase2{closed_nb, report.alpha, 0, all, {},
                                     sample_cap};
  phase2.run(all, 0, 0);
  report.num_mis = phase2.count;

  auto labels_of = [&](std::uint64_t mask) {
    std::vector<std::string> out;
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint64_t{1} << v)) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  report.core = labels_of(phase2.intersection);
  for (std::uint64_t s : phase2.samples)
    report.omega_sample.push_back(labels_of(s));
  std::sort(report.omega_sample.begin(), report.omega_sample.end());

  std::vector<std::pair<int, int>> edge_ids;
  for (const auto& [u, v] : g.edges())
    edge_ids.emplace_back(g.index_of(u), g.index_of(v));
  oracle_detail::MuSearch phase3{edge_ids, n};
  phase3.run(0, 0, 0);
  report.mu = phase3.best;

  return report;
}

}  // namespace unicore
