#pragma once

// Exact alpha, mu, explicit maximum matchings, alpha-critical edge tests and
// Koenig-Egervary classification for forests and unicyclic forests.
//
// Everything runs on a shared masked engine: a vertex-removal overlay plus
// up to two skipped edges evaluate alpha/mu of subgraphs without
// materializing them, which keeps the per-vertex deletion probes used by the
// core computations linear apiece. Forest components use the two-state
// independence DP and greedy leaf matching; a component whose unique cycle
// is opened is a tree again, so unicyclic components branch on a cycle
// vertex for alpha and on cycle edges for mu.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "unicore/graph.hpp"

namespace unicore {

struct MatchingResult {
  std::vector<EdgeLabels> edges;        // sorted label pairs
  std::vector<std::string> saturated;   // sorted labels
};

namespace detail {

// At most two edges are ever masked at once: one deleted by the caller and
// one cycle edge opened while evaluating mu.
struct EdgeSkip {
  int a1 = -1, b1 = -1, a2 = -1, b2 = -1;
  void add(int u, int v) {
    if (a1 < 0) {
      a1 = u;
      b1 = v;
    } else {
      a2 = u;
      b2 = v;
    }
  }
  bool blocks(int u, int v) const {
    return (u == a1 && v == b1) || (u == b1 && v == a1) ||
           (u == a2 && v == b2) || (u == b2 && v == a2);
  }
};

struct Workspace {
  std::vector<char> removed, visited, mark, gone, extra, matched;
  std::vector<int> order, parent, deg, dp_in, dp_out;
  explicit Workspace(int n)
      : removed(n, 0),
        visited(n, 0),
        mark(n, 0),
        gone(n, 0),
        extra(n, 0),
        matched(n, 0),
        order(),
        parent(n, -1),
        deg(n, 0),
        dp_in(n, 0),
        dp_out(n, 0) {}
};

// Gathers the component of s in the masked subgraph; returns its edge count.
inline int collect_component(const Graph& g, Workspace& ws,
                             const EdgeSkip& skip, int s,
                             std::vector<int>& comp) {
  comp.clear();
  std::vector<int> stack{s};
  ws.visited[s] = 1;
  int half_edges = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    comp.push_back(v);
    for (int w : g.neighbor_ids(v)) {
      if (ws.removed[w] || skip.blocks(v, w)) continue;
      ++half_edges;
      if (!ws.visited[w]) {
        ws.visited[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return half_edges / 2;
}

// Two-state independence DP over the trees of the component, with ws.extra
// acting as an additional removal overlay.
inline int forest_alpha_comp(const Graph& g, Workspace& ws,
                             const EdgeSkip& skip,
                             const std::vector<int>& comp) {
  for (int v : comp) ws.mark[v] = 0;
  int total = 0;
  for (int r : comp) {
    if (ws.mark[r] || ws.extra[r] || ws.removed[r]) continue;
    ws.order.clear();
    ws.order.push_back(r);
    ws.mark[r] = 1;
    ws.parent[r] = -1;
    for (size_t i = 0; i < ws.order.size(); ++i) {
      int v = ws.order[i];
      for (int w : g.neighbor_ids(v)) {
        if (ws.mark[w] || ws.removed[w] || ws.extra[w] || skip.blocks(v, w))
          continue;
        ws.mark[w] = 1;
        ws.parent[w] = v;
        ws.order.push_back(w);
      }
    }
    for (int v : ws.order) {
      ws.dp_in[v] = 1;
      ws.dp_out[v] = 0;
    }
    for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
      int v = *it, p = ws.parent[v];
      if (p >= 0) {
        ws.dp_in[p] += ws.dp_out[v];
        ws.dp_out[p] += std::max(ws.dp_in[v], ws.dp_out[v]);
      }
    }
    total += std::max(ws.dp_in[r], ws.dp_out[r]);
  }
  return total;
}

// Leaf stripping restricted to one component; the residue is its cycle.
inline std::vector<int> strip_cycle_comp(const Graph& g, Workspace& ws,
                                         const EdgeSkip& skip,
                                         const std::vector<int>& comp) {
  std::vector<int> queue;
  for (int v : comp) {
    ws.gone[v] = 0;
    int d = 0;
    for (int w : g.neighbor_ids(v))
      if (!ws.removed[w] && !skip.blocks(v, w)) ++d;
    ws.deg[v] = d;
    if (d <= 1) queue.push_back(v);
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    ws.gone[v] = 1;
    for (int w : g.neighbor_ids(v)) {
      if (ws.removed[w] || ws.gone[w] || skip.blocks(v, w)) continue;
      if (--ws.deg[w] == 1) queue.push_back(w);
    }
  }
  std::vector<int> cycle;
  for (int v : comp)
    if (!ws.gone[v]) cycle.push_back(v);
  return cycle;
}

// Canonical orientation of a masked cycle: lexicographically smallest
// vertex first, then its smaller cycle neighbor.
inline std::vector<int> canonical_cycle_ids(const Graph& g, Workspace& ws,
                                            const EdgeSkip& skip,
                                            const std::vector<int>& cycle) {
  for (int v : cycle) ws.extra[v] = 2;  // temporary on-cycle tag
  int start = cycle[0];
  for (int v : cycle)
    if (g.label_less(v, start)) start = v;
  int second = -1;
  for (int w : g.neighbor_ids(start)) {
    if (ws.extra[w] != 2 || ws.removed[w] || skip.blocks(start, w)) continue;
    if (second < 0 || g.label_less(w, second)) second = w;
  }
  std::vector<int> walk{start, second};
  while (true) {
    int cur = walk.back(), prev = walk[walk.size() - 2];
    int next = -1;
    for (int w : g.neighbor_ids(cur)) {
      if (ws.extra[w] != 2 || w == prev || ws.removed[w] ||
          skip.blocks(cur, w))
        continue;
      next = w;
      break;
    }
    if (next == start || next == -1) break;
    walk.push_back(next);
  }
  for (int v : cycle) ws.extra[v] = 0;
  return walk;
}

// Greedy leaf matching: vertices in reverse BFS order from the
// lexicographically smallest vertex of the component, matching each vertex
// to its parent when both are free. Maximum on trees.
inline int greedy_tree_mu(const Graph& g, Workspace& ws, const EdgeSkip& skip,
                          const std::vector<int>& comp,
                          std::vector<std::pair<int, int>>* witness) {
  int root = comp[0];
  for (int v : comp) {
    ws.mark[v] = 0;
    ws.matched[v] = 0;
    if (g.label_less(v, root)) root = v;
  }
  ws.order.clear();
  ws.order.push_back(root);
  ws.mark[root] = 1;
  ws.parent[root] = -1;
  for (size_t i = 0; i < ws.order.size(); ++i) {
    int v = ws.order[i];
    for (int w : g.neighbor_ids(v)) {
      if (ws.mark[w] || ws.removed[w] || skip.blocks(v, w)) continue;
      ws.mark[w] = 1;
      ws.parent[w] = v;
      ws.order.push_back(w);
    }
  }
  int size = 0;
  for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
    int v = *it, p = ws.parent[v];
    if (p < 0 || ws.matched[v] || ws.matched[p]) continue;
    ws.matched[v] = ws.matched[p] = 1;
    ++size;
    if (witness) witness->emplace_back(v, p);
  }
  return size;
}

// alpha of the masked subgraph; every component must be a tree or unicyclic.
inline int alpha_masked(const Graph& g, Workspace& ws,
                        const EdgeSkip& skip = {}) {
  int n = g.vertex_count();
  std::fill(ws.visited.begin(), ws.visited.end(), 0);
  std::vector<int> comp;
  int total = 0;
  for (int s = 0; s < n; ++s) {
    if (ws.removed[s] || ws.visited[s]) continue;
    int m = collect_component(g, ws, skip, s, comp);
    int nc = static_cast<int>(comp.size());
    if (m == nc - 1) {
      total += forest_alpha_comp(g, ws, skip, comp);
    } else if (m == nc) {
      std::vector<int> cycle = strip_cycle_comp(g, ws, skip, comp);
      int v = cycle[0];
      for (int w : cycle)
        if (g.label_less(w, v)) v = w;
      // alpha = max(alpha(G - v), 1 + alpha(G - N[v])); both sides forests
      ws.extra[v] = 1;
      int without_v = forest_alpha_comp(g, ws, skip, comp);
      for (int w : g.neighbor_ids(v))
        if (!ws.removed[w] && !skip.blocks(v, w)) ws.extra[w] = 1;
      int without_nv = forest_alpha_comp(g, ws, skip, comp);
      ws.extra[v] = 0;
      for (int w : g.neighbor_ids(v)) ws.extra[w] = 0;
      total += std::max(without_v, 1 + without_nv);
    } else {
      throw UnsupportedClass(
          "component with more edges than vertices; only forests and "
          "unicyclic components are supported");
    }
  }
  return total;
}

// mu of the masked subgraph. For a unicyclic component the maximum over all
// cycle-edge openings is taken (some cycle edge is never mu-critical), the
// first maximizer in canonical cycle order providing the witness matching.
inline int mu_masked(const Graph& g, Workspace& ws, const EdgeSkip& skip = {},
                     std::vector<std::pair<int, int>>* witness = nullptr) {
  int n = g.vertex_count();
  std::fill(ws.visited.begin(), ws.visited.end(), 0);
  std::vector<int> comp;
  int total = 0;
  for (int s = 0; s < n; ++s) {
    if (ws.removed[s] || ws.visited[s]) continue;
    int m = collect_component(g, ws, skip, s, comp);
    int nc = static_cast<int>(comp.size());
    if (m == nc - 1) {
      total += greedy_tree_mu(g, ws, skip, comp, witness);
    } else if (m == nc) {
      std::vector<int> cycle = strip_cycle_comp(g, ws, skip, comp);
      std::vector<int> walk = canonical_cycle_ids(g, ws, skip, cycle);
      int best = -1, best_u = -1, best_v = -1;
      for (size_t i = 0; i < walk.size(); ++i) {
        int u = walk[i], v = walk[(i + 1) % walk.size()];
        EdgeSkip opened = skip;
        opened.add(u, v);
        int cand = greedy_tree_mu(g, ws, opened, comp, nullptr);
        if (cand > best) {
          best = cand;
          best_u = u;
          best_v = v;
        }
      }
      if (witness) {
        EdgeSkip opened = skip;
        opened.add(best_u, best_v);
        greedy_tree_mu(g, ws, opened, comp, witness);
      }
      total += best;
    } else {
      throw UnsupportedClass(
          "component with more edges than vertices; only forests and "
          "unicyclic components are supported");
    }
  }
  return total;
}

inline void require_supported(const Graph& g, const char* op) {
  if (classify(g) == GraphClass::Unsupported)
    throw UnsupportedClass(std::string(op) +
                           " requires a forest or unicyclic forest");
}

}  // namespace detail

// Independence number. Forest components: two-state tree DP. Unicyclic
// components: branch on the canonical first cycle vertex.
inline int alpha(const Graph& g) {
  detail::require_supported(g, "alpha");
  detail::Workspace ws(g.vertex_count());
  return detail::alpha_masked(g, ws);
}

// Matching number via the same masked engine.
inline int mu(const Graph& g) {
  detail::require_supported(g, "mu");
  detail::Workspace ws(g.vertex_count());
  return detail::mu_masked(g, ws);
}

// An explicit maximum matching together with the saturated vertex set.
inline MatchingResult max_matching(const Graph& g) {
  detail::require_supported(g, "max_matching");
  detail::Workspace ws(g.vertex_count());
  std::vector<std::pair<int, int>> picked;
  detail::mu_masked(g, ws, {}, &picked);
  MatchingResult result;
  for (auto [a, b] : picked) {
    EdgeLabels e{g.label(a), g.label(b)};
    if (e.second < e.first) std::swap(e.first, e.second);
    result.edges.push_back(std::move(e));
    result.saturated.push_back(g.label(a));
    result.saturated.push_back(g.label(b));
  }
  std::sort(result.edges.begin(), result.edges.end());
  std::sort(result.saturated.begin(), result.saturated.end());
  return result;
}

inline bool is_koenig_egervary(const Graph& g) {
  detail::require_supported(g, "is_koenig_egervary");
  detail::Workspace ws(g.vertex_count());
  return detail::alpha_masked(g, ws) + detail::mu_masked(g, ws) ==
         g.vertex_count();
}

// alpha(G - e) > alpha(G)?
inline bool is_alpha_critical(const Graph& g, const std::string& u,
                              const std::string& v) {
  int a = g.require_vertex(u), b = g.require_vertex(v);
  if (!g.has_edge_ids(a, b)) throw UnknownEdge("no edge '" + u + " " + v + "'");
  detail::require_supported(g, "is_alpha_critical");
  detail::Workspace ws(g.vertex_count());
  int base = detail::alpha_masked(g, ws);
  detail::EdgeSkip skip;
  skip.add(a, b);
  return detail::alpha_masked(g, ws, skip) > base;
}

inline bool is_alpha_critical(const Graph& g, const EdgeLabels& e) {
  return is_alpha_critical(g, e.first, e.second);
}

// The alpha-critical subset of the unique cycle's edges: all of E(C) exactly
// when the graph is not Koenig-Egervary, a proper subset otherwise.
inline std::vector<EdgeLabels> cycle_alpha_critical_edges(const Graph& g) {
  if (classify(g) != GraphClass::Unicyclic)
    throw NotUnicyclic("cycle_alpha_critical_edges requires a unicyclic graph");
  CycleInfo info = find_cycle(g);
  detail::Workspace ws(g.vertex_count());
  int base = detail::alpha_masked(g, ws);
  std::vector<EdgeLabels> critical;
  for (const auto& e : info.cycle_edges) {
    detail::EdgeSkip skip;
    skip.add(g.index_of(e.first), g.index_of(e.second));
    if (detail::alpha_masked(g, ws, skip) > base) critical.push_back(e);
  }
  return critical;
}

}  // namespace unicore
