#pragma once

// Labeled simple undirected graphs: parsing, serialization, classification,
// cycle discovery and pendant-tree decomposition. Graph values are immutable
// after construction; every operation here is a pure function.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace unicore {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidInput : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct UnknownEdge : Error { using Error::Error; };
struct NotUnicyclic : Error { using Error::Error; };
struct UnsupportedClass : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };
struct UnknownFixture : Error { using Error::Error; };

enum class GraphClass { Tree, Forest, Unicyclic, UnicyclicForest, Unsupported };

inline const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Tree: return "Tree";
    case GraphClass::Forest: return "Forest";
    case GraphClass::Unicyclic: return "Unicyclic";
    case GraphClass::UnicyclicForest: return "UnicyclicForest";
    case GraphClass::Unsupported: return "Unsupported";
  }
  return "?";
}

using EdgeLabels = std::pair<std::string, std::string>;

// Simple undirected graph over opaque string labels. Vertex order is the
// insertion order from the source; neighbor lists are sorted
// lexicographically by label so every traversal is deterministic.
class Graph {
 public:
  Graph() = default;

  // Edge-list document: each non-comment line is "u v" (an edge) or "v"
  // (an isolated vertex); '#' starts a comment. The empty graph is rejected.
  static Graph parse(const std::string& text) {
    Graph g;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      std::istringstream ls(line);
      std::string a, b, extra;
      if (!(ls >> a)) continue;
      if (!(ls >> b)) {
        g.ensure_vertex(a);
        continue;
      }
      if (ls >> extra)
        throw InvalidInput("line has more than two tokens: '" + line + "'");
      g.add_edge_checked(a, b);
    }
    if (g.labels_.empty())
      throw InvalidInput("empty document: a graph needs at least one vertex");
    g.finalize();
    return g;
  }

  // Programmatic construction. `vertices_in_order` is processed first and
  // fixes the insertion order (and holds any isolated vertices); endpoints
  // not listed there are appended in first-appearance order.
  static Graph from_edges(const std::vector<EdgeLabels>& edges,
                          const std::vector<std::string>& vertices_in_order = {}) {
    Graph g;
    for (const auto& v : vertices_in_order) g.ensure_vertex(v);
    for (const auto& [u, v] : edges) g.add_edge_checked(u, v);
    if (g.labels_.empty())
      throw InvalidInput("empty graph: at least one vertex required");
    g.finalize();
    return g;
  }

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edge_list_.size()); }

  const std::vector<std::string>& vertex_labels() const { return labels_; }

  bool has_vertex(const std::string& v) const { return index_.count(v) != 0; }

  bool has_edge(const std::string& u, const std::string& v) const {
    int a = index_of(u), b = index_of(v);
    return a >= 0 && b >= 0 && has_edge_ids(a, b);
  }

  // -1 when the label is unknown.
  int index_of(const std::string& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
  }

  const std::string& label(int id) const { return labels_[id]; }

  // Neighbor ids, sorted lexicographically by label.
  const std::vector<int>& neighbor_ids(int id) const { return adj_[id]; }

  int degree(int id) const { return static_cast<int>(adj_[id].size()); }

  bool label_less(int a, int b) const { return lex_rank_[a] < lex_rank_[b]; }

  bool has_edge_ids(int a, int b) const {
    const auto& na = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    int target = adj_[a].size() <= adj_[b].size() ? b : a;
    return std::find(na.begin(), na.end(), target) != na.end();
  }

  std::vector<std::string> neighbors(const std::string& v) const {
    int id = require_vertex(v);
    std::vector<std::string> out;
    out.reserve(adj_[id].size());
    for (int w : adj_[id]) out.push_back(labels_[w]);
    return out;
  }

  // Edges as label pairs, each pair lexicographically ordered, the whole
  // list sorted.
  std::vector<EdgeLabels> edges() const {
    std::vector<EdgeLabels> out;
    out.reserve(edge_list_.size());
    for (auto [a, b] : edge_list_) {
      EdgeLabels e{labels_[a], labels_[b]};
      if (e.second < e.first) std::swap(e.first, e.second);
      out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Header comment with n and m, one edge per line (sorted), then isolated
  // vertices as single-token lines (sorted).
  std::string serialize() const {
    std::ostringstream out;
    out << "# n=" << vertex_count() << " m=" << edge_count() << "\n";
    for (const auto& [u, v] : edges()) out << u << " " << v << "\n";
    std::vector<std::string> isolated;
    for (int i = 0; i < vertex_count(); ++i)
      if (adj_[i].empty()) isolated.push_back(labels_[i]);
    std::sort(isolated.begin(), isolated.end());
    for (const auto& v : isolated) out << v << "\n";
    return out.str();
  }

  int require_vertex(const std::string& v) const {
    int id = index_of(v);
    if (id < 0) throw UnknownVertex("unknown vertex '" + v + "'");
    return id;
  }

 private:
  void ensure_vertex(const std::string& v) {
    if (index_.count(v)) return;
    index_.emplace(v, static_cast<int>(labels_.size()));
    labels_.push_back(v);
    adj_.emplace_back();
  }

  void add_edge_checked(const std::string& u, const std::string& v) {
    if (u == v) throw InvalidInput("self-loop at '" + u + "'");
    ensure_vertex(u);
    ensure_vertex(v);
    int a = index_[u], b = index_[v];
    for (int w : adj_[a])
      if (w == b) throw InvalidInput("duplicate edge '" + u + " " + v + "'");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    edge_list_.emplace_back(a, b);
  }

  void finalize() {
    int n = vertex_count();
    std::vector<int> by_label(n);
    for (int i = 0; i < n; ++i) by_label[i] = i;
    std::sort(by_label.begin(), by_label.end(),
              [&](int a, int b) { return labels_[a] < labels_[b]; });
    lex_rank_.assign(n, 0);
    for (int r = 0; r < n; ++r) lex_rank_[by_label[r]] = r;
    for (auto& nbrs : adj_)
      std::sort(nbrs.begin(), nbrs.end(),
                [&](int a, int b) { return lex_rank_[a] < lex_rank_[b]; });
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edge_list_;
  std::vector<int> lex_rank_;
};

inline Graph parse_graph(const std::string& text) { return Graph::parse(text); }

namespace detail {

// Component ids for non-deleted vertices; -1 elsewhere. Returns component count.
inline int label_components(const Graph& g, const std::vector<char>& removed,
                            std::vector<int>& comp) {
  int n = g.vertex_count();
  comp.assign(n, -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0 || (s < static_cast<int>(removed.size()) && removed[s]))
      continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbor_ids(v)) {
        if (comp[w] >= 0 || (w < static_cast<int>(removed.size()) && removed[w]))
          continue;
        comp[w] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  return count;
}

}  // namespace detail

// Per-component vertex/edge counts decide the tag.
inline GraphClass classify(const Graph& g) {
  std::vector<char> removed;
  std::vector<int> comp;
  int p = detail::label_components(g, removed, comp);
  std::vector<int> nv(p, 0), deg(p, 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    nv[comp[v]] += 1;
    deg[comp[v]] += g.degree(v);
  }
  bool any_cycle = false;
  for (int c = 0; c < p; ++c) {
    int mc = deg[c] / 2;
    if (mc > nv[c]) return GraphClass::Unsupported;
    if (mc == nv[c]) any_cycle = true;
  }
  if (!any_cycle) return p == 1 ? GraphClass::Tree : GraphClass::Forest;
  return p == 1 ? GraphClass::Unicyclic : GraphClass::UnicyclicForest;
}

struct PendantTree {
  std::string attach;          // x in N1(C)
  std::string cycle_neighbor;  // y in V(C), the unique cycle neighbor of x
  Graph tree;                  // T_x, the component of G - V(C) containing x
};

struct CycleInfo {
  std::vector<std::string> cycle_vertices;  // canonical closed walk
  std::vector<EdgeLabels> cycle_edges;      // sorted label pairs
  std::vector<std::string> n1;              // sorted
  std::vector<PendantTree> pendant_trees;   // sorted by attach label
};

namespace detail {

// Iteratively strip degree-1 vertices; the residue is the unique cycle.
// `removed[v]` marks vertices outside the subgraph under consideration.
inline std::vector<int> strip_to_cycle(const Graph& g,
                                       const std::vector<char>& removed) {
  int n = g.vertex_count();
  std::vector<int> deg(n, 0);
  std::vector<int> queue;
  auto alive = [&](int v) {
    return v >= static_cast<int>(removed.size()) || !removed[v];
  };
  for (int v = 0; v < n; ++v) {
    if (!alive(v)) continue;
    for (int w : g.neighbor_ids(v))
      if (alive(w)) deg[v] += 1;
    if (deg[v] <= 1) queue.push_back(v);
  }
  std::vector<char> gone(n, 0);
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    gone[v] = 1;
    for (int w : g.neighbor_ids(v)) {
      if (!alive(w) || gone[w]) continue;
      if (--deg[w] == 1) queue.push_back(w);
    }
  }
  std::vector<int> cycle;
  for (int v = 0; v < n; ++v)
    if (alive(v) && !gone[v]) cycle.push_back(v);
  return cycle;
}

// Canonical orientation: start at the lexicographically smallest cycle
// vertex, direction chosen so the second vertex is the smaller neighbor.
inline std::vector<int> canonical_cycle_walk(const Graph& g,
                                             const std::vector<int>& cycle_set) {
  std::vector<char> on_cycle(g.vertex_count(), 0);
  for (int v : cycle_set) on_cycle[v] = 1;
  int start = cycle_set[0];
  for (int v : cycle_set)
    if (g.label_less(v, start)) start = v;
  std::vector<int> cyc_nbrs;
  for (int w : g.neighbor_ids(start))
    if (on_cycle[w]) cyc_nbrs.push_back(w);
  int second = cyc_nbrs[0];
  for (int w : cyc_nbrs)
    if (g.label_less(w, second)) second = w;
  std::vector<int> walk{start, second};
  while (true) {
    int cur = walk.back(), prev = walk[walk.size() - 2];
    int next = -1;
    for (int w : g.neighbor_ids(cur)) {
      if (!on_cycle[w] || w == prev) continue;
      next = w;
      break;
    }
    if (next == start || next == -1) break;
    walk.push_back(next);
  }
  return walk;
}

}  // namespace detail

// Unique cycle, N1(C) and the pendant-tree decomposition of a unicyclic
// graph. Deterministic: identical inputs yield identical canonical cycles.
inline CycleInfo find_cycle(const Graph& g) {
  if (classify(g) != GraphClass::Unicyclic)
    throw NotUnicyclic("find_cycle requires a unicyclic graph");
  std::vector<char> no_removed;
  std::vector<int> cycle_set = detail::strip_to_cycle(g, no_removed);
  if (cycle_set.size() < 3)
    throw Error("internal: unicyclic graph with cycle shorter than 3");
  std::vector<int> walk = detail::canonical_cycle_walk(g, cycle_set);

  CycleInfo info;
  for (int v : walk) info.cycle_vertices.push_back(g.label(v));
  for (size_t i = 0; i < walk.size(); ++i) {
    const std::string& u = g.label(walk[i]);
    const std::string& v = g.label(walk[(i + 1) % walk.size()]);
    info.cycle_edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(info.cycle_edges.begin(), info.cycle_edges.end());

  std::vector<char> on_cycle(g.vertex_count(), 0);
  for (int v : cycle_set) on_cycle[v] = 1;

  std::vector<int> attach_of(g.vertex_count(), -1);  // x -> its cycle neighbor
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (on_cycle[v]) continue;
    for (int w : g.neighbor_ids(v)) {
      if (!on_cycle[w]) continue;
      if (attach_of[v] >= 0)
        throw Error("internal: vertex '" + g.label(v) +
                    "' attaches to the cycle twice");
      attach_of[v] = w;
    }
    if (attach_of[v] >= 0) info.n1.push_back(g.label(v));
  }
  std::sort(info.n1.begin(), info.n1.end());

  // Components of G - V(C) are the pendant trees; each contains exactly one
  // element of N1(C).
  std::vector<char> cycle_removed(g.vertex_count(), 0);
  for (int v : cycle_set) cycle_removed[v] = 1;
  std::vector<int> comp;
  int p = detail::label_components(g, cycle_removed, comp);
  std::vector<int> attach_vertex(p, -1);
  std::vector<std::vector<int>> members(p);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (on_cycle[v]) continue;
    members[comp[v]].push_back(v);
    if (attach_of[v] >= 0) {
      if (attach_vertex[comp[v]] >= 0)
        throw Error("internal: pendant tree with two attachments");
      attach_vertex[comp[v]] = v;
    }
  }
  for (int c = 0; c < p; ++c) {
    if (attach_vertex[c] < 0)
      throw Error("internal: pendant tree with no attachment");
    std::vector<std::string> order;
    for (int v : members[c]) order.push_back(g.label(v));
    std::vector<EdgeLabels> tree_edges;
    for (int v : members[c])
      for (int w : g.neighbor_ids(v))
        if (!on_cycle[w] && v < w)
          tree_edges.emplace_back(g.label(v), g.label(w));
    PendantTree pt;
    pt.attach = g.label(attach_vertex[c]);
    pt.cycle_neighbor = g.label(attach_of[attach_vertex[c]]);
    pt.tree = Graph::from_edges(tree_edges, order);
    info.pendant_trees.push_back(std::move(pt));
  }
  std::sort(info.pendant_trees.begin(), info.pendant_trees.end(),
            [](const PendantTree& a, const PendantTree& b) {
              return a.attach < b.attach;
            });
  return info;
}

// Induced subgraph G[V - W]; vertex order preserved.
inline Graph delete_vertices(const Graph& g, const std::vector<std::string>& w) {
  std::vector<char> drop(g.vertex_count(), 0);
  for (const auto& v : w) drop[g.require_vertex(v)] = 1;
  std::vector<std::string> kept;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!drop[v]) kept.push_back(g.label(v));
  std::vector<EdgeLabels> kept_edges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (drop[v]) continue;
    for (int u : g.neighbor_ids(v))
      if (!drop[u] && v < u) kept_edges.emplace_back(g.label(v), g.label(u));
  }
  if (kept.empty()) return Graph{};
  return Graph::from_edges(kept_edges, kept);
}

// Connected components as separate graphs, vertex order preserved within
// each; components ordered by their first vertex.
inline std::vector<Graph> split_components(const Graph& g) {
  std::vector<char> removed(g.vertex_count(), 0);
  std::vector<int> comp;
  int p = detail::label_components(g, removed, comp);
  std::vector<std::vector<std::string>> order(p);
  std::vector<std::vector<EdgeLabels>> part_edges(p);
  for (int v = 0; v < g.vertex_count(); ++v)
    order[comp[v]].push_back(g.label(v));
  for (const auto& e : g.edges())
    part_edges[comp[g.index_of(e.first)]].push_back(e);
  std::vector<Graph> out;
  out.reserve(p);
  for (int i = 0; i < p; ++i)
    out.push_back(Graph::from_edges(part_edges[i], order[i]));
  return out;
}

// Partial subgraph G - e; vertex set unchanged.
inline Graph delete_edge(const Graph& g, const std::string& u,
                         const std::string& v) {
  int a = g.require_vertex(u), b = g.require_vertex(v);
  if (!g.has_edge_ids(a, b))
    throw UnknownEdge("no edge '" + u + " " + v + "'");
  std::vector<EdgeLabels> kept_edges;
  for (int x = 0; x < g.vertex_count(); ++x)
    for (int y : g.neighbor_ids(x))
      if (x < y && !((x == a && y == b) || (x == b && y == a)))
        kept_edges.emplace_back(g.label(x), g.label(y));
  return Graph::from_edges(kept_edges, g.vertex_labels());
}

inline Graph delete_edge(const Graph& g, const EdgeLabels& e) {
  return delete_edge(g, e.first, e.second);
}

// N[v] = {v} united with N(v), sorted lexicographically.
inline std::vector<std::string> closed_neighborhood(const Graph& g,
                                                    const std::string& v) {
  std::vector<std::string> out = g.neighbors(v);
  out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace unicore
