#pragma once

// Deterministic random generators for trees, forests and unicyclic graphs,
// plus pinned fixture graphs used throughout the test suites.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "unicore/graph.hpp"

namespace unicore {

enum class GenKind { Tree, Forest, Unicyclic };

struct GenSpec {
  GenKind kind;
  int n;
  std::uint64_t seed;
};

// mt19937_64 is fully specified by the standard, and the rejection sampler
// below replaces the implementation-defined std::uniform_int_distribution,
// so a (kind, n, seed) triple maps to the same graph on every platform.
inline constexpr const char* kRngName = "mt19937_64-r1";

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

namespace gen_detail {

inline std::string label_for(int i) { return "v" + std::to_string(i + 1); }

// Uniform labeled tree on ids 0..n-1: decode a uniformly drawn Prüfer code
// with the linear smallest-leaf pointer scan.
inline std::vector<std::pair<int, int>> random_tree_edges(int n,
                                                          std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  if (n <= 1) return edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
    return edges;
  }
  std::vector<int> code(n - 2);
  for (auto& c : code) c = static_cast<int>(uniform_below(rng, n));
  std::vector<int> degree(n, 1);
  for (int c : code) degree[c] += 1;
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int c : code) {
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

inline void append_component(GenKind kind, int n, int label_start,
                             std::mt19937_64& rng,
                             std::vector<EdgeLabels>& edges,
                             std::vector<std::string>& order) {
  for (int i = 0; i < n; ++i) order.push_back(label_for(label_start + i));
  auto tree = random_tree_edges(n, rng);
  if (kind == GenKind::Unicyclic) {
    // One uniformly chosen non-edge closes the unique cycle.
    std::set<std::pair<int, int>> have;
    for (auto [a, b] : tree) have.insert({std::min(a, b), std::max(a, b)});
    int u, v;
    do {
      u = static_cast<int>(uniform_below(rng, n));
      v = static_cast<int>(uniform_below(rng, n));
    } while (u == v || have.count({std::min(u, v), std::max(u, v)}));
    tree.emplace_back(u, v);
  }
  for (auto [a, b] : tree)
    edges.emplace_back(label_for(label_start + a), label_for(label_start + b));
}

}  // namespace gen_detail

inline Graph gen_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidSpec("tree generation needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<EdgeLabels> edges;
  std::vector<std::string> order;
  gen_detail::append_component(GenKind::Tree, n, 0, rng, edges, order);
  return Graph::from_edges(edges, order);
}

inline Graph gen_unicyclic(int n, std::uint64_t seed) {
  if (n < 3) throw InvalidSpec("unicyclic generation needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<EdgeLabels> edges;
  std::vector<std::string> order;
  gen_detail::append_component(GenKind::Unicyclic, n, 0, rng, edges, order);
  return Graph::from_edges(edges, order);
}

// Random composition of n into tree components. Not uniform over forests;
// documented as a fuzzing source, not a sampler.
inline Graph gen_forest(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidSpec("forest generation needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<EdgeLabels> edges;
  std::vector<std::string> order;
  int placed = 0;
  while (placed < n) {
    int part = 1 + static_cast<int>(uniform_below(rng, n - placed));
    gen_detail::append_component(GenKind::Tree, part, placed, rng, edges, order);
    placed += part;
  }
  return Graph::from_edges(edges, order);
}

inline Graph gen_from_spec(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::Tree: return gen_tree(spec.n, spec.seed);
    case GenKind::Forest: return gen_forest(spec.n, spec.seed);
    case GenKind::Unicyclic: return gen_unicyclic(spec.n, spec.seed);
  }
  throw InvalidSpec("unknown generation kind");
}

inline const char* to_string(GenKind k) {
  switch (k) {
    case GenKind::Tree: return "tree";
    case GenKind::Forest: return "forest";
    case GenKind::Unicyclic: return "unicyclic";
  }
  return "?";
}

inline std::string gen_header(const GenSpec& spec) {
  std::ostringstream out;
  out << "# kind=" << to_string(spec.kind) << " n=" << spec.n
      << " seed=" << spec.seed << " rng=" << kRngName << "\n";
  return out.str();
}

// Pinned graphs. fig1_G / fig2_G / fig2_Tx carry the exact published edge
// lists; h1/h2/g1/g2 are transcriptions validated by the test suite before
// anything relies on them.
inline Graph fixture(const std::string& name) {
  using E = std::vector<EdgeLabels>;
  if (name == "fig1_G")
    return Graph::from_edges(E{{"a", "u"},
                               {"u", "c"},
                               {"c", "v"},
                               {"v", "y"},
                               {"u", "b"},
                               {"v", "x"},
                               {"x", "y"}});
  if (name == "fig2_G")
    return Graph::from_edges(E{{"u", "v"},
                               {"v", "x"},
                               {"x", "y"},
                               {"a", "x"},
                               {"b", "x"},
                               {"y", "w"},
                               {"w", "c"},
                               {"c", "t"},
                               {"t", "d"},
                               {"d", "y"}});
  if (name == "fig2_Tx")
    return Graph::from_edges(E{{"u", "v"}, {"v", "x"}, {"a", "x"}, {"b", "x"}});
  if (name == "h1")  // bipartite unicyclic; core {a,b}; pendant-core union agrees
    return Graph::from_edges(E{{"a", "c"},
                               {"c", "e"},
                               {"e", "f"},
                               {"f", "d"},
                               {"c", "b"},
                               {"e", "g"},
                               {"g", "h"},
                               {"f", "h"},
                               {"d", "i"}});
  if (name == "h2")  // bipartite unicyclic; core {t,x,y,z}; union disagrees
    return Graph::from_edges(E{{"x", "u"},
                               {"u", "t"},
                               {"y", "u"},
                               {"u", "z"},
                               {"z", "w"},
                               {"w", "q"},
                               {"t", "w"},
                               {"p", "q"}});
  if (name == "g1")  // non-bipartite KE unicyclic; core {a,b,c}; union agrees
    return Graph::from_edges(E{{"a", "d"},
                               {"d", "e"},
                               {"e", "f"},
                               {"f", "g"},
                               {"g", "c"},
                               {"d", "b"},
                               {"e", "h"},
                               {"h", "i"},
                               {"i", "g"}});
  if (name == "g2")  // non-bipartite KE unicyclic; core {t,y,z}; union disagrees
    return Graph::from_edges(E{{"t", "u"},
                               {"u", "y"},
                               {"y", "v"},
                               {"v", "z"},
                               {"u", "w"},
                               {"w", "s"},
                               {"v", "s"}});
  throw UnknownFixture("unknown fixture '" + name + "'");
}

inline std::vector<std::string> fixture_names() {
  return {"fig1_G", "fig2_G", "fig2_Tx", "h1", "h2", "g1", "g2"};
}

}  // namespace unicore
