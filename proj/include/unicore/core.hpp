#pragma once

// core(G): the vertices common to every maximum independent set. Three
// routes compute it: the definition executed as per-vertex alpha probes, the
// matching characterization valid on forests (v is in the core iff deleting
// v keeps mu unchanged), and for non-Koenig-Egervary unicyclic graphs the
// pendant-tree decomposition, which assembles the core from the pendant
// trees hanging off the cycle and yields a checkable certificate. KE
// unicyclic graphs have no such decomposition, so they fall back to the
// definitional route.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "unicore/graph.hpp"
#include "unicore/solver.hpp"

namespace unicore {

enum class CoreMethod {
  VertexDeletion,
  TreeMatching,
  StructuralDecomposition,
  KEFallback,
};

inline std::string to_string(CoreMethod m) {
  switch (m) {
    case CoreMethod::VertexDeletion: return "VertexDeletion";
    case CoreMethod::TreeMatching: return "TreeMatching";
    case CoreMethod::StructuralDecomposition: return "StructuralDecomposition";
    case CoreMethod::KEFallback: return "KEFallback";
  }
  return "?";
}

// attach vertex of a pendant tree -> core of that tree
using CoreCertificate = std::map<std::string, std::vector<std::string>>;

struct CoreResult {
  std::vector<std::string> core;  // sorted
  CoreMethod method = CoreMethod::VertexDeletion;
  // present exactly when method is StructuralDecomposition; its values
  // union to `core` and its keys are the cycle-adjacent tree vertices
  std::optional<CoreCertificate> certificate;
};

// v lies in every maximum independent set iff alpha(g - v) = alpha(g) - 1.
inline CoreResult core_by_deletion(const Graph& g) {
  detail::require_supported(g, "core_by_deletion");
  detail::Workspace ws(g.vertex_count());
  int base = detail::alpha_masked(g, ws);
  CoreResult out;
  out.method = CoreMethod::VertexDeletion;
  for (int v = 0; v < g.vertex_count(); ++v) {
    ws.removed[v] = 1;
    if (detail::alpha_masked(g, ws) == base - 1) out.core.push_back(g.label(v));
    ws.removed[v] = 0;
  }
  std::sort(out.core.begin(), out.core.end());
  return out;
}

// On forests (bipartite, hence KE) v is in the core iff some maximum
// matching misses v, iff mu(t - v) = mu(t).
inline CoreResult core_tree_by_matching(const Graph& t) {
  GraphClass c = classify(t);
  if (c != GraphClass::Tree && c != GraphClass::Forest)
    throw UnsupportedClass("core_tree_by_matching requires a forest");
  detail::Workspace ws(t.vertex_count());
  int base = detail::mu_masked(t, ws);
  CoreResult out;
  out.method = CoreMethod::TreeMatching;
  for (int v = 0; v < t.vertex_count(); ++v) {
    ws.removed[v] = 1;
    if (detail::mu_masked(t, ws) == base) out.core.push_back(t.label(v));
    ws.removed[v] = 0;
  }
  std::sort(out.core.begin(), out.core.end());
  return out;
}

// Non-KE unicyclic graphs: the core is exactly the union of the cores of
// the pendant trees hanging off the cycle, one per cycle-adjacent tree
// vertex x (an empty union when no tree touches the cycle). KE unicyclic
// graphs admit no such formula and use the definitional route.
inline CoreResult core_unicyclic(const Graph& g) {
  if (classify(g) != GraphClass::Unicyclic)
    throw NotUnicyclic("core_unicyclic requires a connected unicyclic graph");
  if (is_koenig_egervary(g)) {
    CoreResult out = core_by_deletion(g);
    out.method = CoreMethod::KEFallback;
    return out;
  }
  CycleInfo info = find_cycle(g);
  CoreResult out;
  out.method = CoreMethod::StructuralDecomposition;
  CoreCertificate cert;
  for (const PendantTree& pt : info.pendant_trees) {
    CoreResult sub = core_tree_by_matching(pt.tree);
    out.core.insert(out.core.end(), sub.core.begin(), sub.core.end());
    cert.emplace(pt.attach, std::move(sub.core));
  }
  // pendant trees are vertex-disjoint, so the union needs no dedup
  std::sort(out.core.begin(), out.core.end());
  out.certificate = std::move(cert);
  return out;
}

// Dispatch over the supported classes. Components carry independent maximum
// independent sets, so the core of a disconnected graph is the union of the
// component cores. A multi-component result reports the strongest method
// used (KEFallback over StructuralDecomposition over TreeMatching) and
// carries no certificate.
inline CoreResult core(const Graph& g) {
  switch (classify(g)) {
    case GraphClass::Tree:
    case GraphClass::Forest:
      return core_tree_by_matching(g);
    case GraphClass::Unicyclic:
      return core_unicyclic(g);
    case GraphClass::UnicyclicForest: {
      CoreResult out;
      out.method = CoreMethod::TreeMatching;
      for (const Graph& part : split_components(g)) {
        CoreResult sub = classify(part) == GraphClass::Unicyclic
                             ? core_unicyclic(part)
                             : core_tree_by_matching(part);
        out.core.insert(out.core.end(), sub.core.begin(), sub.core.end());
        if (sub.method == CoreMethod::KEFallback)
          out.method = CoreMethod::KEFallback;
        else if (sub.method == CoreMethod::StructuralDecomposition &&
                 out.method != CoreMethod::KEFallback)
          out.method = CoreMethod::StructuralDecomposition;
      }
      std::sort(out.core.begin(), out.core.end());
      return out;
    }
    default:
      throw UnsupportedClass("core requires a forest or unicyclic forest");
  }
}

// Differential report for one unicyclic graph: the structural (or fallback)
// route against the definitional route, plus every per-instance structure
// theorem. union_formula_agrees is telemetry only: it must hold on non-KE
// inputs but carries no guarantee on KE ones, and ok() ignores it.
struct ConsistencyReport {
  bool koenig_egervary = false;
  CoreMethod method = CoreMethod::VertexDeletion;
  std::vector<std::string> core;
  bool routes_agree = false;
  bool cycle_untouched = true;           // non-KE: N[core] misses the cycle
  bool critical_edges_avoid_core = true; // no alpha-critical edge meets N[core]
  bool pendant_core_signals_ke = true;   // x in core(T_x) for some x => KE
  bool matching_covers_core_boundary = true;  // KE: N(core) matched into core
  bool rest_has_perfect_matching = true;      // KE: G - N[core] perfect
  bool union_formula_agrees = false;

  bool ok() const {
    return routes_agree && cycle_untouched && critical_edges_avoid_core &&
           pendant_core_signals_ke && matching_covers_core_boundary &&
           rest_has_perfect_matching;
  }
};

inline ConsistencyReport check_structural_consistency(const Graph& g) {
  if (classify(g) != GraphClass::Unicyclic)
    throw NotUnicyclic(
        "check_structural_consistency requires a connected unicyclic graph");

  ConsistencyReport rep;
  rep.koenig_egervary = is_koenig_egervary(g);

  CoreResult primary = core_unicyclic(g);
  CoreResult probe = core_by_deletion(g);
  rep.method = primary.method;
  rep.core = primary.core;
  rep.routes_agree = primary.core == probe.core;

  std::set<std::string> core_set(rep.core.begin(), rep.core.end());
  std::set<std::string> closed = core_set;  // N[core]
  for (const auto& v : rep.core)
    for (const auto& w : g.neighbors(v)) closed.insert(w);

  CycleInfo info = find_cycle(g);
  if (!rep.koenig_egervary)
    for (const auto& v : info.cycle_vertices)
      if (closed.count(v)) rep.cycle_untouched = false;

  detail::Workspace ws(g.vertex_count());
  int base = detail::alpha_masked(g, ws);
  for (const auto& [u, v] : g.edges()) {
    detail::EdgeSkip skip;
    skip.add(g.index_of(u), g.index_of(v));
    if (detail::alpha_masked(g, ws, skip) > base &&
        (closed.count(u) || closed.count(v)))
      rep.critical_edges_avoid_core = false;
  }

  bool attach_in_own_core = false;
  std::vector<std::string> pendant_union;
  for (const PendantTree& pt : info.pendant_trees) {
    CoreResult sub = core_tree_by_matching(pt.tree);
    if (std::binary_search(sub.core.begin(), sub.core.end(), pt.attach))
      attach_in_own_core = true;
    pendant_union.insert(pendant_union.end(), sub.core.begin(),
                         sub.core.end());
  }
  std::sort(pendant_union.begin(), pendant_union.end());
  rep.pendant_core_signals_ke = !attach_in_own_core || rep.koenig_egervary;
  rep.union_formula_agrees = pendant_union == probe.core;

  if (rep.koenig_egervary) {
    MatchingResult m = max_matching(g);
    std::map<std::string, std::string> mate;
    for (const auto& [a, b] : m.edges) {
      mate[a] = b;
      mate[b] = a;
    }
    for (const auto& v : closed) {
      if (core_set.count(v)) continue;
      auto it = mate.find(v);
      if (it == mate.end() || !core_set.count(it->second))
        rep.matching_covers_core_boundary = false;
    }
    Graph rest = delete_vertices(
        g, std::vector<std::string>(closed.begin(), closed.end()));
    rep.rest_has_perfect_matching = 2 * mu(rest) == rest.vertex_count();
  }
  return rep;
}

}  // namespace unicore
