#pragma once

// One-stop report for a graph: counts, class, alpha, mu, KE status, core
// with method and certificate, and the cycle-related fields when a cycle
// exists. Renders to JSON (key-sorted, machine use) or to one field per
// line (same fields, diff-friendly).

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "unicore/core.hpp"
#include "unicore/graph.hpp"
#include "unicore/solver.hpp"

namespace unicore {

// Which core computation backs the report.
enum class CoreRoute { Structural, Deletion };

struct AnalysisReport {
  int n = 0;
  int m = 0;
  GraphClass cls = GraphClass::Unsupported;
  int alpha = 0;
  int mu = 0;
  bool koenig_egervary = false;
  std::vector<std::string> core;
  CoreMethod method = CoreMethod::VertexDeletion;
  // the cycle fields are set exactly when the graph has a cycle; for a
  // multi-component graph they concatenate (cycle) or merge (the others)
  // the per-component values
  std::optional<std::vector<std::string>> cycle;
  std::optional<std::vector<std::string>> n1;
  std::optional<std::vector<EdgeLabels>> alpha_critical_cycle_edges;
  std::optional<CoreCertificate> certificate;
};

inline AnalysisReport analyze(const Graph& g,
                              CoreRoute route = CoreRoute::Structural) {
  GraphClass c = classify(g);
  if (c == GraphClass::Unsupported)
    throw UnsupportedClass("analysis requires a forest or unicyclic forest");

  AnalysisReport rep;
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  rep.cls = c;
  rep.alpha = alpha(g);
  rep.mu = mu(g);
  rep.koenig_egervary = rep.alpha + rep.mu == rep.n;

  CoreResult cr =
      route == CoreRoute::Deletion ? core_by_deletion(g) : core(g);
  rep.core = std::move(cr.core);
  rep.method = cr.method;
  rep.certificate = std::move(cr.certificate);

  if (c == GraphClass::Unicyclic) {
    CycleInfo info = find_cycle(g);
    rep.cycle = std::move(info.cycle_vertices);
    rep.n1 = std::move(info.n1);
    rep.alpha_critical_cycle_edges = cycle_alpha_critical_edges(g);
  } else if (c == GraphClass::UnicyclicForest) {
    std::vector<std::string> walk, n1;
    std::vector<EdgeLabels> critical;
    for (const Graph& part : split_components(g)) {
      if (classify(part) != GraphClass::Unicyclic) continue;
      CycleInfo info = find_cycle(part);
      walk.insert(walk.end(), info.cycle_vertices.begin(),
                  info.cycle_vertices.end());
      n1.insert(n1.end(), info.n1.begin(), info.n1.end());
      auto ce = cycle_alpha_critical_edges(part);
      critical.insert(critical.end(), ce.begin(), ce.end());
    }
    std::sort(n1.begin(), n1.end());
    std::sort(critical.begin(), critical.end());
    rep.cycle = std::move(walk);  // component order, each walk canonical
    rep.n1 = std::move(n1);
    rep.alpha_critical_cycle_edges = std::move(critical);
  }
  return rep;
}

inline nlohmann::json to_json(const AnalysisReport& rep) {
  nlohmann::json j;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["class"] = to_string(rep.cls);
  j["alpha"] = rep.alpha;
  j["mu"] = rep.mu;
  j["koenig_egervary"] = rep.koenig_egervary;
  j["core"] = rep.core;
  j["method"] = to_string(rep.method);
  j["cycle"] = rep.cycle ? nlohmann::json(*rep.cycle) : nlohmann::json();
  j["n1"] = rep.n1 ? nlohmann::json(*rep.n1) : nlohmann::json();
  if (rep.alpha_critical_cycle_edges) {
    auto arr = nlohmann::json::array();
    for (const auto& [u, v] : *rep.alpha_critical_cycle_edges)
      arr.push_back({u, v});
    j["alpha_critical_cycle_edges"] = arr;
  } else {
    j["alpha_critical_cycle_edges"] = nullptr;
  }
  if (rep.certificate) {
    auto obj = nlohmann::json::object();
    for (const auto& [x, sub] : *rep.certificate) obj[x] = sub;
    j["certificate"] = obj;
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

// The same fields, one "key: value" line each in key order; values use the
// compact JSON encoding so the two formats never drift apart.
inline std::string to_text(const AnalysisReport& rep) {
  nlohmann::json j = to_json(rep);
  std::string out;
  for (const auto& [key, value] : j.items()) {
    out += key;
    out += ": ";
    out += value.dump();
    out += "\n";
  }
  return out;
}

}  // namespace unicore
