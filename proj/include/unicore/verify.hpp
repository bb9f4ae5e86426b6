#pragma once

// Seeded differential campaign: generate random instances, execute every
// structure theorem as a named check, compare against the exhaustive oracle
// when the instance is small enough, and aggregate the verdicts. Instance i
// derives everything from seed + i, so any failure reproduces in isolation
// with --count 1. Workers may run instances in parallel; results are stored
// by index and aggregated in index order, so the summary is byte-identical
// to a sequential run.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "unicore/core.hpp"
#include "unicore/gen.hpp"
#include "unicore/graph.hpp"
#include "unicore/oracle.hpp"
#include "unicore/solver.hpp"

namespace unicore {

enum class VerifyKind { Tree, Unicyclic, Mixed };

inline const char* to_string(VerifyKind k) {
  switch (k) {
    case VerifyKind::Tree: return "tree";
    case VerifyKind::Unicyclic: return "unicyclic";
    case VerifyKind::Mixed: return "mixed";
  }
  return "?";
}

struct VerifyOptions {
  VerifyKind kind = VerifyKind::Mixed;
  int count = 100;
  int max_n = 14;
  std::uint64_t seed = 1;
  int oracle_limit = 20;
  int jobs = 1;
};

namespace verify_detail {

enum Check : int {
  kClassMatchesKind,
  kSerializationRoundtrip,
  kAlphaMuComponentBounds,
  kMatchingValidAndMaximum,
  kCoreRoutesAgree,
  kCriticalEdgesAvoidCore,
  kKeMatchingIntoCore,
  kKeRestPerfectMatching,
  kUnicyclicAlphaMuDeficit,
  kAllCycleEdgesCriticalIffDeficit,
  kCycleHasNonMuCriticalEdge,
  kAttachInPendantCoreImpliesKe,
  kNonKeCoreAvoidsCycle,
  kNonKeUnionFormulaEquality,
  kOracleAlpha,
  kOracleMu,
  kOracleCore,
  kNumChecks,
};

constexpr const char* kCheckNames[kNumChecks] = {
    "class_matches_kind",
    "serialization_roundtrip",
    "alpha_mu_component_bounds",
    "matching_valid_and_maximum",
    "core_routes_agree",
    "critical_edges_avoid_core",
    "ke_matching_into_core",
    "ke_rest_perfect_matching",
    "unicyclic_alpha_mu_deficit",
    "all_cycle_edges_critical_iff_deficit",
    "cycle_has_non_mu_critical_edge",
    "attach_in_pendant_core_implies_ke",
    "non_ke_core_avoids_cycle",
    "non_ke_union_formula_equality",
    "oracle_alpha",
    "oracle_mu",
    "oracle_core",
};

struct InstanceOutcome {
  GenSpec spec{GenKind::Tree, 0, 0};
  std::array<signed char, kNumChecks> verdict{};  // -1 n/a, 0 fail, 1 pass
  std::string error;       // nonempty when the instance threw
  std::string serialized;  // filled only for failing instances

  bool failed() const {
    if (!error.empty()) return true;
    for (signed char v : verdict)
      if (v == 0) return true;
    return false;
  }
  int first_failed_check() const {
    for (int c = 0; c < kNumChecks; ++c)
      if (verdict[c] == 0) return c;
    return -1;
  }
};

inline InstanceOutcome run_instance(const VerifyOptions& opt, int index) {
  InstanceOutcome out;
  out.verdict.fill(-1);

  std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(index));
  GenKind kind;
  switch (opt.kind) {
    case VerifyKind::Tree: kind = GenKind::Tree; break;
    case VerifyKind::Unicyclic: kind = GenKind::Unicyclic; break;
    default:
      switch (uniform_below(rng, 3)) {
        case 0: kind = GenKind::Tree; break;
        case 1: kind = GenKind::Unicyclic; break;
        default: kind = GenKind::Forest; break;
      }
  }
  int lo = kind == GenKind::Unicyclic ? 3 : 1;
  int n = lo + static_cast<int>(
                   uniform_below(rng, static_cast<std::uint64_t>(
                                          std::max(1, opt.max_n - lo + 1))));
  out.spec = GenSpec{kind, n, rng()};

  std::string serialized;
  try {
    Graph g = gen_from_spec(out.spec);
    serialized = g.serialize();
    auto set = [&](Check c, bool pass) {
      out.verdict[c] = pass ? 1 : 0;
    };

    GraphClass cls = classify(g);
    bool class_ok = kind == GenKind::Tree ? cls == GraphClass::Tree
                    : kind == GenKind::Unicyclic
                        ? cls == GraphClass::Unicyclic
                        : cls == GraphClass::Tree || cls == GraphClass::Forest;
    set(kClassMatchesKind, class_ok);
    set(kSerializationRoundtrip,
        Graph::parse(serialized).serialize() == serialized);

    int nv = g.vertex_count();
    int a = alpha(g);
    int m = mu(g);
    int p = 0;
    {
      std::vector<char> removed(nv, 0);
      std::vector<int> comp;
      p = detail::label_components(g, removed, comp);
    }
    set(kAlphaMuComponentBounds, nv - p <= a + m && a + m <= nv);

    MatchingResult mm = max_matching(g);
    bool matching_ok = static_cast<int>(mm.edges.size()) == m &&
                       mm.saturated.size() == 2 * mm.edges.size();
    {
      std::set<std::string> touched;
      for (const auto& [u, v] : mm.edges) {
        if (!g.has_edge(u, v) || !touched.insert(u).second ||
            !touched.insert(v).second)
          matching_ok = false;
      }
      if (std::vector<std::string>(touched.begin(), touched.end()) !=
          mm.saturated)
        matching_ok = false;
    }
    set(kMatchingValidAndMaximum, matching_ok);

    CoreResult structural = core(g);
    CoreResult probe = core_by_deletion(g);
    set(kCoreRoutesAgree, structural.core == probe.core);

    std::set<std::string> core_set(structural.core.begin(),
                                   structural.core.end());
    std::set<std::string> closed = core_set;  // N[core]
    for (const auto& v : structural.core)
      for (const auto& w : g.neighbors(v)) closed.insert(w);

    {
      detail::Workspace ws(nv);
      bool avoid = true;
      for (const auto& [u, v] : g.edges()) {
        detail::EdgeSkip skip;
        skip.add(g.index_of(u), g.index_of(v));
        if (detail::alpha_masked(g, ws, skip) > a &&
            (closed.count(u) || closed.count(v)))
          avoid = false;
      }
      set(kCriticalEdgesAvoidCore, avoid);
    }

    bool ke = a + m == nv;
    if (ke) {
      std::map<std::string, std::string> mate;
      for (const auto& [x, y] : mm.edges) {
        mate[x] = y;
        mate[y] = x;
      }
      bool into_core = true;
      for (const auto& v : closed) {
        if (core_set.count(v)) continue;
        auto it = mate.find(v);
        if (it == mate.end() || !core_set.count(it->second)) into_core = false;
      }
      set(kKeMatchingIntoCore, into_core);

      Graph rest = delete_vertices(
          g, std::vector<std::string>(closed.begin(), closed.end()));
      set(kKeRestPerfectMatching, 2 * mu(rest) == rest.vertex_count());
    }

    if (cls == GraphClass::Unicyclic) {
      set(kUnicyclicAlphaMuDeficit, a + m >= nv - 1 && a + m <= nv);

      CycleInfo info = find_cycle(g);
      auto critical = cycle_alpha_critical_edges(g);
      set(kAllCycleEdgesCriticalIffDeficit,
          (critical.size() == info.cycle_edges.size()) == (a + m == nv - 1));

      {
        detail::Workspace ws(nv);
        bool found = false;
        for (const auto& [u, v] : info.cycle_edges) {
          detail::EdgeSkip skip;
          skip.add(g.index_of(u), g.index_of(v));
          if (detail::mu_masked(g, ws, skip) == m) {
            found = true;
            break;
          }
        }
        set(kCycleHasNonMuCriticalEdge, found);
      }

      bool attach_signal = false;
      std::vector<std::string> pendant_union;
      for (const PendantTree& pt : info.pendant_trees) {
        CoreResult sub = core_tree_by_matching(pt.tree);
        if (std::binary_search(sub.core.begin(), sub.core.end(), pt.attach))
          attach_signal = true;
        pendant_union.insert(pendant_union.end(), sub.core.begin(),
                             sub.core.end());
      }
      std::sort(pendant_union.begin(), pendant_union.end());
      set(kAttachInPendantCoreImpliesKe, !attach_signal || ke);

      if (!ke) {
        bool untouched = true;
        for (const auto& v : info.cycle_vertices)
          if (closed.count(v)) untouched = false;
        set(kNonKeCoreAvoidsCycle, untouched);
        set(kNonKeUnionFormulaEquality, pendant_union == probe.core);
      }
    }

    if (nv <= opt.oracle_limit && nv <= 64) {
      OracleReport orc = oracle_analyze(g, std::min(opt.oracle_limit, 64));
      set(kOracleAlpha, a == orc.alpha);
      set(kOracleMu, m == orc.mu);
      set(kOracleCore, structural.core == orc.core);
    }
  } catch (const std::exception& ex) {
    out.error = ex.what();
  }

  if (out.failed()) out.serialized = gen_header(out.spec) + serialized;
  return out;
}

}  // namespace verify_detail

struct VerifySummary {
  VerifyOptions options;
  int failures = 0;
  int first_failure = -1;  // instance index
  // pass / applicable, indexed like verify_detail::kCheckNames
  std::array<std::pair<int, int>, verify_detail::kNumChecks> counters{};
  verify_detail::InstanceOutcome first_outcome;

  bool ok() const { return failures == 0; }
};

inline VerifySummary run_verification(const VerifyOptions& opt) {
  using verify_detail::InstanceOutcome;

  std::vector<InstanceOutcome> outcomes(std::max(0, opt.count));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= opt.count) return;
      outcomes[i] = verify_detail::run_instance(opt, i);
    }
  };
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  VerifySummary sum;
  sum.options = opt;
  for (int i = 0; i < opt.count; ++i) {
    const InstanceOutcome& out = outcomes[i];
    for (int c = 0; c < verify_detail::kNumChecks; ++c) {
      if (out.verdict[c] < 0) continue;
      sum.counters[c].second += 1;
      sum.counters[c].first += out.verdict[c];
    }
    if (out.failed()) {
      sum.failures += 1;
      if (sum.first_failure < 0) {
        sum.first_failure = i;
        sum.first_outcome = out;
      }
    }
  }
  return sum;
}

// Stable text rendering: options echo, one line per check, failure details
// for the lowest failing index. Free of timing and thread-count information
// so repeated runs compare byte-for-byte.
inline std::string render_summary(const VerifySummary& sum) {
  std::ostringstream out;
  const VerifyOptions& opt = sum.options;
  out << "kind: " << to_string(opt.kind) << "\n";
  out << "count: " << opt.count << "\n";
  out << "max_n: " << opt.max_n << "\n";
  out << "seed: " << opt.seed << "\n";
  out << "oracle_limit: " << opt.oracle_limit << "\n";
  for (int c = 0; c < verify_detail::kNumChecks; ++c)
    out << "check " << verify_detail::kCheckNames[c] << ": "
        << sum.counters[c].first << "/" << sum.counters[c].second << "\n";
  out << "failures: " << sum.failures << "\n";
  if (sum.failures > 0) {
    const auto& fo = sum.first_outcome;
    out << "first_failure_index: " << sum.first_failure << "\n";
    out << "first_failure_seed: "
        << opt.seed + static_cast<std::uint64_t>(sum.first_failure) << "\n";
    if (!fo.error.empty()) {
      out << "first_failure_error: " << fo.error << "\n";
    } else if (int c = fo.first_failed_check(); c >= 0) {
      out << "first_failure_check: " << verify_detail::kCheckNames[c] << "\n";
    }
    out << fo.serialized;
  }
  out << "result: " << (sum.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace unicore
