// Command-line front end: analyze one graph, list critical cycle edges, run
// seeded verification campaigns, generate instances.
//
// Exit codes: 0 success, 1 invalid input or flags, 2 unsupported graph
// class, 3 verification mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "unicore/analysis.hpp"
#include "unicore/core.hpp"
#include "unicore/gen.hpp"
#include "unicore/graph.hpp"
#include "unicore/oracle.hpp"
#include "unicore/solver.hpp"
#include "unicore/verify.hpp"

namespace {

unicore::Graph load_graph(const std::string& arg) {
  if (arg.rfind("fixture:", 0) == 0) return unicore::fixture(arg.substr(8));
  std::ifstream in(arg);
  if (!in) throw unicore::InvalidInput("cannot open '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return unicore::parse_graph(buf.str());
}

int do_analyze(const std::string& input, bool json,
               const std::string& method) {
  using namespace unicore;
  Graph g = load_graph(input);
  AnalysisReport rep = analyze(
      g, method == "deletion" ? CoreRoute::Deletion : CoreRoute::Structural);
  if (json)
    std::cout << to_json(rep).dump(2) << "\n";
  else
    std::cout << to_text(rep);
  if (method == "both") {
    bool agree = classify(g) == GraphClass::Unicyclic
                     ? check_structural_consistency(g).ok()
                     : core(g).core == core_by_deletion(g).core;
    if (!agree) {
      std::cerr << "error: core computation routes disagree\n";
      return 3;
    }
  }
  return 0;
}

int do_critical(const std::string& input) {
  using namespace unicore;
  Graph g = load_graph(input);
  if (classify(g) != GraphClass::Unicyclic)
    throw NotUnicyclic("critical requires a connected unicyclic graph");

  CycleInfo info = find_cycle(g);
  auto critical = cycle_alpha_critical_edges(g);
  std::set<EdgeLabels> crit(critical.begin(), critical.end());

  std::cout << "cycle:";
  for (const auto& v : info.cycle_vertices) std::cout << " " << v;
  std::cout << "\n";
  for (const auto& e : info.cycle_edges)
    std::cout << "edge " << e.first << " " << e.second << ": "
              << (crit.count(e) ? "alpha-critical" : "not-critical") << "\n";

  bool ke = is_koenig_egervary(g);
  bool all_critical = critical.size() == info.cycle_edges.size();
  std::cout << "critical_cycle_edges: " << critical.size() << "/"
            << info.cycle_edges.size() << "\n";
  std::cout << "koenig_egervary: " << (ke ? "true" : "false") << "\n";
  // all cycle edges critical exactly when alpha + mu = n - 1
  bool holds = all_critical == !ke;
  std::cout << "lemma_equivalence: " << (holds ? "holds" : "VIOLATED")
            << "\n";
  return holds ? 0 : 3;
}

int do_gen(const std::string& kind, int n, std::uint64_t seed,
           const std::string& out_path) {
  using namespace unicore;
  GenKind k = kind == "tree"     ? GenKind::Tree
              : kind == "forest" ? GenKind::Forest
                                 : GenKind::Unicyclic;
  GenSpec spec{k, n, seed};
  Graph g = gen_from_spec(spec);
  std::string text = gen_header(spec) + g.serialize();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw InvalidInput("cannot write '" + out_path + "'");
    out << text;
  }
  return 0;
}

int do_verify(const unicore::VerifyOptions& opt) {
  unicore::VerifySummary sum = unicore::run_verification(opt);
  std::cout << unicore::render_summary(sum);
  return sum.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact independence structure (alpha, mu, core) of forests and "
      "unicyclic graphs"};
  app.require_subcommand(1);

  std::string a_input, a_method = "structural";
  bool a_json = false;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "full report for one graph");
  analyze_cmd->add_option("input", a_input, "edge-list file or fixture:NAME")
      ->required();
  analyze_cmd->add_flag("--json", a_json, "machine-readable output");
  analyze_cmd
      ->add_option("--method", a_method,
                   "core route: structural, deletion, or both (cross-check)")
      ->check(CLI::IsMember({"structural", "deletion", "both"}));

  std::string c_input;
  CLI::App* critical_cmd = app.add_subcommand(
      "critical", "alpha-critical status of each cycle edge");
  critical_cmd->add_option("input", c_input, "edge-list file or fixture:NAME")
      ->required();

  std::string g_kind = "tree", g_out;
  int g_n = 10;
  std::uint64_t g_seed = 1;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--kind", g_kind, "tree, forest, or unicyclic")
      ->check(CLI::IsMember({"tree", "forest", "unicyclic"}));
  gen_cmd->add_option("--n", g_n, "vertex count")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", g_seed, "generator seed");
  gen_cmd->add_option("--out", g_out, "output file (default stdout)");

  unicore::VerifyOptions v_opt;
  std::string v_kind = "mixed";
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "seeded differential campaign over random instances");
  verify_cmd->add_option("--count", v_opt.count, "number of instances")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-n", v_opt.max_n, "largest instance size")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", v_opt.seed, "base seed; instance i uses seed+i");
  verify_cmd->add_option("--kind", v_kind, "tree, unicyclic, or mixed")
      ->check(CLI::IsMember({"tree", "unicyclic", "mixed"}));
  verify_cmd
      ->add_option("--oracle-limit", v_opt.oracle_limit,
                   "run the exhaustive oracle on instances up to this size")
      ->envname("UNICORE_ORACLE_LIMIT")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--jobs", v_opt.jobs, "parallel workers")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) return do_analyze(a_input, a_json, a_method);
    if (*critical_cmd) return do_critical(c_input);
    if (*gen_cmd) return do_gen(g_kind, g_n, g_seed, g_out);
    if (*verify_cmd) {
      v_opt.kind = v_kind == "tree"        ? unicore::VerifyKind::Tree
                   : v_kind == "unicyclic" ? unicore::VerifyKind::Unicyclic
                                           : unicore::VerifyKind::Mixed;
      if (v_opt.kind != unicore::VerifyKind::Tree && v_opt.max_n < 3)
        throw unicore::InvalidSpec(
            "unicyclic instances need --max-n of at least 3");
      return do_verify(v_opt);
    }
  } catch (const unicore::UnsupportedClass& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const unicore::NotUnicyclic& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const unicore::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
