#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "unicore/gen.hpp"
#include "unicore/graph.hpp"
#include "unicore/oracle.hpp"

using namespace unicore;

namespace {

Graph path_graph(int n) {
  std::vector<EdgeLabels> edges;
  for (int i = 1; i < n; ++i)
    edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
  std::vector<std::string> order;
  for (int i = 1; i <= n; ++i) order.push_back("v" + std::to_string(i));
  return Graph::from_edges(edges, order);
}

Graph cycle_graph(int n) {
  std::vector<EdgeLabels> edges;
  for (int i = 1; i <= n; ++i)
    edges.emplace_back("v" + std::to_string(i),
                       "v" + std::to_string(i % n + 1));
  return Graph::from_edges(edges);
}

bool independent_in(const Graph& g, const std::vector<std::string>& set) {
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j)
      if (g.has_edge(set[i], set[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("oracle on tiny closed forms") {
  auto p3 = oracle_analyze(path_graph(3));
  CHECK(p3.alpha == 2);
  CHECK(p3.mu == 1);
  CHECK(p3.num_mis == 1);
  CHECK(p3.core == std::vector<std::string>{"v1", "v3"});

  auto p4 = oracle_analyze(path_graph(4));
  CHECK(p4.alpha == 2);
  CHECK(p4.mu == 2);
  CHECK(p4.num_mis == 3);
  CHECK(p4.core.empty());

  auto c5 = oracle_analyze(cycle_graph(5));
  CHECK(c5.alpha == 2);
  CHECK(c5.mu == 2);
  CHECK(c5.num_mis == 5);
  CHECK(c5.core.empty());

  auto c6 = oracle_analyze(cycle_graph(6));
  CHECK(c6.alpha == 3);
  CHECK(c6.mu == 3);
  CHECK(c6.num_mis == 2);
  CHECK(c6.core.empty());

  auto one = oracle_analyze(parse_graph("z"));
  CHECK(one.alpha == 1);
  CHECK(one.mu == 0);
  CHECK(one.num_mis == 1);
  CHECK(one.core == std::vector<std::string>{"z"});
  CHECK(one.omega_sample == std::vector<std::vector<std::string>>{{"z"}});
}

TEST_CASE("oracle handles graphs outside the solver's classes") {
  auto k4 = oracle_analyze(parse_graph("a b\na c\na d\nb c\nb d\nc d"));
  CHECK(k4.alpha == 1);
  CHECK(k4.mu == 2);
  CHECK(k4.num_mis == 4);
  CHECK(k4.core.empty());
}

TEST_CASE("oracle on the bundled fixtures") {
  auto fig1 = oracle_analyze(fixture("fig1_G"));
  CHECK(fig1.alpha == 4);
  CHECK(fig1.mu == 3);
  CHECK(fig1.core == std::vector<std::string>{"a", "b", "c"});

  auto fig2 = oracle_analyze(fixture("fig2_G"));
  CHECK(fig2.alpha == 5);
  CHECK(fig2.mu == 4);
  CHECK(fig2.core == std::vector<std::string>{"a", "b"});

  auto tx = oracle_analyze(fixture("fig2_Tx"));
  CHECK(tx.alpha == 3);
  CHECK(tx.mu == 2);
  CHECK(tx.num_mis == 2);
  CHECK(tx.core == std::vector<std::string>{"a", "b"});
}

TEST_CASE("oracle size limits") {
  CHECK_THROWS_AS(oracle_analyze(path_graph(21)), TooLarge);
  auto p21 = oracle_analyze(path_graph(21), 21);
  CHECK(p21.alpha == 11);
  CHECK(p21.mu == 10);
  // the bitmask ceiling holds regardless of the requested limit
  CHECK_THROWS_AS(oracle_analyze(path_graph(65), 100), TooLarge);
}

TEST_CASE("omega sampling is capped and sorted") {
  // seven disjoint edges: two choices per edge, 128 maximum sets
  std::vector<EdgeLabels> edges;
  for (int i = 0; i < 7; ++i) {
    std::string base = "p" + std::to_string(i);
    edges.emplace_back(base + "a", base + "b");
  }
  Graph g = Graph::from_edges(edges);
  auto rep = oracle_analyze(g, 20, 64);
  CHECK(rep.alpha == 7);
  CHECK(rep.mu == 7);
  CHECK(rep.num_mis == 128);
  CHECK(rep.core.empty());
  CHECK(rep.omega_sample.size() == 64);
  CHECK(std::is_sorted(rep.omega_sample.begin(), rep.omega_sample.end()));

  auto small = oracle_analyze(g, 20, 4);
  CHECK(small.num_mis == 128);
  CHECK(small.omega_sample.size() == 4);
}

TEST_CASE("oracle invariants over random instances") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenSpec spec;
    spec.kind = seed % 3 == 0   ? GenKind::Tree
                : seed % 3 == 1 ? GenKind::Unicyclic
                                : GenKind::Forest;
    spec.n = 3 + static_cast<int>(seed % 10);
    spec.seed = seed;
    Graph g = gen_from_spec(spec);
    auto rep = oracle_analyze(g, 14);

    CAPTURE(seed, g.serialize());
    REQUIRE(rep.num_mis >= 1);
    CHECK((rep.num_mis == 1) ==
          (static_cast<int>(rep.core.size()) == rep.alpha));
    CHECK(rep.alpha + rep.mu <= g.vertex_count());
    REQUIRE(!rep.omega_sample.empty());
    for (const auto& s : rep.omega_sample) {
      CHECK(static_cast<int>(s.size()) == rep.alpha);
      CHECK(independent_in(g, s));
      CHECK(std::includes(s.begin(), s.end(), rep.core.begin(),
                          rep.core.end()));
    }
  }
}
