#include <catch2/catch_amalgamated.hpp>

#include "unicore/gen.hpp"
#include "unicore/graph.hpp"

using namespace unicore;

namespace {

std::set<EdgeLabels> edge_set(const Graph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

std::set<std::string> label_set(const Graph& g) {
  auto l = g.vertex_labels();
  return {l.begin(), l.end()};
}

}  // namespace

TEST_CASE("parse builds P3 in first-appearance order") {
  Graph g = Graph::parse("a b\nb c");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.vertex_labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.neighbors("b") == std::vector<std::string>{"a", "c"});
  CHECK(g.has_edge("b", "a"));
  CHECK_FALSE(g.has_edge("a", "c"));
}

TEST_CASE("parse handles comments, blank lines and isolated vertices") {
  Graph g = Graph::parse("# header\n\nx\na b # trailing comment\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 1);
  CHECK(g.vertex_labels() == std::vector<std::string>{"x", "a", "b"});
  CHECK(g.neighbors("x").empty());
}

TEST_CASE("parse rejects malformed documents") {
  CHECK_THROWS_AS(Graph::parse("a a"), InvalidInput);
  CHECK_THROWS_AS(Graph::parse("a b\na b"), InvalidInput);
  CHECK_THROWS_AS(Graph::parse("a b\nb a"), InvalidInput);
  CHECK_THROWS_AS(Graph::parse(""), InvalidInput);
  CHECK_THROWS_AS(Graph::parse("# nothing but comments\n"), InvalidInput);
  CHECK_THROWS_AS(Graph::parse("a b c"), InvalidInput);
}

TEST_CASE("figure fixtures parse to the documented shapes") {
  Graph fig1 = fixture("fig1_G");
  CHECK(fig1.vertex_count() == 7);
  CHECK(fig1.edge_count() == 7);
  CHECK(fig1.vertex_labels() ==
        std::vector<std::string>{"a", "u", "c", "v", "y", "b", "x"});
  CHECK(classify(fig1) == GraphClass::Unicyclic);

  Graph fig2 = fixture("fig2_G");
  CHECK(fig2.vertex_count() == 10);
  CHECK(fig2.edge_count() == 10);
  CHECK(classify(fig2) == GraphClass::Unicyclic);

  Graph tx = fixture("fig2_Tx");
  CHECK(tx.vertex_count() == 5);
  CHECK(tx.edge_count() == 4);
  CHECK(classify(tx) == GraphClass::Tree);

  CHECK_THROWS_AS(fixture("nope"), UnknownFixture);
}

TEST_CASE("classification follows per-component counts") {
  CHECK(classify(Graph::parse("a b")) == GraphClass::Tree);
  CHECK(classify(Graph::parse("a")) == GraphClass::Tree);
  CHECK(classify(Graph::parse("a b\nc d")) == GraphClass::Forest);
  CHECK(classify(Graph::parse("a b\nb c\nc a\nx y")) ==
        GraphClass::UnicyclicForest);
  CHECK(classify(Graph::parse("a b\nb c\nc a\nx y\ny z\nz x")) ==
        GraphClass::UnicyclicForest);
  // K4 has m = 6 > n = 4
  CHECK(classify(Graph::parse("a b\na c\na d\nb c\nb d\nc d")) ==
        GraphClass::Unsupported);
}

TEST_CASE("find_cycle returns the canonical cycle of fig2_G") {
  Graph g = fixture("fig2_G");
  CycleInfo info = find_cycle(g);
  CHECK(info.cycle_vertices ==
        std::vector<std::string>{"c", "t", "d", "y", "w"});
  std::vector<EdgeLabels> expected{
      {"c", "t"}, {"c", "w"}, {"d", "t"}, {"d", "y"}, {"w", "y"}};
  CHECK(info.cycle_edges == expected);
  CHECK(info.n1 == std::vector<std::string>{"x"});
  REQUIRE(info.pendant_trees.size() == 1);
  const PendantTree& pt = info.pendant_trees[0];
  CHECK(pt.attach == "x");
  CHECK(pt.cycle_neighbor == "y");
  CHECK(pt.tree.vertex_count() == 5);
  CHECK(label_set(pt.tree) == std::set<std::string>{"u", "v", "x", "a", "b"});
  CHECK(edge_set(pt.tree) == edge_set(fixture("fig2_Tx")));

  // determinism
  CycleInfo again = find_cycle(g);
  CHECK(again.cycle_vertices == info.cycle_vertices);
  CHECK(again.n1 == info.n1);
}

TEST_CASE("find_cycle on a bare cycle and on a paw") {
  Graph c5 = Graph::parse("1 2\n2 3\n3 4\n4 5\n5 1");
  CycleInfo info = find_cycle(c5);
  CHECK(info.cycle_vertices == std::vector<std::string>{"1", "2", "3", "4", "5"});
  CHECK(info.n1.empty());
  CHECK(info.pendant_trees.empty());

  Graph paw = Graph::parse("a b\nb c\nc a\na d");
  CycleInfo pinfo = find_cycle(paw);
  CHECK(pinfo.cycle_vertices == std::vector<std::string>{"a", "b", "c"});
  CHECK(pinfo.n1 == std::vector<std::string>{"d"});
  REQUIRE(pinfo.pendant_trees.size() == 1);
  CHECK(pinfo.pendant_trees[0].attach == "d");
  CHECK(pinfo.pendant_trees[0].cycle_neighbor == "a");
  CHECK(pinfo.pendant_trees[0].tree.vertex_count() == 1);

  CHECK_THROWS_AS(find_cycle(Graph::parse("a b\nb c")), NotUnicyclic);
}

TEST_CASE("pendant trees partition the off-cycle vertices") {
  for (const auto& name : {"fig1_G", "fig2_G", "h1", "h2", "g1", "g2"}) {
    Graph g = fixture(name);
    CycleInfo info = find_cycle(g);
    size_t total = info.cycle_vertices.size();
    for (const auto& pt : info.pendant_trees) {
      total += pt.tree.vertex_count();
      CHECK(pt.tree.has_vertex(pt.attach));
      // the attachment has exactly one neighbor on the cycle
      std::set<std::string> cyc(info.cycle_vertices.begin(),
                                info.cycle_vertices.end());
      int cycle_neighbors = 0;
      for (const auto& w : g.neighbors(pt.attach)) cycle_neighbors += cyc.count(w);
      CHECK(cycle_neighbors == 1);
    }
    CHECK(total == static_cast<size_t>(g.vertex_count()));
    CHECK(info.cycle_edges.size() == info.cycle_vertices.size());
    CHECK(info.cycle_vertices.size() >= 3);
    CHECK(info.pendant_trees.size() == info.n1.size());
  }
}

TEST_CASE("vertex and edge deletion, closed neighborhoods") {
  Graph c4 = Graph::parse("a b\nb c\nc d\nd a");
  Graph p4 = delete_edge(c4, "a", "b");
  CHECK(classify(p4) == GraphClass::Tree);
  CHECK(p4.vertex_labels() == c4.vertex_labels());
  CHECK_THROWS_AS(delete_edge(c4, "a", "c"), UnknownEdge);
  CHECK_THROWS_AS(delete_edge(c4, "a", "zz"), UnknownVertex);

  Graph p3 = Graph::parse("a b\nb c");
  Graph rest = delete_vertices(p3, {"b"});
  CHECK(rest.vertex_count() == 2);
  CHECK(rest.edge_count() == 0);
  CHECK(classify(rest) == GraphClass::Forest);
  CHECK_THROWS_AS(delete_vertices(p3, {"q"}), UnknownVertex);

  CHECK(closed_neighborhood(fixture("fig1_G"), "u") ==
        std::vector<std::string>{"a", "b", "c", "u"});
  CHECK_THROWS_AS(closed_neighborhood(p3, "zz"), UnknownVertex);
}

TEST_CASE("serialization is a sorted fixed point") {
  Graph p3 = Graph::parse("b c\na b");
  CHECK(p3.serialize() == "# n=3 m=2\na b\nb c\n");

  for (const auto& name : fixture_names()) {
    Graph g = fixture(name);
    Graph back = Graph::parse(g.serialize());
    CHECK(label_set(back) == label_set(g));
    CHECK(edge_set(back) == edge_set(g));
    CHECK(back.serialize() == g.serialize());
  }

  Graph iso = Graph::parse("x\na b\nq");
  Graph back = Graph::parse(iso.serialize());
  CHECK(label_set(back) == label_set(iso));
  CHECK(back.serialize() == iso.serialize());
}

TEST_CASE("random graphs round-trip through the edge-list format") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = seed % 2 == 0 ? gen_tree(1 + seed % 13, seed)
                            : gen_unicyclic(3 + seed % 11, seed);
    Graph back = Graph::parse(g.serialize());
    CHECK(label_set(back) == label_set(g));
    CHECK(edge_set(back) == edge_set(g));
    CHECK(back.serialize() == g.serialize());
  }
}
