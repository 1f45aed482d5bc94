#include <doctest.h>

#include <numeric>
#include <sstream>

#include "test_util.hpp"
#include "vcne/error.hpp"
#include "vcne/graph.hpp"

using namespace vcne;

namespace {

LoadedGraph parse(const std::string& text, bool undirected = true) {
  std::istringstream in(text);
  return parse_edge_list(in, undirected);
}

}  // namespace

TEST_CASE("edge list: path graph") {
  auto g = parse("0 1\n1 2\n");
  CHECK(g.graph.num_vertices() == 3);
  CHECK(g.graph.num_edges() == 4);
  CHECK(g.graph.degree(0) == 1);
  CHECK(g.graph.degree(1) == 2);
  CHECK(g.graph.degree(2) == 1);
}

TEST_CASE("edge list: explicit weight applies to both directions") {
  auto g = parse("0 1 2.5\n");
  REQUIRE(g.graph.num_edges() == 2);
  for (const Edge& e : g.graph.edges()) CHECK(e.weight == 2.5);
}

TEST_CASE("edge list: self-loops are skipped and counted") {
  auto g = parse("0 0\n0 1\n");
  CHECK(g.graph.num_undirected_edges() == 1);
  CHECK(g.skipped_self_loops == 1);
  CHECK(g.graph.num_edges() == 2);
}

TEST_CASE("edge list: comments, blank lines and sparse ids") {
  auto g = parse("# header\n\n100 7\n  # indented comment\n7 3\n");
  CHECK(g.graph.num_vertices() == 3);
  CHECK(g.remap.external(0) == 100);
  CHECK(g.remap.external(1) == 7);
  CHECK(g.remap.external(2) == 3);
  CHECK(*g.remap.find(3) == 2);
  CHECK_FALSE(g.remap.find(5).has_value());
}

TEST_CASE("edge list: duplicates keep the last weight") {
  auto g = parse("0 1 2\n1 0 3\n");
  CHECK(g.duplicate_edges == 1);
  REQUIRE(g.graph.num_edges() == 2);
  for (const Edge& e : g.graph.edges()) CHECK(e.weight == 3.0);

  auto d = parse("0 1 2\n1 0 3\n", false);
  CHECK(d.duplicate_edges == 0);
  CHECK(d.graph.num_edges() == 2);
}

TEST_CASE("edge list: directed input keeps one direction") {
  auto g = parse("0 1\n1 2\n", false);
  CHECK(g.graph.num_edges() == 2);
  CHECK(g.graph.degree(1) == 2);
}

TEST_CASE("edge list: malformed lines report the line number") {
  auto line_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("0 1\nx 2\n") == 2);
  CHECK(line_of("0 1\n0\n") == 2);
  CHECK(line_of("0 1 1.0 extra\n") == 1);
  CHECK(line_of("0 1 abc\n") == 1);
  CHECK_THROWS_AS(parse("0 1\n1 2 0\n"), ValidationError);
  CHECK_THROWS_AS(parse("0 1 nan\n"), Error);
}

TEST_CASE("load_edge_list: missing file") {
  CHECK_THROWS_AS(load_edge_list("/nonexistent/graph.txt"), IoError);
}

TEST_CASE("edge list round trip through a file") {
  testutil::TempDir dir;
  auto g = parse("10 20\n20 30 0.5\n30 10 4\n");
  write_edge_list(dir / "g.txt", g.graph, g.remap);
  auto back = load_edge_list(dir / "g.txt");
  CHECK(back.graph.num_vertices() == 3);
  CHECK(testutil::sorted_edges(back.graph.edges()) == testutil::sorted_edges(g.graph.edges()));
  CHECK(std::vector<ExternalId>(back.remap.externals().begin(), back.remap.externals().end()) ==
        std::vector<ExternalId>{10, 20, 30});
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(2, {{0, 2, 1.0}}), ValidationError);
  CHECK_THROWS_AS(Graph(2, {{1, 1, 1.0}}), ValidationError);
  CHECK_THROWS_AS(Graph(2, {{0, 1, 0.0}}), ValidationError);
  CHECK_THROWS_AS(Graph(2, {{0, 1, 1.0}}, 0), ValidationError);
  Graph g(2, {{0, 1, 1.0}});
  CHECK_THROWS_AS(g.degree(2), ValidationError);
  CHECK_THROWS_AS(g.block(1), ValidationError);
}

TEST_CASE("degree examples") {
  Graph path(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}});
  CHECK(path.degree(1) == 2);
  Graph isolated(3, {{0, 1, 1}, {1, 0, 1}});
  CHECK(isolated.degree(2) == 0);
  CHECK(isolated.neighbors(2).empty());
  std::vector<Edge> star;
  for (VertexId leaf = 1; leaf <= 5; ++leaf) {
    star.push_back({0, leaf, 1});
    star.push_back({leaf, 0, 1});
  }
  Graph s(6, star);
  CHECK(s.degree(0) == 5);
  CHECK(s.adjacent(0, 3));
  CHECK_FALSE(s.adjacent(2, 3));
}

TEST_CASE("degrees count distinct neighbours in the undirected view") {
  // one-way edge and a parallel pair still give degree 1
  Graph g(3, {{0, 1, 1}, {0, 1, -1}, {2, 1, 1}});
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 1);
  CHECK(g.num_undirected_edges() == 2);
}

TEST_CASE("property: degree sum is twice the undirected edge count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testutil::random_graph(5 + trial, 0.3, rng);
    auto deg = g.degrees();
    const std::size_t sum = std::accumulate(deg.begin(), deg.end(), std::size_t{0});
    CHECK(sum == 2 * g.num_undirected_edges());
    CHECK(g.num_edges() == 2 * g.num_undirected_edges());
  }
}

TEST_CASE("partition_edges: single block") {
  std::mt19937_64 rng(1);
  Graph g = testutil::random_graph(10, 0.4, rng);
  Graph p = partition_edges(g, 1, PartitionStrategy::hash_edge);
  CHECK(p.num_partitions() == 1);
  CHECK(p.block(0).size() == g.num_edges());
}

TEST_CASE("partition_edges: blocks are disjoint, cover all edges and are deterministic") {
  Graph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  for (auto strategy : {PartitionStrategy::hash_edge, PartitionStrategy::hash_src}) {
    Graph a = partition_edges(g, 2, strategy);
    Graph b = partition_edges(g, 2, strategy);
    CHECK(a.num_partitions() == 2);
    std::vector<Edge> all;
    for (std::size_t p = 0; p < 2; ++p) {
      for (const Edge& e : a.block(p)) {
        CHECK(partition_of(e, 2, strategy) == p);
        all.push_back(e);
      }
      CHECK(std::vector<Edge>(a.block(p).begin(), a.block(p).end()) ==
            std::vector<Edge>(b.block(p).begin(), b.block(p).end()));
    }
    CHECK(testutil::sorted_edges(all) == testutil::sorted_edges(g.edges()));
  }
}

TEST_CASE("partition_edges: hash-src keeps a source's out-edges together") {
  std::mt19937_64 rng(3);
  Graph g = partition_edges(testutil::random_graph(30, 0.3, rng), 4, PartitionStrategy::hash_src);
  std::vector<int> block_of_src(30, -1);
  for (std::size_t p = 0; p < 4; ++p)
    for (const Edge& e : g.block(p)) {
      if (block_of_src[e.src] < 0) block_of_src[e.src] = static_cast<int>(p);
      CHECK(block_of_src[e.src] == static_cast<int>(p));
    }
}

TEST_CASE("graph_union") {
  Graph g(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}});
  CHECK(graph_union(g, Graph(3)).edges().size() == 4);
  CHECK(testutil::sorted_edges(graph_union(g, Graph(3)).edges()) == testutil::sorted_edges(g.edges()));

  Graph h(3, {{0, 1, -1}, {2, 0, -1}});
  Graph u = graph_union(g, h);
  CHECK(u.num_edges() == 6);
  int both = 0;
  for (const Edge& e : u.edges())
    if (e.src == 0 && e.dst == 1) both += e.weight > 0 ? 1 : 10;
  CHECK(both == 11);

  CHECK_THROWS_AS(graph_union(g, Graph(4)), ValidationError);
}

TEST_CASE("graph_union keeps the first graph's partitioning") {
  std::mt19937_64 rng(5);
  Graph g = testutil::random_graph(12, 0.5, rng, 3);
  Graph h = testutil::random_graph(12, 0.5, rng, 1);
  Graph u = graph_union(g, h);
  CHECK(u.num_partitions() == 3);
  std::size_t total = 0;
  for (std::size_t p = 0; p < 3; ++p) total += u.block(p).size();
  CHECK(total == g.num_edges() + h.num_edges());
}

TEST_CASE("remap table round trip") {
  RemapTable r;
  CHECK(r.intern(900) == 0);
  CHECK(r.intern(5) == 1);
  CHECK(r.intern(900) == 0);
  std::stringstream ss;
  r.write(ss);
  RemapTable back = RemapTable::read(ss);
  CHECK(back.size() == 2);
  CHECK(back.external(0) == 900);
  CHECK(*back.find(5) == 1);

  std::istringstream bad("1 0\n2 0\n");
  CHECK_THROWS_AS(RemapTable::read(bad), ValidationError);
}

TEST_CASE("partition strategy names") {
  CHECK(parse_partition_strategy("hash-src") == PartitionStrategy::hash_src);
  CHECK(to_string(PartitionStrategy::hash_edge) == "hash-edge");
  CHECK_THROWS_AS(parse_partition_strategy("metis"), ValidationError);
}
