#include <random>

#include "doctest.h"
#include "ntd/graph.hpp"
#include "test_util.hpp"

using namespace ntd;
using namespace ntd::testutil;

TEST_CASE("build validates its input") {
  Graph p2 = Graph::build(2, {{0, 1}});
  CHECK(p2.edge_count() == 1);
  CHECK(p2.degree(0) == 1);

  Graph t = k3();
  for (int v = 0; v < 3; ++v) CHECK(t.degree(v) == 2);

  CHECK_THROWS_WITH_AS(Graph::build(4, {{0, 1}, {1, 1}}), doctest::Contains("(1,1)"),
                       Error);
  try {
    Graph::build(4, {{0, 1}, {1, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == errc::self_loop);
  }
  try {
    Graph::build(2, {{0, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == errc::index_out_of_range);
  }
  try {
    Graph::build(3, {{0, 1}, {1, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == errc::duplicate_edge);
  }
  CHECK_THROWS_AS(Graph::build(3, {{0, 1}, {0, 1}}), Error);
}

TEST_CASE("neighborhood algebra on the small fixtures") {
  Graph g = p3();
  CHECK(open_neighborhood(g, VertexSet::of(3, {1})) == VertexSet::of(3, {0, 2}));
  CHECK(open_neighborhood(g, VertexSet::of(3, {0, 1})) ==
        VertexSet::of(3, {0, 1, 2}));
  CHECK(open_neighborhood(k3(), VertexSet::of(3, {0})) ==
        VertexSet::of(3, {1, 2}));

  CHECK(closed_neighborhood(g, VertexSet::of(3, {0})) == VertexSet::of(3, {0, 1}));
  CHECK(closed_neighborhood(g, VertexSet(3)) == VertexSet(3));
  CHECK(closed_neighborhood(k3(), VertexSet::of(3, {0})) ==
        VertexSet::of(3, {0, 1, 2}));
}

TEST_CASE("induced subgraphs") {
  auto sub = induced_subgraph(c4(), VertexSet::of(4, {0, 1, 2}));
  CHECK(sub.graph == p3());
  CHECK(sub.to_orig == std::vector<Vertex>{0, 1, 2});

  Graph g = k3();
  VertexSet all = VertexSet::of(3, {0, 1, 2});
  auto full = induced_subgraph(g, all);
  CHECK(full.graph == g);
  for (int v = 0; v < 3; ++v) CHECK(full.to_sub[v] == v);

  CHECK(induced_subgraph(k3(), VertexSet::of(3, {0, 2})).graph ==
        Graph::build(2, {{0, 1}}));
  CHECK_THROWS_AS(induced_subgraph(g, VertexSet(3)), Error);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(k2()));
  CHECK(is_connected(c5()));
  Graph two_isolated = Graph::build(2, {});
  CHECK_FALSE(is_connected(two_isolated));
  CHECK(components(two_isolated).size() == 2);
  CHECK_THROWS_AS(is_connected(Graph::build(0, {})), Error);
}

TEST_CASE("adjacency symmetry and closed = open + members on random graphs") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    int n = 2 + static_cast<int>(rng() % 12);
    Graph g = gen_gnp(n, 0.4, rng());
    for (int u = 0; u < n; ++u)
      for (Vertex v : g.neighbors(u)) CHECK(g.has_edge(v, u));

    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (rng() % 2) s.insert(v);
    VertexSet closed = closed_neighborhood(g, s);
    VertexSet open = open_neighborhood(g, s);
    for (Vertex v : s.members()) open.insert(v);
    CHECK(closed == open);
  }
}

TEST_CASE("vertex set membership bookkeeping") {
  VertexSet s(10);
  s.insert(3);
  s.insert(3);
  CHECK(s.size() == 1);
  s.insert(7);
  s.erase(3);
  CHECK(s.members() == std::vector<Vertex>{7});
  CHECK_THROWS_AS(s.insert(10), Error);
  CHECK_THROWS_AS(s.contains(-1), Error);
}
