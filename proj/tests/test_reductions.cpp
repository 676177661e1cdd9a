#include <random>

#include "doctest.h"
#include "ntd/oracle.hpp"
#include "ntd/reductions.hpp"
#include "test_util.hpp"

using namespace ntd;
using namespace ntd::testutil;

namespace {

VertexSet tail_forward_set(const ReductionArtifact& artifact, const VertexSet& d) {
  VertexSet s(artifact.output.vertex_count());
  for (Vertex v : d.members()) s.insert(artifact.vertex_for(v, "v"));
  for (int v = 0; v < artifact.source_n; ++v) {
    s.insert(artifact.vertex_for(v, "b"));
    s.insert(artifact.vertex_for(v, "c"));
  }
  return s;
}

bool is_bipartite_with_parts(const Graph& g, const VertexSet& part_a) {
  for (auto [u, v] : g.edges())
    if (part_a.contains(u) == part_a.contains(v)) return false;
  return true;
}

}  // namespace

TEST_CASE("tail construction identities") {
  struct Row {
    Graph g;
    int gamma;
  };
  for (const Row& row : {Row{k1(), 1}, Row{k2(), 1}, Row{p3(), 1}}) {
    auto artifact = build_domset_to_ntds(row.g);
    int n = row.g.vertex_count();
    CHECK(artifact.output.vertex_count() == 6 * n);
    CHECK(artifact.relation == AffineRelation{1, 2 * n});
    CHECK(exact_min(row.g, SetKind::dominating).size == row.gamma);
    CHECK(exact_min(artifact.output, SetKind::ntd).size == row.gamma + 2 * n);
  }
}

TEST_CASE("tail forward set is an NTD-set and extracts back unchanged") {
  for (const Graph& g : {k1(), k2(), p3(), p4(), c4(), paw()}) {
    auto artifact = build_domset_to_ntds(g);
    VertexSet d = exact_min(g, SetKind::dominating).set;
    VertexSet s = tail_forward_set(artifact, d);
    CHECK(s.size() == d.size() + 2 * g.vertex_count());
    CHECK(is_ntd(artifact.output, s).pass);
    CHECK(extract_domset_from_ntds(artifact, s) == d);
  }
}

TEST_CASE("tail extractor is sound for every NTD-set of tiny outputs") {
  for (const Graph& g : {k1(), k2()}) {
    auto artifact = build_domset_to_ntds(g);
    int n = g.vertex_count();
    int out_n = artifact.output.vertex_count();
    MaskChecker mc(artifact.output);
    int ntd_count = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << out_n); ++mask) {
      if (!mc.ntd(mask)) continue;
      ++ntd_count;
      VertexSet s = set_from_mask(out_n, mask);
      VertexSet extracted = extract_domset_from_ntds(artifact, s);
      CHECK(is_dominating(g, extracted).pass);
      CHECK(extracted.size() <= s.size() - 2 * n);
    }
    CHECK(ntd_count > 0);
  }
}

TEST_CASE("tail extractor swaps a_v for v instead of deleting it") {
  // K2 source; the certificate keeps a_u and omits u, so dropping a_u without
  // the swap would leave u undominated.
  Graph g = k2();
  auto artifact = build_domset_to_ntds(g);
  VertexSet s(artifact.output.vertex_count());
  s.insert(artifact.vertex_for(0, "a"));
  for (int v = 0; v < 2; ++v) {
    s.insert(artifact.vertex_for(v, "b"));
    s.insert(artifact.vertex_for(v, "c"));
  }
  s.insert(artifact.vertex_for(1, "v"));
  REQUIRE(is_ntd(artifact.output, s).pass);
  VertexSet extracted = extract_domset_from_ntds(artifact, s);
  CHECK(is_dominating(g, extracted).pass);
  CHECK(extracted.contains(0));
  CHECK(extracted.size() <= s.size() - 4);
}

TEST_CASE("tail extractor rejects invalid certificates") {
  auto artifact = build_domset_to_ntds(k2());
  CHECK_THROWS_AS(
      extract_domset_from_ntds(artifact, VertexSet(artifact.output.vertex_count())),
      Error);
}

TEST_CASE("fourcopy identities and bipartition") {
  struct Row {
    Graph g;
    int gamma;
  };
  for (const Row& row : {Row{k2(), 1}, Row{p3(), 1}, Row{k3(), 1}}) {
    auto artifact = build_fourcopy(row.g);
    int n = row.g.vertex_count();
    CHECK(artifact.output.vertex_count() == 4 * n);
    CHECK(artifact.relation == AffineRelation{2, 0});
    CHECK(exact_min(artifact.output, SetKind::ntd).size == 2 * row.gamma);

    VertexSet part_a(4 * n);  // copies 1 and 4
    for (int u = 0; u < n; ++u) {
      part_a.insert(u);
      part_a.insert(3 * n + u);
    }
    CHECK(is_bipartite_with_parts(artifact.output, part_a));
  }
}

TEST_CASE("fourcopy rejects sources with isolated vertices") {
  CHECK_THROWS_AS(build_fourcopy(k1()), Error);
  try {
    build_fourcopy(Graph::build(3, {{0, 1}}));
  } catch (const Error& e) {
    CHECK(e.code() == errc::isolated_vertex);
  }
}

TEST_CASE("fourcopy forward set maps back to the source set") {
  for (const Graph& g : {k2(), p3(), c4()}) {
    int n = g.vertex_count();
    auto artifact = build_fourcopy(g);
    VertexSet d = exact_min(g, SetKind::dominating).set;
    VertexSet nd(4 * n);
    for (Vertex u : d.members()) {
      nd.insert(u);
      nd.insert(n + u);
    }
    CHECK(is_ntd(artifact.output, nd).pass);
    CHECK(extract_domset_fourcopy(artifact, nd) == d);
  }
}

TEST_CASE("fourcopy extractor is sound for every NTD-set of the K2 output") {
  Graph g = k2();
  auto artifact = build_fourcopy(g);
  int out_n = artifact.output.vertex_count();
  MaskChecker mc(artifact.output);
  int ntd_count = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << out_n); ++mask) {
    if (!mc.ntd(mask)) continue;
    ++ntd_count;
    VertexSet d = set_from_mask(out_n, mask);
    VertexSet extracted = extract_domset_fourcopy(artifact, d);
    CHECK(is_dominating(g, extracted).pass);
    CHECK(2 * extracted.size() <= d.size());
  }
  CHECK(ntd_count > 0);
}

TEST_CASE("subcubic construction identities") {
  struct Row {
    Graph g;
    int gamma;
    int s;
  };
  for (const Row& row : {Row{k2(), 1, 0}, Row{p3(), 1, 0}, Row{claw(), 1, 1}}) {
    auto artifact = build_subcubic_gadget(row.g);
    int n = row.g.vertex_count();
    CHECK(artifact.output.vertex_count() == 5 * (n - row.s) + 8 * row.s);
    CHECK(artifact.output.max_degree() <= 3);
    CHECK(artifact.relation == AffineRelation{1, n + 2 * row.s});
    CHECK(exact_min(artifact.output, SetKind::ntd, 26).size ==
          row.gamma + n + 2 * row.s);
  }
  CHECK_THROWS_AS(build_subcubic_gadget(gen_star(5)), Error);
}

TEST_CASE("subcubic forward map and extractor round-trip on random sources") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = gen_subcubic(n, rng());
    if (g.has_isolated_vertex()) continue;
    auto artifact = build_subcubic_gadget(g);
    CHECK(artifact.output.max_degree() <= 3);

    // every dominating set, not only the minimum one
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      VertexSet d = set_from_mask(n, mask);
      if (!is_dominating(g, d).pass) continue;
      VertexSet nd = forward_ntd_subcubic(artifact, d);
      int s = 0;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) == 3) ++s;
      CHECK(nd.size() == d.size() + (n - s) + 3 * s);
      CHECK(is_ntd(artifact.output, nd).pass);
      CHECK(extract_domset_subcubic(artifact, nd) == d);
    }
  }
}

TEST_CASE("subcubic extractor is sound for every NTD-set of the K2 output") {
  Graph g = k2();
  auto artifact = build_subcubic_gadget(g);
  int out_n = artifact.output.vertex_count();
  MaskChecker mc(artifact.output);
  int ntd_count = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << out_n); ++mask) {
    if (!mc.ntd(mask)) continue;
    ++ntd_count;
    VertexSet nd = set_from_mask(out_n, mask);
    VertexSet extracted = extract_domset_subcubic(artifact, nd);
    CHECK(is_dominating(g, extracted).pass);
    CHECK(extracted.size() <= nd.size() - 2);
  }
  CHECK(ntd_count > 0);
}

TEST_CASE("forward placements on the named hosts") {
  auto check_size = [](const Graph& g, VertexSet d, int expect) {
    auto artifact = build_subcubic_gadget(g);
    VertexSet nd = forward_ntd_subcubic(artifact, d);
    CHECK(nd.size() == expect);
    CHECK(is_ntd(artifact.output, nd).pass);
  };
  check_size(k2(), VertexSet::of(2, {0}), 3);
  check_size(p3(), VertexSet::of(3, {1}), 4);
  check_size(claw(), VertexSet::of(4, {0}), 7);
}

TEST_CASE("forward map demands a dominating set") {
  auto artifact = build_subcubic_gadget(p3());
  CHECK_THROWS_AS(forward_ntd_subcubic(artifact, VertexSet(3)), Error);
  try {
    forward_ntd_subcubic(artifact, VertexSet::of(3, {0}));
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_dominating);
  }
}
