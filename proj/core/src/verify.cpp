#include "ntd/verify.hpp"

#include <algorithm>

#include "ntd/oracle.hpp"

namespace ntd {

const char* set_kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::dominating: return "dominating";
    case SetKind::total: return "total";
    case SetKind::ntd: return "ntd";
  }
  return "unknown";
}

namespace {

void check_inputs(const Graph& g, const VertexSet& d) {
  if (d.universe() != g.vertex_count())
    fail(errc::bad_params, "set universe does not match graph");
}

}  // namespace

VerifyReport is_dominating(const Graph& g, const VertexSet& d) {
  check_inputs(g, d);
  int n = g.vertex_count();
  std::vector<char> covered(n, 0);
  for (Vertex v : d.members()) {
    covered[v] = 1;
    for (Vertex w : g.neighbors(v)) covered[w] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (!covered[v]) return {SetKind::dominating, false, v};
  return {SetKind::dominating, true, std::nullopt};
}

VerifyReport is_total_dominating(const Graph& g, const VertexSet& d) {
  check_inputs(g, d);
  int n = g.vertex_count();
  std::vector<char> covered(n, 0);
  for (Vertex v : d.members())
    for (Vertex w : g.neighbors(v)) covered[w] = 1;
  for (int v = 0; v < n; ++v)
    if (!covered[v]) return {SetKind::total, false, v};
  return {SetKind::total, true, std::nullopt};
}

VerifyReport is_ntd(const Graph& g, const VertexSet& d) {
  check_inputs(g, d);
  if (g.has_isolated_vertex())
    fail(errc::isolated_vertex, "ntd is undefined on graphs with isolated vertices");
  int n = g.vertex_count();

  std::vector<char> covered(n, 0), in_nd(n, 0);
  for (Vertex v : d.members()) {
    covered[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      covered[w] = 1;
      in_nd[w] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!covered[v]) return {SetKind::ntd, false, v};

  // every vertex of N(D) needs a neighbor inside N(D)
  for (int v = 0; v < n; ++v) {
    if (!in_nd[v]) continue;
    bool ok = false;
    for (Vertex w : g.neighbors(v))
      if (in_nd[w]) {
        ok = true;
        break;
      }
    if (!ok) return {SetKind::ntd, false, v};
  }
  return {SetKind::ntd, true, std::nullopt};
}

VerifyReport verify(const Graph& g, const VertexSet& d, SetKind kind) {
  switch (kind) {
    case SetKind::dominating: return is_dominating(g, d);
    case SetKind::total: return is_total_dominating(g, d);
    case SetKind::ntd: return is_ntd(g, d);
  }
  fail(errc::bad_params, "unknown kind");
}

bool pendant_condition(const Graph& g, const VertexSet& d, Vertex v) {
  check_inputs(g, d);
  if (g.degree(v) != 1)
    fail(errc::not_pendant, "vertex " + std::to_string(v) + " has degree " +
                                std::to_string(g.degree(v)));
  if (d.contains(v)) return true;
  Vertex support = g.neighbors(v)[0];
  int hits = d.contains(support) ? 1 : 0;
  for (Vertex w : g.neighbors(support))
    if (d.contains(w)) ++hits;
  return hits >= 2;
}

std::array<int, 3> check_chain(const Graph& g, int limit) {
  if (!is_connected(g)) fail(errc::disconnected, "check_chain needs a connected graph");
  int gamma = exact_min(g, SetKind::dominating, limit).size;
  int gamma_nt = exact_min(g, SetKind::ntd, limit).size;
  int gamma_t = exact_min(g, SetKind::total, limit).size;
  return {gamma, gamma_nt, gamma_t};
}

}  // namespace ntd
