#include "ntd/oracle.hpp"

#include <bit>
#include <vector>

namespace ntd {

namespace {

using u64 = std::uint64_t;

struct MaskGraph {
  int n;
  u64 full;
  std::vector<u64> open, closed;

  explicit MaskGraph(const Graph& g) : n(g.vertex_count()) {
    full = n == 64 ? ~u64{0} : (u64{1} << n) - 1;
    open.assign(n, 0);
    closed.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) open[v] |= u64{1} << w;
      closed[v] = open[v] | (u64{1} << v);
    }
  }
};

struct PendantRule {
  u64 vertex_bit;
  u64 support_closed;
};

bool passes(const MaskGraph& mg, SetKind kind, u64 d) {
  u64 cover = 0;
  u64 rest = d;
  if (kind == SetKind::total) {
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      cover |= mg.open[v];
    }
    return cover == mg.full;
  }
  u64 nd = 0;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    cover |= mg.closed[v];
    nd |= mg.open[v];
  }
  if (cover != mg.full) return false;
  if (kind == SetKind::dominating) return true;
  u64 scan = nd;
  while (scan) {
    int v = std::countr_zero(scan);
    scan &= scan - 1;
    if ((mg.open[v] & nd) == 0) return false;
  }
  return true;
}

}  // namespace

int lower_bound(const Graph& g, SetKind) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  int delta = g.max_degree();
  return (n + delta) / (delta + 1);
}

namespace detail {

OracleResult exact_min_impl(const Graph& g, SetKind kind,
                            const VertexSet& required, int limit,
                            bool pendant_prune) {
  int n = g.vertex_count();
  if (required.universe() != n)
    fail(errc::bad_params, "required-set universe does not match graph");
  if (n > limit)
    fail(errc::too_large, "n=" + std::to_string(n) + " exceeds oracle limit " +
                              std::to_string(limit));
  if (n > 64) fail(errc::too_large, "oracle supports at most 64 vertices");
  if (kind != SetKind::dominating && g.has_isolated_vertex())
    fail(errc::isolated_vertex,
         std::string(set_kind_name(kind)) + " undefined with isolated vertices");
  if (n == 0) return {0, VertexSet(0)};

  MaskGraph mg(g);

  u64 required_mask = 0;
  for (Vertex v : required.members()) required_mask |= u64{1} << v;
  std::vector<int> free_vertices;
  for (int v = 0; v < n; ++v)
    if (!required.contains(v)) free_vertices.push_back(v);
  int nf = static_cast<int>(free_vertices.size());

  std::vector<PendantRule> pendants;
  if (pendant_prune && kind == SetKind::ntd) {
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 1) {
        Vertex support = g.neighbors(v)[0];
        pendants.push_back({u64{1} << v, mg.closed[support]});
      }
  }
  auto pendant_ok = [&](u64 d) {
    for (const auto& p : pendants)
      if (!(d & p.vertex_bit) && std::popcount(d & p.support_closed) < 2)
        return false;
    return true;
  };

  auto to_set = [&](u64 d) {
    VertexSet s(n);
    while (d) {
      int v = std::countr_zero(d);
      d &= d - 1;
      s.insert(v);
    }
    return s;
  };

  int start = std::max(lower_bound(g, kind), required.size());
  for (int k = start; k <= n; ++k) {
    int pick = k - required.size();
    if (pick < 0 || pick > nf) continue;
    if (pick == 0) {
      if (pendant_ok(required_mask) && passes(mg, kind, required_mask))
        return {k, to_set(required_mask)};
      continue;
    }
    // index combinations over the free vertices, lexicographic
    std::vector<int> c(pick);
    for (int i = 0; i < pick; ++i) c[i] = i;
    while (true) {
      u64 d = required_mask;
      for (int i : c) d |= u64{1} << free_vertices[i];
      if (pendant_ok(d) && passes(mg, kind, d)) return {k, to_set(d)};
      int i = pick - 1;
      while (i >= 0 && c[i] == nf - pick + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < pick; ++j) c[j] = c[j - 1] + 1;
    }
  }
  fail(errc::infeasible, "no feasible set contains the required vertices");
}

}  // namespace detail

OracleResult exact_min(const Graph& g, SetKind kind, int limit) {
  return detail::exact_min_impl(g, kind, VertexSet(g.vertex_count()), limit, true);
}

OracleResult exact_min_with_required(const Graph& g, SetKind kind,
                                     const VertexSet& required, int limit) {
  return detail::exact_min_impl(g, kind, required, limit, true);
}

}  // namespace ntd
