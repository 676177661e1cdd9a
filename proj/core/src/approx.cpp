#include "ntd/approx.hpp"

#include <algorithm>
#include <cmath>

#include "ntd/verify.hpp"

namespace ntd {

VertexSet greedy_dominating(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) fail(errc::bad_params, "empty graph");
  if (g.has_isolated_vertex())
    fail(errc::isolated_vertex, "greedy expects an isolate-free graph");

  VertexSet d(n);
  std::vector<char> covered(n, 0);
  int uncovered = n;
  while (uncovered > 0) {
    int best = -1, best_gain = -1;
    for (int v = 0; v < n; ++v) {
      int gain = covered[v] ? 0 : 1;
      for (Vertex w : g.neighbors(v)) gain += covered[w] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    d.insert(best);
    if (!covered[best]) {
      covered[best] = 1;
      --uncovered;
    }
    for (Vertex w : g.neighbors(best))
      if (!covered[w]) {
        covered[w] = 1;
        --uncovered;
      }
  }
  return d;
}

namespace {

void check_approx_input(const Graph& g) {
  if (g.vertex_count() < 2) fail(errc::too_small, "need at least two vertices");
  if (!is_connected(g)) fail(errc::disconnected, "approx needs a connected graph");
}

std::vector<Vertex> lonely_members(const Graph& g, const VertexSet& d) {
  std::vector<Vertex> d1;
  for (Vertex v : d.members()) {
    bool has_d_neighbor = false;
    for (Vertex w : g.neighbors(v))
      if (d.contains(w)) {
        has_d_neighbor = true;
        break;
      }
    if (!has_d_neighbor) d1.push_back(v);
  }
  return d1;
}

}  // namespace

VertexSet approx_ntds(const Graph& g) {
  check_approx_input(g);
  int n = g.vertex_count();
  VertexSet d = greedy_dominating(g);
  std::vector<Vertex> d1 = lonely_members(g, d);

  std::vector<char> in_d1(n, 0), satisfied(n, 0);
  for (Vertex v : d1) in_d1[v] = 1;

  VertexSet result = d;
  for (Vertex u : d1) {
    if (satisfied[u]) continue;
    int best = -1, best_score = -1;
    for (Vertex w : g.neighbors(u)) {
      int score = 0;
      for (Vertex x : g.neighbors(w))
        if (in_d1[x] && !satisfied[x]) ++score;
      if (score > best_score) {
        best_score = score;
        best = w;
      }
    }
    result.insert(best);
    for (Vertex x : g.neighbors(best))
      if (in_d1[x]) satisfied[x] = 1;
  }
  return result;
}

StrictApproxResult approx_ntds_strict(const Graph& g) {
  check_approx_input(g);
  int n = g.vertex_count();
  VertexSet d = greedy_dominating(g);
  std::vector<Vertex> d1_list = lonely_members(g, d);

  std::vector<char> in_d1(n, 0), in_vprime(n, 1);
  for (Vertex v : d1_list) in_d1[v] = 1;
  // V' = V \ (D1 ∪ N(D2))
  for (Vertex v : d1_list) in_vprime[v] = 0;
  for (Vertex v : d.members())
    if (!in_d1[v])
      for (Vertex w : g.neighbors(v)) in_vprime[w] = 0;

  VertexSet result = d;
  std::vector<Vertex> d1(d1_list);
  while (!d1.empty()) {
    Vertex u = d1.front();
    int pick = -1;
    for (Vertex w : g.neighbors(u)) {
      if (!in_vprime[w]) continue;
      bool outside_free = true;
      for (Vertex x : g.neighbors(w))
        if (!d.contains(x)) {
          outside_free = false;
          break;
        }
      if (outside_free) {
        pick = w;
        break;
      }
    }
    if (pick < 0) {
      d1.erase(d1.begin());
      continue;
    }
    result.insert(pick);
    for (Vertex x : g.neighbors(pick))
      if (in_d1[x])
        for (Vertex y : g.neighbors(x)) in_vprime[y] = 0;
    std::erase_if(d1, [&](Vertex x) { return g.has_edge(pick, x); });
  }

  if (is_ntd(g, result).pass) return {result, false};
  return {approx_ntds(g), true};
}

double approx_ratio_bound(const Graph& g) {
  return 2.0 * (std::log(g.max_degree() + 1.0) + 1.0);
}

RatioReport ratio_report(const Graph& g, int limit) {
  VertexSet approx = approx_ntds(g);
  OracleResult opt = exact_min(g, SetKind::ntd, limit);
  RatioReport report;
  report.approx_size = approx.size();
  report.optimum = opt.size;
  report.ratio = static_cast<double>(approx.size()) / opt.size;
  report.bound = approx_ratio_bound(g);
  return report;
}

}  // namespace ntd
