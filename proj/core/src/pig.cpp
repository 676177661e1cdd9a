#include "ntd/pig.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <cassert>
#include <chrono>
#include <limits>
#include <sstream>

#include "ntd/generators.hpp"
#include "ntd/verify.hpp"

namespace ntd {

namespace {

// Lexicographic BFS; ties inside the lexicographically largest class go to
// the vertex latest in `prev`. Classes are kept as linked lists ordered by
// descending prev-position, so the head of the first class is the pick.
std::vector<Vertex> lbfs_plus(const Graph& g, const std::vector<Vertex>& prev) {
  int n = g.vertex_count();
  std::vector<int> prio(n);
  for (int i = 0; i < n; ++i) prio[prev[i]] = i;

  // adjacency re-sorted by descending priority (counting sort)
  std::vector<int> off(n + 1, 0);
  for (int v = 0; v < n; ++v) off[v + 1] = off[v] + g.degree(v);
  std::vector<Vertex> sorted_adj(off[n]);
  std::vector<int> cursor(off.begin(), off.end() - 1);
  for (int i = n - 1; i >= 0; --i) {
    Vertex v = prev[i];
    for (Vertex u : g.neighbors(v)) sorted_adj[cursor[u]++] = v;
  }

  struct Cls {
    int head = -1, tail = -1;
    int prev_cls = -1, next_cls = -1;
    int twin = -1, stamp = -1;
  };
  std::vector<Cls> cls;
  cls.reserve(2 * n + 2);
  std::vector<int> nxt(n, -1), prv(n, -1), cls_of(n, -1);
  int first_cls = -1;

  cls.emplace_back();
  first_cls = 0;
  {
    int last = -1;
    for (int i = n - 1; i >= 0; --i) {  // descending priority
      Vertex v = prev[i];
      cls_of[v] = 0;
      prv[v] = last;
      if (last >= 0)
        nxt[last] = v;
      else
        cls[0].head = v;
      last = v;
    }
    if (last >= 0) cls[0].tail = last;
  }

  auto unlink_vertex = [&](Vertex v) {
    Cls& c = cls[cls_of[v]];
    if (prv[v] >= 0) nxt[prv[v]] = nxt[v]; else c.head = nxt[v];
    if (nxt[v] >= 0) prv[nxt[v]] = prv[v]; else c.tail = prv[v];
    prv[v] = nxt[v] = -1;
  };
  auto unlink_class = [&](int ci) {
    Cls& c = cls[ci];
    if (c.prev_cls >= 0) cls[c.prev_cls].next_cls = c.next_cls;
    else first_cls = c.next_cls;
    if (c.next_cls >= 0) cls[c.next_cls].prev_cls = c.prev_cls;
  };
  auto append_to = [&](int ci, Vertex v) {
    Cls& c = cls[ci];
    prv[v] = c.tail;
    nxt[v] = -1;
    if (c.tail >= 0) nxt[c.tail] = v; else c.head = v;
    c.tail = v;
    cls_of[v] = ci;
  };

  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<char> visited(n, 0);

  for (int step = 0; step < n; ++step) {
    int ci = first_cls;
    Vertex v = cls[ci].head;
    unlink_vertex(v);
    if (cls[ci].head < 0) unlink_class(ci);
    visited[v] = 1;
    order.push_back(v);

    for (int k = off[v]; k < off[v + 1]; ++k) {
      Vertex u = sorted_adj[k];
      if (visited[u]) continue;
      int cu = cls_of[u];
      if (cls[cu].stamp != step) {
        cls[cu].stamp = step;
        cls.emplace_back();
        int tw = static_cast<int>(cls.size()) - 1;
        cls[cu].twin = tw;
        // insert twin immediately before cu
        cls[tw].prev_cls = cls[cu].prev_cls;
        cls[tw].next_cls = cu;
        if (cls[cu].prev_cls >= 0) cls[cls[cu].prev_cls].next_cls = tw;
        else first_cls = tw;
        cls[cu].prev_cls = tw;
      }
      unlink_vertex(u);
      append_to(cls[cu].twin, u);
      if (cls[cu].head < 0) unlink_class(cu);
    }
  }
  return order;
}

long peak_rss_kb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

}  // namespace

bool is_peo(const Graph& g, const std::vector<Vertex>& sigma) {
  int n = g.vertex_count();
  if (static_cast<int>(sigma.size()) != n) fail(errc::bad_params, "sigma size");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = sigma[i];
    if (v < 0 || v >= n || pos[v] != -1)
      fail(errc::bad_params, "sigma is not a permutation");
    pos[v] = i;
  }

  // For each v, the later neighbors minus the earliest of them must all be
  // adjacent to that earliest one.
  std::vector<std::vector<Vertex>> need(n);
  for (int i = 0; i < n; ++i) {
    Vertex v = sigma[i];
    Vertex u = -1;
    int best = std::numeric_limits<int>::max();
    for (Vertex w : g.neighbors(v))
      if (pos[w] > i && pos[w] < best) {
        best = pos[w];
        u = w;
      }
    if (u < 0) continue;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > i && w != u) need[u].push_back(w);
  }
  std::vector<int> stamp(n, -1);
  for (int u = 0; u < n; ++u) {
    if (need[u].empty()) continue;
    for (Vertex w : g.neighbors(u)) stamp[w] = u;
    for (Vertex w : need[u])
      if (stamp[w] != u) return false;
  }
  return true;
}

bool is_bco(const Graph& g, const std::vector<Vertex>& sigma) {
  if (!is_peo(g, sigma)) return false;
  std::vector<Vertex> reversed(sigma.rbegin(), sigma.rend());
  return is_peo(g, reversed);
}

EllArrays compute_ell(const Graph& g, const std::vector<Vertex>& sigma) {
  int n = g.vertex_count();
  if (static_cast<int>(sigma.size()) != n) fail(errc::bad_params, "sigma size");
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[sigma[i]] = i;
  EllArrays out;
  out.ell.assign(n, 0);
  out.fdeg.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int e = i, f = 0;
    for (Vertex w : g.neighbors(sigma[i]))
      if (pos[w] > i) {
        ++f;
        e = std::max(e, pos[w]);
      }
    out.ell[i] = e;
    out.fdeg[i] = f;
  }
  return out;
}

Bco recognize_and_order(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) fail(errc::bad_params, "empty graph");
  if (!is_connected(g)) fail(errc::disconnected, "recognition needs a connected graph");

  std::vector<Vertex> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  std::vector<Vertex> sigma = lbfs_plus(g, identity);
  sigma = lbfs_plus(g, sigma);
  sigma = lbfs_plus(g, sigma);
  if (!is_bco(g, sigma))
    fail(errc::not_proper_interval, "no bi-compatible elimination ordering found");
  if (n >= 2 && sigma.front() > sigma.back())
    std::reverse(sigma.begin(), sigma.end());

  Bco bco;
  bco.sigma = std::move(sigma);
  bco.position.assign(n, 0);
  for (int i = 0; i < n; ++i) bco.position[bco.sigma[i]] = i;
  auto arrays = compute_ell(g, bco.sigma);
  bco.ell = std::move(arrays.ell);
  bco.fdeg = std::move(arrays.fdeg);
  for (int i = 0; i + 1 < n; ++i)
    assert(g.has_edge(bco.sigma[i], bco.sigma[i + 1]));
  return bco;
}

std::string SolverTrace::to_text() const {
  std::ostringstream out;
  for (const auto& s : steps) {
    out << "iter=" << s.iteration << " i=" << s.considered + 1
        << " case=" << s.case_id << " picked=";
    for (size_t k = 0; k < s.picked.size(); ++k) {
      if (k) out << ',';
      out << s.picked[k] + 1;
    }
    out << " next=";
    if (s.next < 0)
      out << "end";
    else
      out << s.next + 1;
    out << '\n';
  }
  return out.str();
}

PigResult mntds_pig(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) fail(errc::bad_params, "empty graph");
  Bco bco = recognize_and_order(g);

  PigResult result{VertexSet(n), {}, {}};
  if (n <= 2) {
    for (int v = 0; v < n; ++v) result.set.insert(v);
    result.bco = std::move(bco);
    return result;
  }

  std::vector<char> dom(n, 0);
  auto add = [&](int p) {
    Vertex v = bco.sigma[p];
    result.set.insert(v);
    dom[p] = 1;
    for (Vertex w : g.neighbors(v)) dom[bco.position[w]] = 1;
  };
  // Advancement guard shared by cases 2, 3 and 5: jump past ell(x) when the
  // picked vertex has two later neighbors or its flanks are adjacent,
  // otherwise step to x+1 (equal to ell(x) whenever a later neighbor exists).
  auto guard = [&](int x) {
    if (bco.fdeg[x] >= 2) return true;
    return x - 1 >= 0 && x + 1 < n &&
           g.has_edge(bco.sigma[x - 1], bco.sigma[x + 1]);
  };
  auto next_after = [&](int x) { return guard(x) ? bco.ell[x] + 1 : x + 1; };

  int i = 0;
  int iter = 0;
  if (g.degree(bco.sigma[0]) == 1) {
    ++iter;
    int a = bco.ell[1];
    int b = bco.ell[2];
    if (bco.ell[a] == bco.ell[b]) {  // case 1
      add(1);
      add(a);
      i = bco.ell[a] + 1;
      result.trace.steps.push_back({iter, 0, 1, {1, a}, i});
    } else {  // case 2
      add(0);
      add(b);
      i = next_after(b);
      result.trace.steps.push_back({iter, 0, 2, {0, b}, i});
    }
  }
  while (i <= n - 1) {
    ++iter;
    int j = bco.ell[i];
    if (!dom[i]) {  // case 3
      add(j);
      int ni = next_after(j);
      result.trace.steps.push_back({iter, i, 3, {j}, ni});
      i = ni;
    } else if (bco.fdeg[i] == 0 || (bco.fdeg[i] == 1 && j == n - 1)) {  // case 4
      add(i);
      result.trace.steps.push_back({iter, i, 4, {i}, -1});
      break;
    } else {  // case 5
      int p = bco.ell[i + 1];
      add(p);
      int ni = next_after(p);
      result.trace.steps.push_back({iter, i, 5, {p}, ni});
      i = ni;
    }
  }
  result.bco = std::move(bco);
  return result;
}

LinearFit fit_time_linear(const std::vector<double>& x,
                          const std::vector<double>& t) {
  if (x.size() != t.size() || x.size() < 2)
    fail(errc::bad_params, "fit needs at least two points");
  double sxx = 0, sx = 0, s1 = 0, sxt = 0, st = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    double w = 1.0 / (t[i] * t[i]);
    sxx += w * x[i] * x[i];
    sx += w * x[i];
    s1 += w;
    sxt += w * x[i] * t[i];
    st += w * t[i];
  }
  double det = sxx * s1 - sx * sx;
  if (det == 0.0) fail(errc::bad_params, "degenerate fit");
  LinearFit fit;
  fit.a = (sxt * s1 - sx * st) / det;
  fit.b = (sxx * st - sx * sxt) / det;
  for (size_t i = 0; i < x.size(); ++i)
    fit.rel_residuals.push_back((fit.a * x[i] + fit.b - t[i]) / t[i]);
  return fit;
}

BenchPoint mntds_pig_linear_bench(int n, double density, std::uint64_t seed) {
  // Interval-order labels keep the memory walk uniform across sizes, which
  // is what a scaling fit of the linear-time claim has to measure.
  Graph g = gen_proper_interval(n, density, seed, /*shuffle=*/false);
  auto t0 = std::chrono::steady_clock::now();
  PigResult r = mntds_pig(g);
  auto t1 = std::chrono::steady_clock::now();
  if (!is_ntd(g, r.set).pass)
    fail(errc::internal, "solver output failed verification");
  BenchPoint point;
  point.n = g.vertex_count();
  point.m = g.edge_count();
  point.seconds = std::chrono::duration<double>(t1 - t0).count();
  point.peak_rss_kb = peak_rss_kb();
  return point;
}

}  // namespace ntd
