#include "ntd/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace ntd {

namespace {

// Platform-independent draws (std distributions are not pinned).
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

double rng_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle_vec(std::mt19937_64& rng, std::vector<T>& v) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng_below(rng, i)]);
}

}  // namespace

Graph gen_path(int n) {
  if (n < 1) fail(errc::bad_params, "path needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, edges);
}

Graph gen_cycle(int n) {
  if (n < 3) fail(errc::bad_params, "cycle needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::build(n, edges);
}

Graph gen_star(int n) {
  if (n < 2) fail(errc::bad_params, "star needs n >= 2");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::build(n, edges);
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) fail(errc::bad_params, "gnp parameters");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng_unit(rng) < p) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

Graph gen_proper_interval(int n, double density, std::uint64_t seed, bool shuffle) {
  if (n < 1 || density < 0.0 || density > 1.0)
    fail(errc::bad_params, "proper interval parameters");
  std::mt19937_64 rng(seed);

  constexpr int kWindow = 16;
  std::vector<int> ell(n);
  ell[n - 1] = n - 1;
  for (int i = 0; i + 1 < n; ++i) {
    int window = std::min(kWindow, n - 1 - (i + 1));
    int extra = 0;
    for (int t = 0; t < window; ++t)
      if (rng_unit(rng) < density) ++extra;
    ell[i] = i + 1 + extra;
  }
  for (int i = 1; i + 1 < n; ++i) ell[i] = std::max(ell[i], ell[i - 1]);

  std::vector<Vertex> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  if (shuffle) shuffle_vec(rng, label);

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= ell[i]; ++j)
      edges.emplace_back(label[i], label[j]);
  return Graph::build(n, edges);
}

Graph gen_subcubic(int n, std::uint64_t seed) {
  if (n < 1) fail(errc::bad_params, "subcubic needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> deg(n, 0);
  std::set<std::pair<Vertex, Vertex>> edge_set;
  std::vector<Vertex> eligible;  // degree < 3

  auto add_edge = [&](Vertex u, Vertex v) {
    edge_set.insert(u < v ? std::pair{u, v} : std::pair{v, u});
    ++deg[u];
    ++deg[v];
  };

  if (n >= 2) {
    eligible.push_back(0);
    for (int i = 1; i < n; ++i) {
      // parents with degree <= 2, so the new edge keeps the cap
      size_t idx = rng_below(rng, eligible.size());
      Vertex parent = eligible[idx];
      add_edge(parent, i);
      if (deg[parent] == 3) {
        eligible[idx] = eligible.back();
        eligible.pop_back();
      }
      eligible.push_back(i);
    }
    int attempts = n / 2 + 1;
    for (int t = 0; t < attempts; ++t) {
      Vertex u = static_cast<Vertex>(rng_below(rng, n));
      Vertex v = static_cast<Vertex>(rng_below(rng, n));
      if (u == v || deg[u] >= 3 || deg[v] >= 3) continue;
      auto key = u < v ? std::pair{u, v} : std::pair{v, u};
      if (edge_set.count(key)) continue;
      add_edge(u, v);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges(edge_set.begin(), edge_set.end());
  return Graph::build(n, edges);
}

}  // namespace ntd
