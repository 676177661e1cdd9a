#include "ntd/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace ntd {

const char* errc_name(errc code) {
  switch (code) {
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::empty_set: return "EmptySet";
    case errc::too_large: return "TooLarge";
    case errc::too_small: return "TooSmall";
    case errc::infeasible: return "Infeasible";
    case errc::isolated_vertex: return "IsolatedVertexInInput";
    case errc::not_pendant: return "NotPendant";
    case errc::not_proper_interval: return "NotProperInterval";
    case errc::disconnected: return "Disconnected";
    case errc::not_ntd: return "NotNTD";
    case errc::not_dominating: return "NotDominating";
    case errc::degree_too_high: return "DegreeTooHigh";
    case errc::no_conforming_gadget: return "NoConformingGadget";
    case errc::parse_error: return "ParseError";
    case errc::bad_params: return "BadParams";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

void fail(errc code, const std::string& what) {
  throw Error(code, std::string(errc_name(code)) + ": " + what);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    fail(errc::index_out_of_range,
         "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

Graph Graph::build(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 0) fail(errc::bad_params, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.m_ = static_cast<long long>(edges.size());

  auto pair_str = [](Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  };
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(errc::index_out_of_range, "edge " + pair_str(u, v));
    if (u == v) fail(errc::self_loop, "edge " + pair_str(u, v));
  }

  std::vector<std::pair<Vertex, Vertex>> normalized(edges.begin(), edges.end());
  for (auto& e : normalized)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(normalized.begin(), normalized.end());
  for (size_t i = 1; i < normalized.size(); ++i)
    if (normalized[i] == normalized[i - 1])
      fail(errc::duplicate_edge,
           "edge " + pair_str(normalized[i].first, normalized[i].second));

  g.offset_.assign(n + 1, 0);
  for (auto [u, v] : normalized) {
    ++g.offset_[u + 1];
    ++g.offset_[v + 1];
  }
  for (int v = 0; v < n; ++v) g.offset_[v + 1] += g.offset_[v];
  g.adj_.resize(2 * normalized.size());
  std::vector<int> cursor(g.offset_.begin(), g.offset_.end() - 1);
  for (auto [u, v] : normalized) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  for (int v = 0; v < n; ++v)
    std::sort(g.adj_.begin() + g.offset_[v], g.adj_.begin() + g.offset_[v + 1]);
  return g;
}

Graph Graph::build(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return build(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) == 0) return true;
  return false;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) fail(errc::bad_params, "negative universe");
  words_.assign((universe + 63) / 64, 0);
}

void VertexSet::check(Vertex v) const {
  if (v < 0 || v >= universe_)
    fail(errc::index_out_of_range,
         "member " + std::to_string(v) + " outside 0.." + std::to_string(universe_ - 1));
}

VertexSet VertexSet::of(int universe, std::initializer_list<Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::from_members(int universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  check(v);
  std::uint64_t& w = words_[v >> 6];
  std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (!(w & bit)) {
    w |= bit;
    ++count_;
  }
}

void VertexSet::erase(Vertex v) {
  check(v);
  std::uint64_t& w = words_[v >> 6];
  std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<Vertex>((wi << 6) + b));
      w &= w - 1;
    }
  }
  return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count())
    fail(errc::bad_params, "set universe does not match graph");
  VertexSet out(g.vertex_count());
  for (Vertex v : s.members())
    for (Vertex w : g.neighbors(v)) out.insert(w);
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = open_neighborhood(g, s);
  for (Vertex v : s.members()) out.insert(v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count())
    fail(errc::bad_params, "set universe does not match graph");
  if (s.empty()) fail(errc::empty_set, "induced subgraph of the empty set");
  InducedSubgraph result;
  result.to_orig = s.members();
  result.to_sub.assign(g.vertex_count(), -1);
  for (size_t i = 0; i < result.to_orig.size(); ++i)
    result.to_sub[result.to_orig[i]] = static_cast<int>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u : result.to_orig)
    for (Vertex v : g.neighbors(u))
      if (u < v && result.to_sub[v] >= 0)
        edges.emplace_back(result.to_sub[u], result.to_sub[v]);
  result.graph = Graph::build(static_cast<int>(result.to_orig.size()), edges);
  return result;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    comps.emplace_back();
    auto& comp = comps.back();
    seen[s] = 1;
    queue.assign(1, s);
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() < 1) fail(errc::bad_params, "empty graph");
  return components(g).size() == 1;
}

}  // namespace ntd
