#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ntd {

using Vertex = int;

enum class errc {
  index_out_of_range,
  self_loop,
  duplicate_edge,
  empty_set,
  too_large,
  too_small,
  infeasible,
  isolated_vertex,
  not_pendant,
  not_proper_interval,
  disconnected,
  not_ntd,
  not_dominating,
  degree_too_high,
  no_conforming_gadget,
  parse_error,
  bad_params,
  internal,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& what);

/// Immutable simple undirected graph on vertices 0..n-1, CSR adjacency with
/// each neighbor list sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Rejects out-of-range endpoints, self loops and
  /// duplicate edges (also when repeated as (u,v) and (v,u)).
  static Graph build(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph build(int n,
                     std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }
  int degree(Vertex v) const {
    check_vertex(v);
    return offset_[v + 1] - offset_[v];
  }
  bool has_edge(Vertex u, Vertex v) const;
  int max_degree() const;
  bool has_isolated_vertex() const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  long long m_ = 0;
  std::vector<int> offset_ = {0};
  std::vector<Vertex> adj_;
};

/// Subset of 0..universe-1 with O(1) membership and stored cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet of(int universe, std::initializer_list<Vertex> members);
  static VertexSet from_members(int universe, std::span<const Vertex> members);

  int universe() const { return universe_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(Vertex v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  std::vector<Vertex> members() const;  // ascending

  bool operator==(const VertexSet&) const = default;

 private:
  void check(Vertex v) const;

  int universe_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> words_;
};

/// N(S): union of open neighborhoods of the members of S.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
/// N[S] = N(S) union S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_orig;  // new id -> old id, ascending
  std::vector<int> to_sub;      // old id -> new id, -1 outside S
};
/// Subgraph induced by a nonempty vertex set; ids are compacted in
/// ascending order of the original ids.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> components(const Graph& g);

}  // namespace ntd
