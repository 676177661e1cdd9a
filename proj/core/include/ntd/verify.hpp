#pragma once

#include <array>
#include <optional>

#include "ntd/graph.hpp"

namespace ntd {

enum class SetKind { dominating, total, ntd };

const char* set_kind_name(SetKind kind);

/// Pass/fail certificate check. On failure `witness` is the least-index
/// violator: an undominated vertex, a vertex with no neighbor in D, or an
/// isolated member of the induced open-neighborhood subgraph.
struct VerifyReport {
  SetKind kind;
  bool pass;
  std::optional<Vertex> witness;
};

VerifyReport is_dominating(const Graph& g, const VertexSet& d);
VerifyReport is_total_dominating(const Graph& g, const VertexSet& d);

/// D dominating and G[N(D)] free of isolated vertices. Rejects graphs that
/// contain an isolated vertex (the parameter is undefined there).
VerifyReport is_ntd(const Graph& g, const VertexSet& d);

VerifyReport verify(const Graph& g, const VertexSet& d, SetKind kind);

/// Necessary condition at a pendant vertex v with support u:
/// v is in D or |N[u] ∩ D| >= 2.
bool pendant_condition(const Graph& g, const VertexSet& d, Vertex v);

/// (gamma, gamma_nt, gamma_t) via the exact oracle; the chain
/// gamma <= gamma_nt <= gamma_t holds on every isolate-free graph.
std::array<int, 3> check_chain(const Graph& g, int limit = 24);

}  // namespace ntd
