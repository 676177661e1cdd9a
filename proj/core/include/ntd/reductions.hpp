#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ntd/gadget.hpp"
#include "ntd/graph.hpp"

namespace ntd {

enum class ReductionKind { domset_to_ntds, fourcopy, subcubic };

const char* reduction_kind_name(ReductionKind kind);

/// target optimum = slope * source optimum + intercept
struct AffineRelation {
  int slope;
  int intercept;
  bool operator==(const AffineRelation&) const = default;
};

/// Output graph of a hardness construction plus per-vertex provenance
/// (source vertex and role tag) and the optimum relation. `source` keeps the
/// input graph for forward maps; artifacts reloaded from disk have
/// `has_source == false` and still support extraction.
struct ReductionArtifact {
  ReductionKind kind;
  Graph output;
  std::vector<Vertex> source_of;      // per output vertex
  std::vector<std::string> role_of;   // per output vertex
  AffineRelation relation;
  int source_n = 0;
  Graph source;
  bool has_source = false;

  /// Output vertex with the given provenance, or -1.
  Vertex vertex_for(Vertex source_vertex, std::string_view role) const;
  /// Output vertices grouped by source vertex.
  std::vector<std::vector<Vertex>> groups() const;
};

/// Per source vertex v, a five-vertex tail v-a-b(-x), b-c(-y) is attached;
/// gamma_nt(output) = gamma(source) + 2n.
ReductionArtifact build_domset_to_ntds(const Graph& g);

/// Normalizes an NTD-set of the output so each tail contributes exactly
/// {b,c}, then strips the tails. Result dominates the source with
/// |result| <= |s| - 2n.
VertexSet extract_domset_from_ntds(const ReductionArtifact& artifact,
                                   const VertexSet& s);

/// Four copies of V; copy 1 and 3 (and 2 and 4) joined along closed
/// neighborhoods, copies 1 x 2 complete bipartite. Output is bipartite with
/// parts (copy1 ∪ copy4) / (copy2 ∪ copy3); gamma_nt(output) =
/// 2 gamma(source). Sources with isolated vertices are rejected.
ReductionArtifact build_fourcopy(const Graph& g);

/// Pushes an NTD-set of the output into copies 1 and 2, keeps the smaller
/// side and projects it back; the result dominates the source and has size
/// <= |d| / 2.
VertexSet extract_domset_fourcopy(const ReductionArtifact& artifact,
                                  const VertexSet& d);

/// Degree-preserving construction for subcubic sources: degree <= 2 vertices
/// get an attach gadget, degree-3 vertices are split (two original edges to
/// v1, one to v2, neighbor order decides). gamma_nt(output) =
/// gamma(source) + n + 2s with s the number of degree-3 vertices.
ReductionArtifact build_subcubic_gadget(const Graph& g,
                                        const GadgetSpec& spec = default_gadget());

/// NTD-set of the output built from a dominating set of the source by the
/// four placement rules; size |d| + (n - s) + 3s.
VertexSet forward_ntd_subcubic(const ReductionArtifact& artifact,
                               const VertexSet& d);

/// Keeps source vertex v iff rho(v) = |T(v) ∩ nd| reaches 2 (degree <= 2)
/// or 4 (degree 3); dominates the source with size <= |nd| - (n-s) - 3s.
VertexSet extract_domset_subcubic(const ReductionArtifact& artifact,
                                  const VertexSet& nd);

}  // namespace ntd
