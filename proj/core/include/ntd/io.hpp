#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ntd/graph.hpp"
#include "ntd/reductions.hpp"

namespace ntd {

/// Edge-list document: header "n m", then m lines "u v" with 1-based ids;
/// lines starting with '#' are comments. Serialization is deterministic
/// (edges with u < v, sorted), so parse(serialize(g)) == g.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// FNV-1a 64 over the canonical serialization, as 16 hex digits.
std::string graph_digest(const Graph& g);

struct ResultDocument {
  std::string algorithm;
  std::string input_digest;
  std::vector<int> set;  // 1-based, sorted
  int size = 0;
  std::optional<bool> verified;
  double wall_time_ms = 0.0;
};

/// One self-describing JSON object, newline-terminated.
std::string serialize_result(const ResultDocument& doc);
ResultDocument parse_result(std::string_view text);

ResultDocument make_result(std::string algorithm, const Graph& input,
                           const VertexSet& set, std::optional<bool> verified,
                           double wall_time_ms);

/// Provenance sidecar: "# kind: <name>" header, then one line
/// "vertex-id<TAB>source-id<TAB>role" per output vertex, ids 1-based.
std::string serialize_provenance(const ReductionArtifact& artifact);

/// Rebuilds an artifact from the two documents; the relation and source
/// vertex count are recomputed from the provenance rows. The source graph is
/// not part of the format, so forward maps are unavailable on the result.
ReductionArtifact parse_artifact(std::string_view graph_text,
                                 std::string_view provenance_text);

}  // namespace ntd
