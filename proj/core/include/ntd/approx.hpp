#pragma once

#include "ntd/graph.hpp"
#include "ntd/oracle.hpp"

namespace ntd {

/// Set-cover greedy over closed neighborhoods: repeatedly pick the vertex
/// covering the most uncovered vertices, least index on ties.
VertexSet greedy_dominating(const Graph& g);

/// Greedy dominating set D augmented so every member of D gains a neighbor
/// inside the result: for each u in D with no D-neighbor, one neighbor of u
/// is added (the one covering the most such members, least index on ties).
/// The result is a total dominating set, hence an NTD-set, of size <= 2|D|.
VertexSet approx_ntds(const Graph& g);

struct StrictApproxResult {
  VertexSet set;
  bool repaired;  // literal selection failed is_ntd and was replaced
};

/// Literal augmentation rule (candidate neighbors restricted to V' with
/// N(u') ∩ (V \ D) empty); falls back to approx_ntds when the produced set
/// fails verification.
StrictApproxResult approx_ntds_strict(const Graph& g);

struct RatioReport {
  int approx_size;
  int optimum;
  double ratio;
  double bound;  // 2 (ln(max_degree+1) + 1)
};

RatioReport ratio_report(const Graph& g, int limit = kDefaultOracleLimit);

double approx_ratio_bound(const Graph& g);

}  // namespace ntd
