#pragma once

#include "ntd/graph.hpp"
#include "ntd/verify.hpp"

namespace ntd {

inline constexpr int kDefaultOracleLimit = 24;

struct OracleResult {
  int size;
  VertexSet set;
};

/// Exhaustive minimum computation by increasing-cardinality subset search,
/// subsets of each cardinality in lexicographic order; the first passing
/// subset is the certificate, so results are deterministic. Candidates for
/// kind ntd are pre-filtered with the pendant condition.
OracleResult exact_min(const Graph& g, SetKind kind,
                       int limit = kDefaultOracleLimit);

/// Minimum certificate among supersets of `required` (lexicographic over the
/// free vertices).
OracleResult exact_min_with_required(const Graph& g, SetKind kind,
                                     const VertexSet& required,
                                     int limit = kDefaultOracleLimit);

/// ceil(n / (max_degree + 1)); a valid lower bound for all three kinds.
int lower_bound(const Graph& g, SetKind kind);

namespace detail {
// Pruning toggle, exposed so tests can compare against the unpruned search.
OracleResult exact_min_impl(const Graph& g, SetKind kind,
                            const VertexSet& required, int limit,
                            bool pendant_prune);
}  // namespace detail

}  // namespace ntd
