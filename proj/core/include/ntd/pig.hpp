#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ntd/graph.hpp"

namespace ntd {

/// Bi-compatible elimination ordering of a connected proper interval graph:
/// sigma and its reverse are both perfect elimination orderings, consecutive
/// vertices are adjacent, and for position i (0-based)
///   ell[i]  = max position among i and the later neighbors of sigma[i],
///   fdeg[i] = number of neighbors of sigma[i] at later positions.
/// ell is nondecreasing and every edge spans a clique interval.
struct Bco {
  std::vector<Vertex> sigma;
  std::vector<int> position;  // inverse of sigma
  std::vector<int> ell;
  std::vector<int> fdeg;
};

/// Standard linear-time perfect elimination ordering check.
bool is_peo(const Graph& g, const std::vector<Vertex>& sigma);

/// True iff sigma and reverse(sigma) are both PEOs of g.
bool is_bco(const Graph& g, const std::vector<Vertex>& sigma);

struct EllArrays {
  std::vector<int> ell;
  std::vector<int> fdeg;
};
EllArrays compute_ell(const Graph& g, const std::vector<Vertex>& sigma);

/// Multi-sweep lexicographic BFS followed by an is_bco certification pass.
/// The ordering is flipped, if needed, so that sigma[0] < sigma[n-1].
Bco recognize_and_order(const Graph& g);

/// One solver iteration. Positions are 0-based; `next` is the position
/// considered next, or -1 when the case returns immediately (case 4).
struct TraceStep {
  int iteration;
  int considered;
  int case_id;  // 1..5
  std::vector<int> picked;
  int next;
};

struct SolverTrace {
  std::vector<TraceStep> steps;
  /// Line-oriented text form, 1-based positions:
  ///   iter=1 i=1 case=2 picked=1,4 next=5
  std::string to_text() const;
};

struct PigResult {
  VertexSet set;
  SolverTrace trace;
  Bco bco;
};

/// Minimum NTD-set of a connected proper interval graph. Graphs with at most
/// two vertices short-circuit to the full vertex set.
PigResult mntds_pig(const Graph& g);

struct BenchPoint {
  long long n;
  long long m;
  double seconds;
  long peak_rss_kb;
};

/// Generates a connected proper interval graph of the requested size and
/// times one mntds_pig run (recognition included).
BenchPoint mntds_pig_linear_bench(int n, double density, std::uint64_t seed);

struct LinearFit {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> rel_residuals;  // (fit - t) / t per point
};

/// Least squares of t against x with 1/t^2 weights; timing noise is
/// multiplicative across decades of x, and the fit is judged by its
/// relative residuals.
LinearFit fit_time_linear(const std::vector<double>& x,
                          const std::vector<double>& t);

}  // namespace ntd
