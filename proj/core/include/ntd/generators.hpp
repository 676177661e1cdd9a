#pragma once

#include <cstdint>

#include "ntd/graph.hpp"

namespace ntd {

Graph gen_path(int n);
Graph gen_cycle(int n);
/// Star on n vertices, center 0.
Graph gen_star(int n);

/// G(n, p); deterministic for a fixed seed, independent of the platform.
Graph gen_gnp(int n, double p, std::uint64_t seed);

/// Connected proper interval graph sampled directly as a nondecreasing
/// right-boundary profile (position i is adjacent to positions i+1..ell[i]),
/// so the construction order is a certified BCO. `density` in [0,1] scales
/// the expected overlap within a bounded look-ahead window, keeping the edge
/// count linear in n. With `shuffle` the vertex labels are permuted.
Graph gen_proper_interval(int n, double density, std::uint64_t seed,
                          bool shuffle = true);

/// Connected graph with maximum degree 3: a degree-bounded random tree plus
/// random extra edges.
Graph gen_subcubic(int n, std::uint64_t seed);

}  // namespace ntd
