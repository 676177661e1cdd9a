#pragma once

#include <utility>
#include <vector>

#include "ntd/graph.hpp"

namespace ntd {

/// Wiring of the two degree-bounded gadgets used by the subcubic reduction.
///
/// attach gadget (hosts of degree <= 2): local vertices x1..x4 = 0..3,
/// attached by the single port edge host--x1; `attach_edges` are the internal
/// edges. split gadget (hosts of degree 3): local vertices v1,v2,y1..y6 =
/// 0..7; v1 takes two of the host's original edges, v2 the third, and
/// `split_edges` are the internal edges.
struct GadgetSpec {
  std::vector<std::pair<int, int>> attach_edges;
  std::vector<std::pair<int, int>> split_edges;
};

/// Thresholds the searched gadgets must enforce on every NTD-set of every
/// probe instance: rho(v) = |T(v) ∩ ND| is at least `*_rho_any` always and at
/// least `*_rho_member` whenever the port vertex (v, v1 or v2) is in ND.
struct GadgetContract {
  int attach_rho_any = 1;
  int attach_rho_member = 2;
  int split_rho_any = 3;
  int split_rho_member = 4;
};

/// Exhaustive wiring search in a fixed deterministic order. A candidate is
/// accepted when (a) the contract's rho bounds are provable for arbitrary
/// NTD-sets, (b) a feasible-at-rho-minimum pattern never dominates every
/// port from inside the gadget alone, and (c) the forward construction rules
/// produce verified NTD-sets for every dominating set of every connected
/// subcubic probe host with at most four vertices. Throws
/// errc::no_conforming_gadget when the contract admits no wiring.
GadgetSpec gadget_search(const GadgetContract& contract = {});

/// First conforming wiring under the default contract, computed once.
const GadgetSpec& default_gadget();

}  // namespace ntd
