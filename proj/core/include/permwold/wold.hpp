#pragma once

#include <memory>
#include <vector>

#include "permwold/presentation.hpp"
#include "permwold/subspace.hpp"

namespace permwold {

using SubspaceDesc = Subspace<Elem>;

enum class WoldPart { kUnitary, kShift };

struct WoldResult {
  SubspaceDesc unitary_part;
  SubspaceDesc shift_part;
  std::vector<Elem> wandering;  // basis of M = ker S_1* ∩ ... ∩ ker S_m*
  std::size_t multiplicity = 0;
};

/// Per base node, whether it lies on a directed edge-cycle. With in-degree at
/// most one the backward walk is deterministic, so these are exactly the
/// nodes whose backward chain never stops.
std::vector<bool> cycle_nodes(const Presentation& p);

/// Edge-cycles of the base graph, each as (node, label of the outgoing cycle
/// edge), starting at the lowest node id and following the edges.
std::vector<std::vector<std::pair<NodeId, Label>>> edge_cycles(
    const Presentation& p);

/// Forward closure of base-level seeds: x is a member iff its backward
/// pred-chain passes through a seed node.
SubspaceDesc forward_closure(std::shared_ptr<const Presentation> p,
                             std::vector<NodeId> seed_nodes,
                             std::string description = {});

WoldResult wold(const Presentation& p);
bool is_row_unitary(const Presentation& p);
WoldPart membership(const Presentation& p, const Elem& x);

}  // namespace permwold
