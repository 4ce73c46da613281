#include "permwold/wold.hpp"

#include <algorithm>

namespace permwold {

std::string to_string(SubspaceMode mode) {
  switch (mode) {
    case SubspaceMode::kForwardClosure: return "forward-closure";
    case SubspaceMode::kFullSpace: return "full-space";
    case SubspaceMode::kExplicitFinite: return "explicit-finite";
    case SubspaceMode::kCriterion: return "criterion";
  }
  return "?";
}

namespace {

// Follows in-edges from b. Stops after |base| steps, which is enough to
// either hit an in-degree-0 node or be inside a cycle.
bool backward_chain_is_infinite(const Presentation& p, NodeId b) {
  NodeId cur = b;
  for (std::size_t step = 0; step <= p.size(); ++step) {
    const auto edge = p.in(cur);
    if (!edge) return false;
    cur = edge->second;
  }
  return true;
}

}  // namespace

std::vector<bool> cycle_nodes(const Presentation& p) {
  std::vector<bool> on_cycle(p.size(), false);
  for (NodeId b = 0; b < p.size(); ++b) {
    NodeId cur = b;
    for (std::size_t step = 0; step < p.size(); ++step) {
      const auto edge = p.in(cur);
      if (!edge) break;
      cur = edge->second;
      if (cur == b) {
        on_cycle[b] = true;
        break;
      }
    }
  }
  return on_cycle;
}

std::vector<std::vector<std::pair<NodeId, Label>>> edge_cycles(
    const Presentation& p) {
  const auto on_cycle = cycle_nodes(p);
  std::vector<bool> done(p.size(), false);
  std::vector<std::vector<std::pair<NodeId, Label>>> cycles;
  for (NodeId start = 0; start < p.size(); ++start) {
    if (!on_cycle[start] || done[start]) continue;
    // Backward walk gives the cycle in reverse.
    std::vector<NodeId> backward{start};
    for (NodeId cur = p.in(start)->second; cur != start;
         cur = p.in(cur)->second)
      backward.push_back(cur);
    std::vector<NodeId> forward{start};
    forward.insert(forward.end(), backward.rbegin(), backward.rend() - 1);
    std::vector<std::pair<NodeId, Label>> cycle;
    for (std::size_t k = 0; k < forward.size(); ++k) {
      const NodeId next = forward[(k + 1) % forward.size()];
      cycle.emplace_back(forward[k], p.in(next)->first);
      done[forward[k]] = true;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

SubspaceDesc forward_closure(std::shared_ptr<const Presentation> p,
                             std::vector<NodeId> seed_nodes,
                             std::string description) {
  std::vector<bool> seeded(p->size(), false);
  for (NodeId s : seed_nodes) seeded[s] = true;
  // A node is covered when its backward chain (itself included) meets a seed.
  std::vector<bool> covered(p->size(), false);
  for (NodeId b = 0; b < p->size(); ++b) {
    NodeId cur = b;
    for (std::size_t step = 0; step <= p->size(); ++step) {
      if (seeded[cur]) {
        covered[b] = true;
        break;
      }
      const auto edge = p->in(cur);
      if (!edge) break;
      cur = edge->second;
    }
  }
  SubspaceDesc sub;
  for (NodeId s : seed_nodes) sub.seeds.push_back(Elem{{}, s});
  sub.mode = SubspaceMode::kForwardClosure;
  sub.description = std::move(description);
  sub.member = [covered = std::move(covered)](const Elem& x) {
    return x.node < covered.size() && covered[x.node];
  };
  return sub;
}

WoldResult wold(const Presentation& p) {
  auto shared = std::make_shared<const Presentation>(p);
  const auto on_cycle = cycle_nodes(p);
  std::vector<NodeId> cycle_seeds;
  std::vector<NodeId> wandering_seeds;
  for (NodeId b = 0; b < p.size(); ++b) {
    if (on_cycle[b]) cycle_seeds.push_back(b);
    if (p.in_degree(b) == 0) wandering_seeds.push_back(b);
  }
  WoldResult result;
  result.unitary_part =
      forward_closure(shared, cycle_seeds, "forward closure of cycle nodes");
  result.shift_part = forward_closure(shared, wandering_seeds,
                                      "forward closure of wandering nodes");
  for (NodeId b : wandering_seeds) result.wandering.push_back(Elem{{}, b});
  result.multiplicity = result.wandering.size();
  return result;
}

bool is_row_unitary(const Presentation& p) {
  for (NodeId b = 0; b < p.size(); ++b)
    if (p.in_degree(b) != 1) return false;
  return true;
}

WoldPart membership(const Presentation& p, const Elem& x) {
  return backward_chain_is_infinite(p, x.node) ? WoldPart::kUnitary
                                               : WoldPart::kShift;
}

}  // namespace permwold
