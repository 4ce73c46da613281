#include "permwold/lebesgue.hpp"

#include <set>
#include <stdexcept>

#include "permwold/errors.hpp"

namespace permwold {

std::string to_string(UnitaryKind kind) {
  return kind == UnitaryKind::kSingular ? "singular" : "dilation-type";
}

std::string to_string(CommutantVerdict verdict) {
  switch (verdict) {
    case CommutantVerdict::kReduces: return "reduces";
    case CommutantVerdict::kDoesNotReduce: return "does-not-reduce";
    case CommutantVerdict::kNotCommuting: return "not-commuting";
  }
  return "?";
}

namespace {

SubspaceDesc explicit_nodes(std::vector<NodeId> nodes, std::size_t base_size,
                            std::string description) {
  std::vector<bool> in(base_size, false);
  SubspaceDesc sub;
  for (NodeId v : nodes) {
    in[v] = true;
    sub.seeds.push_back(Elem{{}, v});
  }
  sub.mode = SubspaceMode::kExplicitFinite;
  sub.description = std::move(description);
  sub.member = [in = std::move(in)](const Elem& x) {
    return x.prefix.empty() && x.node < in.size() && in[x.node];
  };
  return sub;
}

}  // namespace

LebesgueResult classify_unitary(const Presentation& p) {
  auto shared = std::make_shared<const Presentation>(p);
  const UnitaryKind kind =
      p.m() == 1 ? UnitaryKind::kSingular : UnitaryKind::kDilationType;

  LebesgueResult result;
  std::vector<NodeId> sing_nodes;
  std::vector<NodeId> dil_nodes;
  for (auto& cycle : edge_cycles(p)) {
    std::vector<NodeId> nodes;
    for (const auto& [v, label] : cycle) nodes.push_back(v);
    UnitaryComponent comp;
    comp.kind = kind;
    comp.span = forward_closure(shared, nodes, "component of " + p.name(nodes[0]));
    comp.V = explicit_nodes(nodes, p.size(), "cycle nodes");
    comp.cycle = std::move(cycle);
    auto& bucket = kind == UnitaryKind::kSingular ? sing_nodes : dil_nodes;
    bucket.insert(bucket.end(), nodes.begin(), nodes.end());
    result.components.push_back(std::move(comp));
  }

  result.H_sing = forward_closure(shared, sing_nodes, "singular components");
  result.H_dil = forward_closure(shared, dil_nodes, "dilation-type components");
  result.H_abs = explicit_nodes({}, p.size(), "empty");

  SubspaceDesc v_all = explicit_nodes(dil_nodes, p.size(), "V");
  result.PH.mode = SubspaceMode::kCriterion;
  result.PH.description = "H_sing ⊕ V";
  result.PH.seeds = result.H_sing.seeds;
  result.PH.seeds.insert(result.PH.seeds.end(), v_all.seeds.begin(),
                         v_all.seeds.end());
  result.PH.member = [sing = result.H_sing.member,
                      v = std::move(v_all.member)](const Elem& x) {
    return sing(x) || v(x);
  };
  return result;
}

bool stays_in_ph(const Presentation& p, const LebesgueResult& leb,
                 const Elem& x, std::size_t depth) {
  std::set<Elem> frontier{x};
  std::set<Elem> seen{x};
  for (std::size_t step = 0; step <= depth; ++step) {
    std::set<Elem> next;
    for (const auto& y : frontier) {
      if (!leb.PH.contains(y)) return false;
      if (step == depth) continue;
      for (Label i = 1; i <= p.m(); ++i) {
        Elem z = apply(p, i, y);
        if (seen.insert(z).second) next.insert(std::move(z));
      }
    }
    frontier = std::move(next);
  }
  return true;
}

bool sing_membership_test(const Presentation& p, const Elem& x,
                          std::size_t depth) {
  const auto leb = classify_unitary(p);
  if (!leb.PH.contains(x))
    throw PreconditionError("sing_membership_test: " + to_string(p, x) +
                            " is not in PH");
  const bool exact = leb.H_sing.contains(x);
  const bool bounded = stays_in_ph(p, leb, x, depth);
  if (depth >= p.size() + 1 && bounded != exact)
    throw std::logic_error("bounded H_sing test disagrees with classification");
  return exact;
}

namespace {

Elem apply_n(const Presentation& p, const Presentation& n, const Elem& x) {
  Elem y{{}, *n.out(x.node, 1)};
  for (auto it = x.prefix.letters.rbegin(); it != x.prefix.letters.rend(); ++it)
    y = apply(p, it->index, y);
  return y;
}

}  // namespace

CommutantReport check_commutant_reduces_sing(const Presentation& p,
                                             const Presentation& n) {
  if (n.m() != 1 || n.size() != p.size())
    throw PreconditionError("N must be a one-label presentation on the same base");
  for (NodeId b = 0; b < n.size(); ++b)
    if (!n.out(b, 1))
      throw PreconditionError("N has no image for node " + n.name(b));

  const std::size_t depth = p.size() + 1;
  const auto elems = enumerate(p, depth);

  std::set<Elem> images;
  for (const auto& x : elems)
    if (!images.insert(apply_n(p, n, x)).second)
      throw PreconditionError("N is not injective on basis vectors");

  for (const auto& x : elems) {
    if (x.prefix.size() > 1) break;
    for (Label i = 1; i <= p.m(); ++i) {
      const Elem lhs = apply_n(p, n, apply(p, i, x));
      const Elem rhs = apply(p, i, apply_n(p, n, x));
      if (lhs != rhs)
        return {CommutantVerdict::kNotCommuting,
                "N S_" + std::to_string(i) + " " + to_string(p, x) + " = " +
                    to_string(p, lhs) + " but S_" + std::to_string(i) + " N " +
                    to_string(p, x) + " = " + to_string(p, rhs)};
    }
  }

  const auto leb = classify_unitary(p);
  for (const auto& x : elems) {
    if (!leb.H_sing.contains(x)) continue;
    const Elem image = apply_n(p, n, x);
    if (!leb.H_sing.contains(image))
      return {CommutantVerdict::kDoesNotReduce,
              "N maps " + to_string(p, x) + " out of H_sing"};
    for (const auto& y : elems) {
      if (apply_n(p, n, y) == x && !leb.H_sing.contains(y))
        return {CommutantVerdict::kDoesNotReduce,
                "N* maps " + to_string(p, x) + " out of H_sing"};
    }
  }
  return {CommutantVerdict::kReduces, {}};
}

}  // namespace permwold
