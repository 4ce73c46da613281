#include "permwold/presentation.hpp"

#include <algorithm>

#include "permwold/errors.hpp"

namespace permwold {

Presentation::Presentation(Label m, std::vector<std::string> base,
                           std::vector<Edge> edges, Family family)
    : m_(m), family_(family), base_(std::move(base)), edges_(std::move(edges)) {
  if (m_ == 0) throw ValidationError("presentation needs at least one label");
  const std::size_t nodes = base_.size();
  out_.assign(nodes * m_, std::nullopt);
  in_.assign(nodes, std::nullopt);
  in_degree_.assign(nodes, 0);
  for (const auto& e : edges_) {
    if (e.from >= nodes || e.to >= nodes)
      throw ValidationError("edge references an unknown node");
    if (e.label < 1 || e.label > m_)
      throw ValidationError("edge label " + std::to_string(e.label) +
                            " out of range");
    out_[static_cast<std::size_t>(e.from) * m_ + (e.label - 1)] = e.to;
    if (!in_[e.to]) in_[e.to] = std::pair{e.label, e.from};
    ++in_degree_[e.to];
  }
}

std::optional<NodeId> Presentation::find(const std::string& name) const {
  const auto it = std::find(base_.begin(), base_.end(), name);
  if (it == base_.end()) return std::nullopt;
  return static_cast<NodeId>(it - base_.begin());
}

Presentation free_presentation(Label m, std::size_t roots) {
  std::vector<std::string> base;
  for (std::size_t r = 0; r < roots; ++r)
    base.push_back(roots == 1 ? "b" : "b" + std::to_string(r + 1));
  return Presentation(m, std::move(base), {});
}

ValidationReport validate(const Presentation& p) {
  ValidationReport report;
  std::vector<std::size_t> per_pair(p.size() * p.m(), 0);
  for (const auto& e : p.edges())
    ++per_pair[static_cast<std::size_t>(e.from) * p.m() + (e.label - 1)];
  for (NodeId b = 0; b < p.size(); ++b) {
    for (Label i = 1; i <= p.m(); ++i) {
      if (per_pair[static_cast<std::size_t>(b) * p.m() + (i - 1)] > 1)
        report.violations.push_back(
            {Violation::Kind::kDuplicateOutEdge,
             {b},
             "node " + p.name(b) + " has several targets for label " +
                 std::to_string(i)});
    }
  }
  for (NodeId b = 0; b < p.size(); ++b) {
    if (p.in_degree(b) <= 1) continue;
    Violation v{Violation::Kind::kInDegree, {b}, {}};
    for (const auto& e : p.edges())
      if (e.to == b) v.nodes.push_back(e.from);
    v.message = "node " + p.name(b) + " has in-degree " +
                std::to_string(p.in_degree(b)) + " (ranges must be disjoint)";
    report.violations.push_back(std::move(v));
  }
  return report;
}

bool is_canonical(const Presentation& p, const Elem& x) {
  if (x.node >= p.size()) return false;
  for (const auto& l : x.prefix.letters)
    if (l.family != p.family() || l.index < 1 || l.index > p.m()) return false;
  if (x.prefix.empty()) return true;
  return !p.out(x.node, x.prefix.letters.back().index).has_value();
}

Elem apply(const Presentation& p, Label i, const Elem& x) {
  if (i < 1 || i > p.m())
    throw ValidationError("label " + std::to_string(i) + " out of range");
  if (x.prefix.empty()) {
    if (const auto target = p.out(x.node, i)) return Elem{{}, *target};
  }
  Elem y;
  y.node = x.node;
  y.prefix.letters.reserve(x.prefix.size() + 1);
  y.prefix.letters.push_back({p.family(), i});
  y.prefix.letters.insert(y.prefix.letters.end(), x.prefix.letters.begin(),
                          x.prefix.letters.end());
  return y;
}

std::optional<std::pair<Label, Elem>> pred(const Presentation& p,
                                           const Elem& x) {
  if (!x.prefix.empty()) {
    Elem y{Word{{x.prefix.letters.begin() + 1, x.prefix.letters.end()}},
           x.node};
    return std::pair{x.prefix.letters.front().index, std::move(y)};
  }
  if (const auto edge = p.in(x.node))
    return std::pair{edge->first, Elem{{}, edge->second}};
  return std::nullopt;
}

std::vector<Elem> enumerate(const Presentation& p, std::size_t depth) {
  std::vector<Elem> out;
  for (std::size_t len = 0; len <= depth; ++len) {
    std::size_t count = 1;
    for (std::size_t c = 0; c < len; ++c) count *= p.m();
    for (std::size_t code = 0; code < count; ++code) {
      const auto labels = decode_labels(code, len, p.m());
      Word prefix;
      for (Label l : labels) prefix.letters.push_back({p.family(), l});
      for (NodeId b = 0; b < p.size(); ++b) {
        Elem x{prefix, b};
        if (is_canonical(p, x)) out.push_back(std::move(x));
      }
    }
  }
  return out;
}

std::string to_string(const Presentation& p, const Elem& x) {
  return "(" + (x.prefix.empty() ? std::string("∅") : to_string(x.prefix)) +
         ", " + p.name(x.node) + ")";
}

}  // namespace permwold
