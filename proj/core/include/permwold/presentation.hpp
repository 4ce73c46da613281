#pragma once

// A finite labelled graph presenting a permutative row-isometry. Each base
// node b is a basis vector e_b; S_i e_b is e_b' when the edge (b, i) -> b'
// exists and otherwise a fresh basis vector named (s_i, b). Fresh vectors
// are never stored, only named.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permwold/words.hpp"

namespace permwold {

using NodeId = std::uint32_t;

struct Edge {
  NodeId from = 0;
  Label label = 1;
  NodeId to = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Canonical name S_prefix e_node of a basis vector. The innermost prefix
/// letter never has an edge at `node`.
struct Elem {
  Word prefix;
  NodeId node = 0;

  friend auto operator<=>(const Elem&, const Elem&) = default;
  friend bool operator==(const Elem&, const Elem&) = default;
};

class Presentation {
 public:
  /// Edges may violate the invariants; validate() reports that. Node ids and
  /// labels must be in range (ValidationError otherwise).
  Presentation(Label m, std::vector<std::string> base, std::vector<Edge> edges,
               Family family = Family::S);

  [[nodiscard]] Label m() const { return m_; }
  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] std::size_t size() const { return base_.size(); }
  [[nodiscard]] const std::vector<std::string>& base() const { return base_; }
  [[nodiscard]] const std::string& name(NodeId b) const { return base_.at(b); }
  [[nodiscard]] std::optional<NodeId> find(const std::string& name) const;
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

  [[nodiscard]] std::optional<NodeId> out(NodeId b, Label i) const {
    return out_[static_cast<std::size_t>(b) * m_ + (i - 1)];
  }
  /// The (unique, when valid) edge into b as (label, source).
  [[nodiscard]] std::optional<std::pair<Label, NodeId>> in(NodeId b) const {
    return in_[b];
  }
  [[nodiscard]] std::size_t in_degree(NodeId b) const { return in_degree_[b]; }

 private:
  Label m_;
  Family family_;
  std::vector<std::string> base_;
  std::vector<Edge> edges_;
  std::vector<std::optional<NodeId>> out_;
  std::vector<std::optional<std::pair<Label, NodeId>>> in_;
  std::vector<std::size_t> in_degree_;
};

/// The left-regular representation on `roots` free generators (one base
/// node per root, no edges).
Presentation free_presentation(Label m, std::size_t roots = 1);

struct Violation {
  enum class Kind { kDuplicateOutEdge, kInDegree };
  Kind kind;
  std::vector<NodeId> nodes;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Presentation& p);

[[nodiscard]] bool is_canonical(const Presentation& p, const Elem& x);

/// S_i e_x, absorbed to canonical form.
Elem apply(const Presentation& p, Label i, const Elem& x);

/// The unique (i, y) with apply(i, y) == x, or nothing when e_x is wandering.
std::optional<std::pair<Label, Elem>> pred(const Presentation& p,
                                           const Elem& x);

/// All canonical elements with |prefix| <= depth, ordered by prefix length,
/// then prefix (lexicographic by label), then base-node order.
std::vector<Elem> enumerate(const Presentation& p, std::size_t depth);

std::string to_string(const Presentation& p, const Elem& x);

}  // namespace permwold
