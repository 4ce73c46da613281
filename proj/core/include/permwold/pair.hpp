#pragma once

// Two permutative families S (m labels) and T (n labels) on one base. Joint
// basis vectors are named T_w S_u e_b, with the letters of T_w S_u in the
// normal form of the theta rewriting system, reduced until neither the
// innermost S-letter nor the innermost T-letter (after being pushed through
// S_u) can be absorbed by an edge at b.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permwold/presentation.hpp"

namespace permwold {

struct PairElem {
  Word t_prefix;
  Word s_prefix;
  NodeId node = 0;

  [[nodiscard]] std::size_t length() const {
    return t_prefix.size() + s_prefix.size();
  }

  friend auto operator<=>(const PairElem&, const PairElem&) = default;
  friend bool operator==(const PairElem&, const PairElem&) = default;
};

class PairPresentation {
 public:
  PairPresentation(Theta theta, std::vector<std::string> base,
                   std::vector<Edge> s_edges, std::vector<Edge> t_edges);

  [[nodiscard]] const Theta& theta() const { return theta_; }
  [[nodiscard]] Label m() const { return theta_.m(); }
  [[nodiscard]] Label n() const { return theta_.n(); }
  [[nodiscard]] std::size_t size() const { return s_.size(); }
  [[nodiscard]] const std::vector<std::string>& base() const { return s_.base(); }
  [[nodiscard]] const std::string& name(NodeId b) const { return s_.name(b); }

  /// Each family on its own, as a single-family presentation of the base.
  [[nodiscard]] const Presentation& s_family() const { return s_; }
  [[nodiscard]] const Presentation& t_family() const { return t_; }

  [[nodiscard]] const Presentation& family(Family f) const {
    return f == Family::S ? s_ : t_;
  }

 private:
  Theta theta_;
  Presentation s_;
  Presentation t_;
};

/// Per-family presentation invariants (functionality, in-degree <= 1).
ValidationReport validate(const PairPresentation& pp);

std::string to_string(const PairPresentation& pp, const PairElem& x);

// --- Reduction machinery. These work on any syntactically valid pair; the
// results are only meaningful once the pair passes check_theta_commute.

/// One absorption of the innermost letter of family `which`, if an edge
/// allows it.
std::optional<PairElem> reduction_step(const PairPresentation& pp,
                                       const PairElem& x, Family which);
bool is_irreducible(const PairPresentation& pp, const PairElem& x);
/// Deterministic reduction: absorb S first, then T, until stuck.
PairElem reduce_raw(const PairPresentation& pp, PairElem x);
/// Every irreducible form reachable by any order of absorptions.
std::set<PairElem> reduce_all(const PairPresentation& pp, const PairElem& x);

/// The element whose name is `word` applied to e_b, in normal form but
/// not reduced.
PairElem raw_elem(const PairPresentation& pp, const Word& word, NodeId b);

struct CommutationFailure {
  PairElem at;          // the basis vector the identity was applied to
  Label i = 1;          // S_i T_j vs T_j' S_i'
  Label j = 1;
  // The two values that should agree; nothing stands for the zero vector.
  // For commutation these are the S-first and T-first reductions.
  std::optional<PairElem> lhs;
  std::optional<PairElem> rhs;
  std::string message;
};

struct CommutationReport {
  std::vector<CommutationFailure> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// S_i T_j = T_j' S_i' checked on every base node and every basis vector one
/// letter off the base: both sides of each identity must reduce to a single
/// canonical name whichever absorption is tried first.
CommutationReport check_theta_commute(const PairPresentation& pp);

/// Each family, acting on the joint names of length <= depth, must be
/// injective with pairwise disjoint label images and be inverted by its
/// adjoint. The theta relations can hold while forcing two ranges to
/// overlap; such a pair does not come from row-isometries.
/// Meaningful only after check_theta_commute passes.
CommutationReport check_joint_isometry(const PairPresentation& pp,
                                       std::size_t depth = 2);

/// A valid pair that passes check_theta_commute and check_joint_isometry;
/// the joint operations below only accept this type.
class CommutingPair {
 public:
  /// Throws ContractViolation if the pair is invalid, does not commute, or
  /// fails the joint isometry check.
  explicit CommutingPair(PairPresentation pp);

  [[nodiscard]] const PairPresentation& presentation() const { return pp_; }
  [[nodiscard]] const Theta& theta() const { return pp_.theta(); }
  [[nodiscard]] Label m() const { return pp_.m(); }
  [[nodiscard]] Label n() const { return pp_.n(); }
  [[nodiscard]] std::size_t size() const { return pp_.size(); }

 private:
  PairPresentation pp_;
};

std::optional<CommutingPair> certify(const PairPresentation& pp);

PairElem reduce_elem(const CommutingPair& cp, const Word& t, const Word& s,
                     NodeId b);
PairElem s_apply(const CommutingPair& cp, Label i, const PairElem& x);
PairElem t_apply(const CommutingPair& cp, Label j, const PairElem& x);
PairElem apply(const CommutingPair& cp, Family f, Label label,
               const PairElem& x);

/// (label, y) with apply(f, label, y) == x, or nothing when x is wandering
/// for that family.
std::optional<std::pair<Label, PairElem>> s_pred(const CommutingPair& cp,
                                                 const PairElem& x);
std::optional<std::pair<Label, PairElem>> t_pred(const CommutingPair& cp,
                                                 const PairElem& x);
std::optional<std::pair<Label, PairElem>> pred(const CommutingPair& cp,
                                               Family f, const PairElem& x);

/// Canonical joint elements with |t_prefix| + |s_prefix| <= depth, ordered by
/// total length, T-length, T-prefix, S-prefix, base order.
std::vector<PairElem> enumerate(const CommutingPair& cp, std::size_t depth);

/// The doubly-commuting identities
///   T_j* S_i = sum_{l : theta(i,l) = (k,j)} S_k T_l*
///   S_i* T_j = sum_{k : theta(i,k) = (l,j)} T_k S_l*
/// evaluated on every canonical element of joint length <= depth (default
/// |base| + 2).
CommutationReport check_doubly_commute(const CommutingPair& cp,
                                       std::optional<std::size_t> depth = {});

}  // namespace permwold
