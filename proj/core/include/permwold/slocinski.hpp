#pragma once

// Four-fold Wold decomposition H = H_uu ⊕ H_us ⊕ H_su ⊕ H_ss of a
// theta-commuting pair, where the first index is the type of S and the
// second the type of T (u: row-unitary, s: shift).
//
// The decomposition exists iff (1) the unitary part of the first family
// reduces the second family and (2) inside the shift part of the first
// family, the unitary part of the second family reduces the first. Both
// conditions are tested on every canonical joint element of length at most
// the check depth (default max(4, |base| + 2)).

#include <optional>
#include <string>
#include <vector>

#include "permwold/pair.hpp"
#include "permwold/subspace.hpp"

namespace permwold {

using PairSubspace = Subspace<PairElem>;

enum class Order { kST, kTS };

std::string to_string(Order order);

/// Backward chain of family f from x never stops (x lies in that family's
/// unitary part).
bool chain_is_infinite(const CommutingPair& cp, Family f, const PairElem& x);

/// x lies on a cycle of f-predecessors (x is in the span V of that family's
/// cycle vectors).
bool is_periodic(const CommutingPair& cp, Family f, const PairElem& x);

std::size_t default_check_depth(const CommutingPair& cp);

struct SlocinskiWitness {
  int condition = 1;  // which of the two conditions failed
  PairElem element;
  std::string description;
};

struct SlocinskiResult {
  bool exists = false;
  Order order = Order::kST;
  std::size_t checked_depth = 0;
  PairSubspace H_uu;
  PairSubspace H_us;
  PairSubspace H_su;
  PairSubspace H_ss;
  std::optional<SlocinskiWitness> failure_witness;
};

SlocinskiResult slocinski(const CommutingPair& cp, Order order = Order::kST,
                          std::optional<std::size_t> depth = {});
/// Certifies the pair first; throws ContractViolation when it fails.
SlocinskiResult slocinski(const PairPresentation& pp, Order order = Order::kST,
                          std::optional<std::size_t> depth = {});

/// Wandering vectors of one family in the joint space.
struct Multiplicity {
  bool infinite = false;
  std::size_t count = 0;        // exact when !infinite
  std::vector<PairElem> generators;  // finite description of the wandering set
  std::string description;
};

/// A T-letter that is not absorbed at a node outside the S-range spawns
/// infinitely many S-wandering vectors T_j e_b, T_k T_j e_b, ...; otherwise
/// the S-wandering vectors are exactly the base nodes outside the S-range.
Multiplicity wandering_multiplicity(const CommutingPair& cp, Family f);

struct HypothesisReport {
  bool doubly_commuting = false;
  bool s_unitary_singular = false;
  bool t_unitary_singular = false;
  bool s_shift_finite_multiplicity = false;
  bool n_at_least_2_or_theta_identity = false;
};

HypothesisReport check_hypotheses(const CommutingPair& cp);

struct ImplicationCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;
  std::string witness;
};

struct ImplicationReport {
  HypothesisReport hypotheses;
  bool decomposition_exists = false;
  std::vector<ImplicationCheck> checks;

  [[nodiscard]] bool ok() const;
};

ImplicationReport verify_theorem_implications(
    const CommutingPair& cp, std::optional<std::size_t> depth = {});

}  // namespace permwold
