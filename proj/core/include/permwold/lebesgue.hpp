#pragma once

// Lebesgue-Wold classification of the unitary part of a permutative
// row-isometry. Every unitary component is generated by one edge-cycle of
// the base graph. With one label a cycle is a finite permutation unitary
// (pure point spectrum, so singular); with m >= 2 each cycle node also emits
// fresh branches and the component is the minimal isometric dilation of its
// compression to V = span of the cycle nodes.

#include <vector>

#include "permwold/wold.hpp"

namespace permwold {

enum class UnitaryKind { kSingular, kDilationType };

std::string to_string(UnitaryKind kind);

struct UnitaryComponent {
  std::vector<std::pair<NodeId, Label>> cycle;
  SubspaceDesc span;  // forward closure of the cycle nodes
  UnitaryKind kind = UnitaryKind::kSingular;
  SubspaceDesc V;     // explicit-finite: the cycle nodes
};

struct LebesgueResult {
  std::vector<UnitaryComponent> components;
  SubspaceDesc H_sing;
  SubspaceDesc H_dil;
  SubspaceDesc H_abs;  // always empty for permutative presentations
  SubspaceDesc PH;     // range of the structure projection: H_sing ⊕ V
};

LebesgueResult classify_unitary(const Presentation& p);

/// Whether e_x, for x in PH, lies in H_sing. Checks S_w e_x ∈ PH for every
/// |w| <= depth and returns the exact answer; when depth >= |base| + 1 the
/// bounded check must agree (std::logic_error otherwise).
/// Throws PreconditionError when x is not in PH.
bool sing_membership_test(const Presentation& p, const Elem& x,
                          std::size_t depth);

/// Bounded half of sing_membership_test on its own.
bool stays_in_ph(const Presentation& p, const LebesgueResult& leb,
                 const Elem& x, std::size_t depth);

enum class CommutantVerdict { kReduces, kDoesNotReduce, kNotCommuting };

std::string to_string(CommutantVerdict verdict);

struct CommutantReport {
  CommutantVerdict verdict = CommutantVerdict::kReduces;
  std::string detail;
};

/// `n` is a one-label presentation on the same base that must have an edge
/// at every node; it acts by N S_u e_b = S_u e_{N b}. Commutation with every
/// S_i is checked on the base and one fresh layer, then N(H_sing) and
/// N*(H_sing) are tested against H_sing.
/// Throws PreconditionError if n is not total on the base or the bases
/// differ.
CommutantReport check_commutant_reduces_sing(const Presentation& p,
                                             const Presentation& n);

}  // namespace permwold
