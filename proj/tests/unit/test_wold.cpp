#include "doctest.h"
#include "oracles.hpp"
#include "permwold/oracle.hpp"
#include "permwold/wold.hpp"

using namespace permwold;

TEST_SUITE("wold") {

TEST_CASE("left-regular representation is a shift of multiplicity one") {
  const auto p = free_presentation(2);
  const auto w = wold(p);
  CHECK(w.multiplicity == 1);
  CHECK(w.wandering == std::vector<Elem>{{{}, 0}});
  for (const auto& x : enumerate(p, 4)) {
    CHECK_FALSE(w.unitary_part.contains(x));
    CHECK(w.shift_part.contains(x));
  }
  CHECK_FALSE(is_row_unitary(p));
}

TEST_CASE("a self-loop with one label is a unitary") {
  const Presentation p(1, {"b"}, {{0, 1, 0}});
  const auto w = wold(p);
  CHECK(w.multiplicity == 0);
  CHECK(w.wandering.empty());
  CHECK(w.unitary_part.contains(Elem{{}, 0}));
  CHECK(is_row_unitary(p));
}

TEST_CASE("mixed presentation: cycle plus a free node") {
  const Presentation p(2, {"b", "c"}, {{0, 1, 0}});
  const auto w = wold(p);
  CHECK(w.multiplicity == 1);
  CHECK(w.wandering == std::vector<Elem>{{{}, 1}});
  CHECK(membership(p, Elem{s_word({2}), 0}) == WoldPart::kUnitary);
  CHECK(membership(p, Elem{s_word({2}), 1}) == WoldPart::kShift);

  const auto model = materialize(p, 4);
  CHECK(verify_subspace(model, w.unitary_part, {Claim::kSReducing, Claim::kSUnitaryOn}).ok());
  CHECK(verify_subspace(model, w.shift_part, {Claim::kSReducing, Claim::kSShiftOn}).ok());
  // The two projections sum to the identity.
  const auto basis = std::get<std::vector<Elem>>(model.basis);
  for (const auto& x : basis) CHECK(w.unitary_part.contains(x) != w.shift_part.contains(x));
}

TEST_CASE("is_row_unitary") {
  CHECK(is_row_unitary(Presentation(2, {"b"}, {{0, 1, 0}})));
  CHECK_FALSE(is_row_unitary(free_presentation(3)));
  CHECK(is_row_unitary(Presentation(2, {}, {})));
}

TEST_CASE("cycle detection") {
  // a -> b -> a is a cycle; c -> d hangs off nothing.
  const Presentation p(2, {"a", "b", "c", "d"}, {{0, 1, 1}, {1, 2, 0}, {2, 1, 3}});
  CHECK(cycle_nodes(p) == std::vector<bool>{true, true, false, false});
  const auto cycles = edge_cycles(p);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0] == std::vector<std::pair<NodeId, Label>>{{0, 1}, {1, 2}});
  CHECK(wold(p).multiplicity == 1);
}

TEST_CASE("unitary part matches the intersection of ranges at every truncation") {
  // x lies in the range of every word of length k <= d iff its backward chain
  // has at least k steps; with a finite base an unbounded chain is one longer
  // than |prefix| + |base|.
  for (const auto& p : oracles::all_presentations(2, 2)) {
    const auto basis = enumerate(p, 3);
    const std::size_t cap = 3 + p.size() + 1;
    const auto reach = oracles::backward_reach(
        basis,
        [&](const Elem& x) {
          std::vector<Elem> out;
          for (Label i = 1; i <= p.m(); ++i) out.push_back(apply(p, i, x));
          return out;
        },
        cap);
    const auto w = wold(p);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const bool unbounded = reach[k] > basis[k].prefix.size() + p.size();
      CHECK(w.unitary_part.contains(basis[k]) == unbounded);
    }
  }
}

TEST_CASE("relabeling base nodes keeps the multiplicity") {
  const Presentation p(1, {"a", "b", "c"}, {{0, 1, 1}});
  const Presentation q(1, {"c", "b", "a"}, {{2, 1, 1}});
  CHECK(wold(p).multiplicity == wold(q).multiplicity);
}

}  // TEST_SUITE
