#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "permwold/errors.hpp"
#include "permwold/oracle.hpp"
#include "permwold/search.hpp"
#include "permwold/slocinski.hpp"

using namespace permwold;

namespace {

bool same(const PairPresentation& a, const PairPresentation& b) {
  return a.theta() == b.theta() && a.base() == b.base() &&
         a.s_family().edges() == b.s_family().edges() &&
         a.t_family().edges() == b.t_family().edges();
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("doubly-commuting search includes the pair of self-loops") {
  const auto result = search({1, 1, 1, false}, Property::kDoublyCommuting);
  bool found = false;
  for (const auto& pp : result.matches)
    found = found || (pp.s_family().edges() == std::vector<Edge>{{0, 1, 0}} &&
                      pp.t_family().edges() == std::vector<Edge>{{0, 1, 0}});
  CHECK(found);
  CHECK(result.candidates == 4);
}

TEST_CASE("no finite-multiplicity S-shift commutes with a row-unitary T when n = 2") {
  const auto result = search({2, 2, 2, true}, Property::kSShiftTUnitary);
  CHECK(result.commuting > 0);
  CHECK(result.matches.empty());
}

TEST_CASE("with n = 1 the same property is satisfiable") {
  // S free on one node, T a self-loop: S-wandering space is e_b alone.
  const auto result = search({1, 1, 1, false}, Property::kSShiftTUnitary);
  REQUIRE(result.matches.size() == 1);
  CHECK(result.matches[0].s_family().edges().empty());
}

TEST_CASE("no-slocinski search: every reported pair carries a re-checkable witness") {
  const auto result = search({2, 1, 1, false}, Property::kNoSlocinski);
  for (const auto& pp : result.matches) {
    const auto r = slocinski(pp);
    CHECK_FALSE(r.exists);
    CHECK(r.failure_witness.has_value());
  }
  MESSAGE("pairs failing the criterion: " << result.matches.size() << " of "
                                          << result.commuting << " commuting");
}

TEST_CASE("a commuting pair can lack the four-fold decomposition") {
  // S e_a = e_b, T_1 e_c = e_c, T_2 e_c = e_b. e_b is T-unitary (b <- c <- c
  // <- ...) and S-shift, but S* e_b = e_a is T-wandering.
  const PairPresentation pp(Theta::identity(1, 2), {"a", "b", "c"}, {{0, 1, 1}},
                            {{2, 1, 2}, {2, 2, 1}});
  const CommutingPair cp(pp);
  CHECK_FALSE(slocinski(cp, Order::kST).exists);
  CHECK_FALSE(slocinski(cp, Order::kTS).exists);

  // The matrix oracle agrees: relations hold, and the S-shift/T-unitary
  // vectors (from backward chains of the forward images) are not S-reducing.
  const auto model = materialize(cp, 5);
  CHECK(verify_relations(model).ok());
  const auto& basis = std::get<std::vector<PairElem>>(model.basis);
  auto unbounded = [&](Family f, Label labels) {
    const auto reach = oracles::backward_reach(
        basis,
        [&](const PairElem& x) {
          std::vector<PairElem> out;
          for (Label l = 1; l <= labels; ++l) out.push_back(apply(cp, f, l, x));
          return out;
        },
        64);
    std::vector<bool> out;
    for (std::size_t k = 0; k < basis.size(); ++k) out.push_back(reach[k] > basis[k].length() + 3);
    return out;
  };
  const auto s_u = unbounded(Family::S, 1);
  const auto t_u = unbounded(Family::T, 2);
  std::vector<bool> su(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) su[k] = !s_u[k] && t_u[k];
  CHECK(verify_subspace(model, su, {Claim::kTReducing}).ok());
  CHECK_FALSE(verify_subspace(model, su, {Claim::kSReducing}).ok());

  // Smallest such pairs: none with two base nodes, 24 with three.
  CHECK(search({2, 1, 2, true}, Property::kNoSlocinski).matches.empty());
  const auto three = search({3, 1, 2, true}, Property::kNoSlocinski);
  CHECK(three.matches.size() == 24);
  CHECK(std::any_of(three.matches.begin(), three.matches.end(),
                    [&](const PairPresentation& m) { return same(m, pp); }));
}

TEST_CASE("commuting count matches independent enumeration") {
  const auto result = search({2, 2, 2, true}, Property::kCommuting);
  std::size_t expected = 0;
  for (const auto& cp : oracles::all_commuting_pairs(2, 2))
    if (cp.m() == 2 && cp.n() == 2) ++expected;
  CHECK(result.commuting == expected);
  CHECK(result.matches.size() == expected);
}

TEST_CASE("results do not depend on the number of workers") {
  const auto one = search({2, 2, 1, true}, Property::kDoublyCommuting, kSearchBudget, 1);
  const auto many = search({2, 2, 1, true}, Property::kDoublyCommuting, kSearchBudget, 4);
  REQUIRE(one.matches.size() == many.matches.size());
  for (std::size_t k = 0; k < one.matches.size(); ++k) CHECK(same(one.matches[k], many.matches[k]));
}

TEST_CASE("candidate counts and budget") {
  // one node: 2^(m+n) edge choices per theta
  CHECK(candidate_count({1, 2, 2, false}) == 16);
  CHECK(candidate_count({1, 2, 2, true}) == 16 * 24);
  CHECK(thetas({1, 2, 2, true}).size() == 24);
  CHECK(thetas({1, 2, 2, true}).front().is_identity());
  CHECK_THROWS_AS(search({3, 3, 3, true}, Property::kCommuting), ResourceError);
}

TEST_CASE("property names") {
  for (const auto p : {Property::kCommuting, Property::kDoublyCommuting,
                       Property::kNoSlocinski, Property::kSShiftTUnitary})
    CHECK(parse_property(to_string(p)) == p);
  CHECK_THROWS_AS(parse_property("shift"), ValidationError);
}

}  // TEST_SUITE
