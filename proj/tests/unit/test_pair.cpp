#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "permwold/errors.hpp"
#include "permwold/oracle.hpp"
#include "permwold/pair.hpp"

using namespace permwold;

namespace {

Theta swap_theta() {
  // theta(i, j) = (j, i) on 2x2
  return Theta::from_quadruples(2, 2, {{{1, 1, 1, 1}}, {{1, 2, 2, 1}}, {{2, 1, 1, 2}}, {{2, 2, 2, 2}}});
}

Theta cyclic_theta() {
  return Theta::from_quadruples(2, 2, {{{1, 1, 1, 2}}, {{1, 2, 2, 1}}, {{2, 1, 2, 2}}, {{2, 2, 1, 1}}});
}

CommutingPair free_pair(const Theta& theta) {
  return CommutingPair(PairPresentation(theta, {"b"}, {}, {}));
}

}  // namespace

TEST_SUITE("pair") {

TEST_CASE("reduce_elem on the free pair changes nothing") {
  const auto cp = free_pair(swap_theta());
  CHECK(reduce_elem(cp, t_word({1}), s_word({2}), 0) == PairElem{t_word({1}), s_word({2}), 0});
}

TEST_CASE("reduce_elem absorbs both letters through self-loops") {
  const CommutingPair cp(PairPresentation(Theta::identity(1, 1), {"b"}, {{0, 1, 0}}, {{0, 1, 0}}));
  CHECK(reduce_elem(cp, t_word({1}), s_word({1}), 0) == PairElem{{}, {}, 0});
}

TEST_CASE("reduce_elem result is the unique form over all reduction orders") {
  const PairPresentation pp(swap_theta(), {"b"}, {{0, 1, 0}}, {});
  const PairElem raw = raw_elem(pp, concat(t_word({2}), s_word({1})), 0);
  const auto forms = reduce_all(pp, raw);
  REQUIRE(forms.size() == 1);
  CHECK(reduce_raw(pp, raw) == *forms.begin());
  // T_2 S_1 e_b = T_2 e_b: the S-letter is absorbed and T_2 has no edge.
  CHECK(*forms.begin() == PairElem{t_word({2}), {}, 0});
  if (auto cp = certify(pp)) CHECK(reduce_elem(*cp, t_word({2}), s_word({1}), 0) == *forms.begin());
}

TEST_CASE("s_apply pushes the new letter through the T-prefix") {
  const auto theta = cyclic_theta();
  const auto cp = free_pair(theta);
  const auto [ip, jp] = theta(1, 2);
  CHECK(s_apply(cp, 1, PairElem{t_word({2}), {}, 0}) == PairElem{t_word({jp}), s_word({ip}), 0});
}

TEST_CASE("with the identity theta, s_apply prepends to the S-prefix") {
  const auto cp = free_pair(Theta::identity(2, 2));
  const PairElem x{t_word({1, 2}), s_word({2}), 0};
  CHECK(s_apply(cp, 1, x) == PairElem{t_word({1, 2}), s_word({1, 2}), 0});
  CHECK(t_apply(cp, 2, x) == PairElem{t_word({2, 1, 2}), s_word({2}), 0});
}

TEST_CASE("S_i T_j = T_j' S_i' on random elements of the free pair") {
  const auto theta = cyclic_theta();
  const auto cp = free_pair(theta);
  const auto elems = enumerate(cp, 4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::uniform_int_distribution<Label> label(1, 2);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& x = elems[pick(rng)];
    const Label i = label(rng);
    const Label j = label(rng);
    const auto [ip, jp] = theta(i, j);
    CHECK(s_apply(cp, i, t_apply(cp, j, x)) == t_apply(cp, jp, s_apply(cp, ip, x)));
  }
}

TEST_CASE("check_theta_commute") {
  for (const auto& theta : oracles::all_thetas(2, 2))
    CHECK(check_theta_commute(PairPresentation(theta, {"b"}, {}, {})).ok());

  const PairPresentation swap_fix(Theta::identity(1, 1), {"a", "b"},
                                  {{0, 1, 1}, {1, 1, 0}}, {{0, 1, 0}, {1, 1, 1}});
  CHECK(check_theta_commute(swap_fix).ok());

  // S e_a = e_b, T e_a = e_a: T S e_a = T e_b is fresh, S T e_a = e_b.
  const PairPresentation bad(Theta::identity(1, 1), {"a", "b"}, {{0, 1, 1}}, {{0, 1, 0}});
  const auto report = check_theta_commute(bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.failures[0].at == PairElem{{}, {}, 0});
  const std::set<std::optional<PairElem>> values{report.failures[0].lhs, report.failures[0].rhs};
  CHECK(values == std::set<std::optional<PairElem>>{PairElem{{}, {}, 1}, PairElem{t_word({1}), {}, 1}});
  CHECK_THROWS_AS(CommutingPair{bad}, ContractViolation);
  CHECK_FALSE(certify(bad));
}

TEST_CASE("commuting relations that force overlapping ranges are rejected") {
  const auto theta = Theta::from_quadruples(2, 2, {{{1, 1, 1, 1}}, {{1, 2, 2, 1}}, {{2, 1, 1, 2}}, {{2, 2, 2, 2}}});
  const PairPresentation pp(theta, {"a"}, {{0, 1, 0}}, {{0, 2, 0}});
  CHECK(check_theta_commute(pp).ok());
  CHECK_FALSE(check_joint_isometry(pp).ok());
  CHECK_FALSE(certify(pp));
}

TEST_CASE("check_doubly_commute") {
  for (const auto& theta : oracles::all_thetas(2, 2)) {
    const auto cp = free_pair(theta);
    CHECK(check_doubly_commute(cp, 4).ok());
    CHECK(verify_relations(materialize(cp, 4)).doubly_commutes());
  }

  const CommutingPair loops(PairPresentation(Theta::identity(1, 1), {"b"}, {{0, 1, 0}}, {{0, 1, 0}}));
  CHECK(check_doubly_commute(loops).ok());

  // S a unitary on e_b, T free: the verdict must match both sides evaluated
  // as matrices at depth 3.
  const CommutingPair mixed(PairPresentation(Theta::identity(1, 1), {"b"}, {{0, 1, 0}}, {}));
  const bool symbolic = check_doubly_commute(mixed, 3).ok();
  const bool matrices = verify_relations(materialize(mixed, 4)).doubly_commutes();
  CHECK(symbolic == matrices);
  CHECK(symbolic);
}

TEST_CASE("predecessors invert the actions") {
  const CommutingPair cp(PairPresentation(cyclic_theta(), {"a", "b"}, {{0, 2, 1}}, {{0, 1, 0}, {1, 2, 1}}));
  for (const auto& x : enumerate(cp, 3)) {
    for (const Family f : {Family::S, Family::T}) {
      if (auto p = pred(cp, f, x)) CHECK(apply(cp, f, p->first, p->second) == x);
      for (Label l = 1; l <= 2; ++l) {
        const auto q = pred(cp, f, apply(cp, f, l, x));
        REQUIRE(q);
        CHECK(q->first == l);
        CHECK(q->second == x);
      }
    }
  }
}

TEST_CASE("enumerate counts on the free pair") {
  // T_w S_u with |w| + |u| <= 4: sum over L of (L + 1) 2^L
  CHECK(enumerate(free_pair(cyclic_theta()), 4).size() == 129);
  const auto elems = enumerate(free_pair(Theta::identity(1, 1)), 2);
  CHECK(elems.size() == 6);
  CHECK(to_string(free_pair(Theta::identity(1, 1)).presentation(), elems.back()) == "(t1 t1, b)");
}

TEST_CASE("validate reports per-family violations") {
  const PairPresentation pp(Theta::identity(2, 1), {"a", "b"}, {}, {{0, 1, 1}, {1, 1, 1}});
  const auto report = validate(pp);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].message.rfind("T-family: ", 0) == 0);
}

}  // TEST_SUITE
