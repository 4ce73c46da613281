#include "doctest.h"
#include "oracles.hpp"
#include "permwold/errors.hpp"
#include "permwold/oracle.hpp"
#include "permwold/wold.hpp"

using namespace permwold;

namespace {

std::size_t nonzero_columns(const SparseMatrix& m) {
  std::size_t out = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) out += m.column(c).empty() ? 0 : 1;
  return out;
}

bool mentions(const std::vector<std::string>& failures, const std::string& needle) {
  for (const auto& f : failures)
    if (f.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("sparse matrix arithmetic") {
  SparseMatrix a(2, 2);
  a.add(0, 1, 1);
  a.add(1, 0, 2);
  CHECK(a.at(0, 1) == 1);
  CHECK(a.transpose().at(1, 0) == 1);
  CHECK(a * SparseMatrix::identity(2) == a);
  const SparseMatrix sq = a * a;
  CHECK(sq.at(0, 0) == 2);
  CHECK(sq.at(1, 1) == 2);
  SparseMatrix b(2, 2);
  b.add(0, 1, -1);
  CHECK((a + b).column(1).empty());
  CHECK(SparseMatrix::diagonal({true, false}).at(0, 0) == 1);
}

TEST_CASE("free presentation, depth 2") {
  const auto model = materialize(free_presentation(2), 2);
  CHECK(model.size() == 7);
  for (const auto* g : model.family(Family::S)) CHECK(nonzero_columns(g->matrix) == 3);
  std::size_t interior = 0;
  for (std::size_t x = 0; x < model.size(); ++x) interior += model.interior(x, 1) ? 1 : 0;
  CHECK(interior == 3);
}

TEST_CASE("a one-label self-loop is the 1x1 identity") {
  const auto model = materialize(Presentation(1, {"b"}, {{0, 1, 0}}), 3);
  REQUIRE(model.size() == 1);
  CHECK(model.generators[0].matrix == SparseMatrix::identity(1));
}

TEST_CASE("matrices agree with apply on a mixed presentation") {
  const Presentation p(2, {"b", "c"}, {{0, 1, 0}});
  const auto model = materialize(p, 3);
  const auto& basis = std::get<std::vector<Elem>>(model.basis);
  CHECK(basis == oracles::brute_enumerate(p, 3));
  for (const auto& g : model.generators)
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const Elem y = apply(p, g.label, basis[c]);
      const auto it = std::find(basis.begin(), basis.end(), y);
      if (it == basis.end()) {
        CHECK(g.matrix.column(c).empty());
      } else {
        CHECK(g.matrix.column(c) ==
              std::vector<SparseMatrix::Entry>{{std::size_t(it - basis.begin()), 1}});
      }
    }
}

TEST_CASE("verify_relations") {
  CHECK(verify_relations(materialize(free_presentation(2), 4)).ok());

  const Presentation dil(2, {"b"}, {{0, 1, 0}});
  const auto model = materialize(dil, 4);
  CHECK(verify_relations(model).ok());
  for (std::size_t x = 0; x < model.size(); ++x) CHECK(model.s_unitary[x]);

  const Presentation corrupt(2, {"b", "c"}, {{0, 1, 1}, {0, 2, 1}});
  const auto report = verify_relations(materialize(corrupt, 3));
  CHECK_FALSE(report.ok());
  CHECK(mentions(report.failures, "S1^T S2"));
}

TEST_CASE("relations on a pair model") {
  const auto theta = Theta::from_quadruples(2, 2, {{{1, 1, 1, 2}}, {{1, 2, 2, 1}}, {{2, 1, 2, 2}}, {{2, 2, 1, 1}}});
  const CommutingPair cp(PairPresentation(theta, {"a", "b"}, {{0, 2, 1}}, {{0, 1, 0}, {1, 2, 1}}));
  const auto report = verify_relations(materialize(cp, 4));
  CHECK(report.ok());
}

TEST_CASE("verify_subspace") {
  const auto free = free_presentation(2);
  const auto model = materialize(free, 4);
  CHECK(verify_subspace(model, wold(free).shift_part, {Claim::kSReducing, Claim::kSShiftOn}).ok());

  const Presentation cycle(1, {"a", "b"}, {{0, 1, 1}, {1, 1, 0}});
  CHECK(verify_subspace(materialize(cycle, 4), wold(cycle).unitary_part, {Claim::kSUnitaryOn}).ok());

  // span{S_1 e_b}: not reducing (S_1* maps it to e_b, S_i maps it out).
  std::vector<bool> mask(model.size(), false);
  mask[1] = true;
  const auto report = verify_subspace(model, mask, {Claim::kSReducing});
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.failures.empty());
  // S_1 e_b is in the range of S, so the unitary claim alone holds there;
  // it fails on the wandering vector e_b.
  CHECK(verify_subspace(model, mask, {Claim::kSUnitaryOn}).ok());
  std::vector<bool> root(model.size(), false);
  root[0] = true;
  CHECK_FALSE(verify_subspace(model, root, {Claim::kSUnitaryOn}).ok());
}

TEST_CASE("identities that hold at depth d hold at smaller depths") {
  const Presentation p(2, {"a", "b", "c"}, {{0, 1, 1}, {1, 1, 0}, {2, 2, 2}});
  for (std::size_t d = 1; d <= 5; ++d) CHECK(verify_relations(materialize(p, d)).ok());
  // Interior flags nest: reach grows with depth.
  const auto small = materialize(p, 3);
  const auto large = materialize(p, 4);
  for (std::size_t x = 0; x < small.size(); ++x)
    CHECK(small.reach[x] + 1 == large.reach[x]);
}

TEST_CASE("budgets and bad depths") {
  CHECK_THROWS_AS(materialize(free_presentation(3), 20), ResourceError);
  CHECK_THROWS_AS(materialize(free_presentation(2), 4, 10), ResourceError);
  CHECK_THROWS_AS(materialize(free_presentation(2), 0), std::invalid_argument);
  CHECK(default_oracle_depth(1) == 4);
  CHECK(default_oracle_depth(5) == 7);
}

TEST_CASE("claim names") {
  CHECK(to_string(Claim::kSReducing) == "S-reducing");
  CHECK(to_string(Claim::kTShiftOn) == "T-shift-on");
}

}  // TEST_SUITE
