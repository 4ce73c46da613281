// Randomized and exhaustive property checks across modules.

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "permwold/pair.hpp"
#include "permwold/presentation.hpp"

using namespace permwold;

namespace {

Word random_word(std::mt19937& rng, Label m, Label n, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Label> letter(1, m + n);
  Word w;
  for (std::size_t k = len(rng); k > 0; --k) {
    const Label c = letter(rng);
    w.letters.push_back(c <= m ? Letter{Family::S, c} : Letter{Family::T, c - m});
  }
  return w;
}

}  // namespace

TEST_CASE("normalize: idempotent, bidegree-preserving, compatible with concat") {
  std::mt19937 rng(2024);
  const auto thetas = oracles::sample_thetas(3, 2, 8, 11);
  for (int trial = 0; trial < 1000; ++trial) {
    const Theta& theta = thetas[trial % thetas.size()];
    const Word x = random_word(rng, 3, 2, 7);
    const Word y = random_word(rng, 3, 2, 7);
    const Word nx = normalize(theta, x);
    CHECK(normalize(theta, nx) == nx);
    CHECK(nx.count(Family::S) == x.count(Family::S));
    CHECK(nx.count(Family::T) == x.count(Family::T));
    CHECK(normalize(theta, concat(x, y)) ==
          normalize(theta, concat(nx, normalize(theta, y))));
  }
}

TEST_CASE("concat is associative") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Word a = random_word(rng, 2, 2, 4);
    const Word b = random_word(rng, 2, 2, 4);
    const Word c = random_word(rng, 2, 2, 4);
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
  }
}

TEST_CASE("free pairs commute for every theta") {
  for (Label m = 1; m <= 3; ++m)
    for (Label n = 1; n <= 3; ++n) {
      const auto thetas = m * n <= 6 ? oracles::all_thetas(m, n) : oracles::sample_thetas(m, n, 100, 3);
      for (const auto& theta : thetas)
        REQUIRE(check_theta_commute(PairPresentation(theta, {"b"}, {}, {})).ok());
    }
}

TEST_CASE("single family: round trips, disjoint images, nested enumeration") {
  for (const auto& p : oracles::all_presentations(3, 2)) {
    const auto elems = enumerate(p, 3);
    const auto deeper = enumerate(p, 4);
    REQUIRE(std::equal(elems.begin(), elems.end(), deeper.begin()));
    std::set<Elem> images;
    for (const auto& x : elems) {
      if (auto q = pred(p, x)) CHECK(apply(p, q->first, q->second) == x);
      for (Label i = 1; i <= p.m(); ++i) {
        const Elem y = apply(p, i, x);
        CHECK(is_canonical(p, y));
        CHECK(images.insert(y).second);
        const auto q = pred(p, y);
        REQUIRE(q);
        CHECK(q->first == i);
        CHECK(q->second == x);
      }
    }
  }
}

TEST_CASE("commuting pairs: each family is a row-isometry up to depth 4") {
  std::size_t count = 0;
  for (const auto& cp : oracles::all_commuting_pairs(2, 2)) {
    ++count;
    REQUIRE(check_joint_isometry(cp.presentation(), 4).ok());
  }
  CHECK(count > 1000);
}

TEST_CASE("commuting pairs: reduced forms are unique for all absorption orders") {
  for (const auto& cp : oracles::all_commuting_pairs(1, 2)) {
    const auto& pp = cp.presentation();
    for (std::size_t len = 0; len <= 4; ++len)
      for (const auto& w : oracles::all_words(cp.m(), cp.n(), len)) {
        const auto forms = reduce_all(pp, raw_elem(pp, w, 0));
        REQUIRE(forms.size() == 1);
      }
  }
}

TEST_CASE("grading: free pairs raise bidegree by exactly one") {
  const auto thetas = oracles::all_thetas(2, 2);
  for (const auto& theta : thetas) {
    const CommutingPair cp(PairPresentation(theta, {"b"}, {}, {}));
    for (const auto& x : enumerate(cp, 3)) {
      for (Label l = 1; l <= 2; ++l) {
        const auto y = s_apply(cp, l, x);
        CHECK(y.s_prefix.size() == x.s_prefix.size() + 1);
        CHECK(y.t_prefix.size() == x.t_prefix.size());
        const auto z = t_apply(cp, l, x);
        CHECK(z.t_prefix.size() == x.t_prefix.size() + 1);
        CHECK(z.s_prefix.size() == x.s_prefix.size());
      }
    }
  }
}
