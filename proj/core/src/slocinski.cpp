#include "permwold/slocinski.hpp"

#include <memory>
#include <set>
#include <stdexcept>

#include "permwold/lebesgue.hpp"

namespace permwold {

std::string to_string(Order order) {
  return order == Order::kST ? "st" : "ts";
}

namespace {

constexpr std::size_t kChainCap = 1'000'000;

Family other(Family f) { return f == Family::S ? Family::T : Family::S; }

Label labels(const CommutingPair& cp, Family f) {
  return f == Family::S ? cp.m() : cp.n();
}

const char* name(Family f) { return f == Family::S ? "S" : "T"; }

}  // namespace

bool chain_is_infinite(const CommutingPair& cp, Family f, const PairElem& x) {
  std::set<PairElem> seen{x};
  PairElem cur = x;
  for (std::size_t step = 0; step < kChainCap; ++step) {
    auto p = pred(cp, f, cur);
    if (!p) return false;
    cur = std::move(p->second);
    if (!seen.insert(cur).second) return true;
  }
  throw std::logic_error("predecessor chain exceeded cap");
}

bool is_periodic(const CommutingPair& cp, Family f, const PairElem& x) {
  std::set<PairElem> seen{x};
  PairElem cur = x;
  for (std::size_t step = 0; step < kChainCap; ++step) {
    auto p = pred(cp, f, cur);
    if (!p) return false;
    cur = std::move(p->second);
    if (cur == x) return true;
    if (!seen.insert(cur).second) return false;
  }
  throw std::logic_error("predecessor chain exceeded cap");
}

std::size_t default_check_depth(const CommutingPair& cp) {
  return std::max<std::size_t>(4, cp.size() + 2);
}

SlocinskiResult slocinski(const CommutingPair& cp, Order order,
                          std::optional<std::size_t> depth) {
  const Family first = order == Order::kST ? Family::S : Family::T;
  const Family second = other(first);
  SlocinskiResult result;
  result.order = order;
  result.checked_depth = depth.value_or(default_check_depth(cp));

  const auto elems = enumerate(cp, result.checked_depth);
  auto fail = [&](int condition, const PairElem& x, std::string what) {
    result.failure_witness =
        SlocinskiWitness{condition, x, std::move(what)};
    return result;
  };

  // (1) the first family's unitary part reduces the second family.
  for (const auto& x : elems) {
    if (!chain_is_infinite(cp, first, x)) continue;
    for (Label l = 1; l <= labels(cp, second); ++l) {
      const PairElem y = apply(cp, second, l, x);
      if (!chain_is_infinite(cp, first, y))
        return fail(1, x,
                    std::string(name(second)) + "_" + std::to_string(l) +
                        " maps " + to_string(cp.presentation(), x) +
                        " out of the unitary part of " + name(first));
    }
    if (auto p = pred(cp, second, x); p && !chain_is_infinite(cp, first, p->second))
      return fail(1, x,
                  std::string(name(second)) + "* maps " +
                      to_string(cp.presentation(), x) +
                      " out of the unitary part of " + name(first));
  }

  // (2) inside the first family's shift part, the second family's unitary
  // part reduces the first family.
  for (const auto& x : elems) {
    if (chain_is_infinite(cp, first, x) || !chain_is_infinite(cp, second, x))
      continue;
    for (Label l = 1; l <= labels(cp, first); ++l) {
      const PairElem y = apply(cp, first, l, x);
      if (!chain_is_infinite(cp, second, y))
        return fail(2, x,
                    std::string(name(first)) + "_" + std::to_string(l) +
                        " maps " + to_string(cp.presentation(), x) +
                        " out of the unitary part of " + name(second));
    }
    if (auto p = pred(cp, first, x); p && !chain_is_infinite(cp, second, p->second))
      return fail(2, x,
                  std::string(name(first)) + "* maps " +
                      to_string(cp.presentation(), x) +
                      " out of the unitary part of " + name(second));
  }

  result.exists = true;
  auto shared = std::make_shared<const CommutingPair>(cp);
  auto part = [&](bool s_unitary, bool t_unitary, std::string label) {
    PairSubspace sub;
    sub.mode = SubspaceMode::kCriterion;
    sub.description = std::move(label);
    sub.member = [shared, s_unitary, t_unitary](const PairElem& x) {
      return chain_is_infinite(*shared, Family::S, x) == s_unitary &&
             chain_is_infinite(*shared, Family::T, x) == t_unitary;
    };
    for (const auto& x : elems)
      if (x.length() == 0 && sub.member(x)) sub.seeds.push_back(x);
    return sub;
  };
  result.H_uu = part(true, true, "S row-unitary, T row-unitary");
  result.H_us = part(true, false, "S row-unitary, T shift");
  result.H_su = part(false, true, "S shift, T row-unitary");
  result.H_ss = part(false, false, "S shift, T shift");
  return result;
}

SlocinskiResult slocinski(const PairPresentation& pp, Order order,
                          std::optional<std::size_t> depth) {
  return slocinski(CommutingPair(pp), order, depth);
}

Multiplicity wandering_multiplicity(const CommutingPair& cp, Family f) {
  const auto& pp = cp.presentation();
  const Presentation& own = pp.family(f);
  const Presentation& partner = pp.family(other(f));
  Multiplicity mult;
  for (NodeId b = 0; b < pp.size(); ++b) {
    if (own.in(b)) continue;
    PairElem base{{}, {}, b};
    mult.generators.push_back(base);
    ++mult.count;
    for (Label l = 1; l <= partner.m(); ++l) {
      if (partner.out(b, l)) continue;
      mult.infinite = true;
      mult.generators.push_back(apply(cp, other(f), l, base));
    }
  }
  if (mult.infinite) {
    mult.description = std::string("infinite: every ") + name(other(f)) +
                       "-word applied to the listed generators";
  } else {
    mult.description = std::to_string(mult.count);
  }
  return mult;
}

HypothesisReport check_hypotheses(const CommutingPair& cp) {
  const auto& pp = cp.presentation();
  auto singular = [](const Presentation& p) {
    for (const auto& comp : classify_unitary(p).components)
      if (comp.kind != UnitaryKind::kSingular) return false;
    return true;
  };
  HypothesisReport h;
  h.doubly_commuting = check_doubly_commute(cp).ok();
  h.s_unitary_singular = singular(pp.s_family());
  h.t_unitary_singular = singular(pp.t_family());
  h.s_shift_finite_multiplicity =
      !wandering_multiplicity(cp, Family::S).infinite;
  h.n_at_least_2_or_theta_identity = cp.n() >= 2 || cp.theta().is_identity();
  return h;
}

bool ImplicationReport::ok() const {
  for (const auto& c : checks)
    if (c.applicable && !c.holds) return false;
  return true;
}

ImplicationReport verify_theorem_implications(
    const CommutingPair& cp, std::optional<std::size_t> depth) {
  const auto& pp = cp.presentation();
  const std::size_t d = depth.value_or(default_check_depth(cp));
  ImplicationReport report;
  report.hypotheses = check_hypotheses(cp);
  const auto& h = report.hypotheses;
  const auto decomposition = slocinski(cp, Order::kST, d);
  report.decomposition_exists = decomposition.exists;
  const std::string no_decomposition =
      decomposition.failure_witness
          ? decomposition.failure_witness->description
          : std::string();

  report.checks.push_back({"doubly commuting => decomposition exists",
                           h.doubly_commuting, decomposition.exists,
                           no_decomposition});
  report.checks.push_back(
      {"singular unitary parts of S and T => decomposition exists",
       h.s_unitary_singular && h.t_unitary_singular, decomposition.exists,
       no_decomposition});
  report.checks.push_back(
      {"singular S unitary part, finite S multiplicity, n >= 2 or identity "
       "theta => decomposition exists",
       h.s_unitary_singular && h.s_shift_finite_multiplicity &&
           h.n_at_least_2_or_theta_identity,
       decomposition.exists, no_decomposition});

  const auto elems = enumerate(cp, d);

  ImplicationCheck invariant{"unitary part of S is T-invariant", true, true, {}};
  ImplicationCheck reduces{"singular S unitary part => it reduces T",
                           h.s_unitary_singular, true, {}};
  ImplicationCheck co_invariant{"PH of S is T*-invariant", cp.m() >= 2, true,
                                {}};
  for (const auto& x : elems) {
    const bool unitary = chain_is_infinite(cp, Family::S, x);
    if (unitary) {
      for (Label j = 1; j <= cp.n() && invariant.holds; ++j) {
        const PairElem y = t_apply(cp, j, x);
        if (!chain_is_infinite(cp, Family::S, y)) {
          invariant.holds = false;
          invariant.witness = "T_" + std::to_string(j) + " " +
                              to_string(pp, x) + " = " + to_string(pp, y);
        }
      }
      if (reduces.applicable && reduces.holds) {
        if (auto p = t_pred(cp, x);
            p && !chain_is_infinite(cp, Family::S, p->second)) {
          reduces.holds = false;
          reduces.witness = "T* " + to_string(pp, x) + " = " +
                            to_string(pp, p->second);
        }
      }
    }
    if (co_invariant.applicable && co_invariant.holds && unitary &&
        is_periodic(cp, Family::S, x)) {
      if (auto p = t_pred(cp, x); p && !is_periodic(cp, Family::S, p->second)) {
        co_invariant.holds = false;
        co_invariant.witness = "T* " + to_string(pp, x) + " = " +
                               to_string(pp, p->second) + " leaves PH";
      }
    }
  }
  report.checks.push_back(std::move(invariant));
  report.checks.push_back(std::move(reduces));
  report.checks.push_back(std::move(co_invariant));

  // A finite-multiplicity m-shift cannot theta-commute with a row-unitary of
  // n >= 2 labels on a nonzero space.
  bool s_pure_shift = true;
  bool t_row_unitary = true;
  for (const auto& x : elems) {
    if (chain_is_infinite(cp, Family::S, x)) s_pure_shift = false;
    if (!t_pred(cp, x)) t_row_unitary = false;
  }
  ImplicationCheck trivial{
      "finite-multiplicity S-shift with row-unitary T, n >= 2 => H = {0}",
      cp.n() >= 2, true, {}};
  if (trivial.applicable && pp.size() > 0 && s_pure_shift && t_row_unitary &&
      h.s_shift_finite_multiplicity) {
    trivial.holds = false;
    trivial.witness = "nonzero space with " + std::to_string(pp.size()) +
                      " base nodes";
  }
  report.checks.push_back(std::move(trivial));
  return report;
}

}  // namespace permwold
