#include "permwold/pair.hpp"

#include <algorithm>
#include <map>

#include "permwold/errors.hpp"

namespace permwold {

PairPresentation::PairPresentation(Theta theta, std::vector<std::string> base,
                                   std::vector<Edge> s_edges,
                                   std::vector<Edge> t_edges)
    : theta_(std::move(theta)),
      s_(theta_.m(), base, std::move(s_edges), Family::S),
      t_(theta_.n(), std::move(base), std::move(t_edges), Family::T) {}

ValidationReport validate(const PairPresentation& pp) {
  ValidationReport report;
  for (const Family f : {Family::S, Family::T}) {
    for (auto& v : validate(pp.family(f)).violations) {
      v.message = (f == Family::S ? "S-family: " : "T-family: ") + v.message;
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

std::string to_string(const PairPresentation& pp, const PairElem& x) {
  const Word w = concat(x.t_prefix, x.s_prefix);
  return "(" + (w.empty() ? std::string("∅") : to_string(w)) + ", " +
         pp.name(x.node) + ")";
}

namespace {

// T_t S_{u0} S_{u1} ... = S_{u0'} S_{u1'} ... T_{t'}: push one T-letter to
// the inside using theta^{-1} on each adjacent pair.
std::pair<Word, Label> push_t_inward(const Theta& theta, Label t,
                                     const Word& u) {
  Word out = u;
  for (auto& letter : out.letters) {
    const auto [i, j] = theta.inverse(letter.index, t);
    letter.index = i;
    t = j;
  }
  return {std::move(out), t};
}

// S_i T_{w0} T_{w1} ... = T_{w0'} T_{w1'} ... S_{i'}.
std::pair<Word, Label> push_s_inward(const Theta& theta, Label i,
                                     const Word& w) {
  Word out = w;
  for (auto& letter : out.letters) {
    const auto [ip, jp] = theta(i, letter.index);
    letter.index = jp;
    i = ip;
  }
  return {std::move(out), i};
}

// T_w S_s = S_a T_{w'}: pull an S-letter out past every T-letter.
std::pair<Label, Word> pull_s_outward(const Theta& theta, const Word& w,
                                      Label s) {
  Word out = w;
  for (auto it = out.letters.rbegin(); it != out.letters.rend(); ++it) {
    const auto [a, b] = theta.inverse(s, it->index);
    it->index = b;
    s = a;
  }
  return {s, std::move(out)};
}

// S_u T_t = T_c S_{u'}.
std::pair<Label, Word> pull_t_outward(const Theta& theta, const Word& u,
                                      Label t) {
  Word out = u;
  for (auto it = out.letters.rbegin(); it != out.letters.rend(); ++it) {
    const auto [ip, jp] = theta(it->index, t);
    it->index = ip;
    t = jp;
  }
  return {t, std::move(out)};
}

Word tail(const Word& w) {
  return Word{{w.letters.begin() + 1, w.letters.end()}};
}

Word prepend(Family f, Label l, const Word& w) {
  Word out;
  out.letters.reserve(w.size() + 1);
  out.letters.push_back({f, l});
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

}  // namespace

std::optional<PairElem> reduction_step(const PairPresentation& pp,
                                       const PairElem& x, Family which) {
  if (which == Family::S) {
    if (x.s_prefix.empty()) return std::nullopt;
    const auto target =
        pp.s_family().out(x.node, x.s_prefix.letters.back().index);
    if (!target) return std::nullopt;
    PairElem y = x;
    y.s_prefix.letters.pop_back();
    y.node = *target;
    return y;
  }
  if (x.t_prefix.empty()) return std::nullopt;
  auto [u, t] = push_t_inward(pp.theta(), x.t_prefix.letters.back().index,
                              x.s_prefix);
  const auto target = pp.t_family().out(x.node, t);
  if (!target) return std::nullopt;
  PairElem y;
  y.t_prefix = x.t_prefix;
  y.t_prefix.letters.pop_back();
  y.s_prefix = std::move(u);
  y.node = *target;
  return y;
}

bool is_irreducible(const PairPresentation& pp, const PairElem& x) {
  return !reduction_step(pp, x, Family::S) && !reduction_step(pp, x, Family::T);
}

PairElem reduce_raw(const PairPresentation& pp, PairElem x) {
  for (;;) {
    if (auto y = reduction_step(pp, x, Family::S)) {
      x = std::move(*y);
    } else if (auto z = reduction_step(pp, x, Family::T)) {
      x = std::move(*z);
    } else {
      return x;
    }
  }
}

namespace {

PairElem reduce_preferring(const PairPresentation& pp, PairElem x,
                           Family first) {
  const Family second = first == Family::S ? Family::T : Family::S;
  for (;;) {
    if (auto y = reduction_step(pp, x, first)) {
      x = std::move(*y);
    } else if (auto z = reduction_step(pp, x, second)) {
      x = std::move(*z);
    } else {
      return x;
    }
  }
}

void collect_forms(const PairPresentation& pp, const PairElem& x,
                   std::set<PairElem>& visited, std::set<PairElem>& forms) {
  if (!visited.insert(x).second) return;
  auto s = reduction_step(pp, x, Family::S);
  auto t = reduction_step(pp, x, Family::T);
  if (!s && !t) {
    forms.insert(x);
    return;
  }
  if (s) collect_forms(pp, *s, visited, forms);
  if (t) collect_forms(pp, *t, visited, forms);
}

}  // namespace

std::set<PairElem> reduce_all(const PairPresentation& pp, const PairElem& x) {
  std::set<PairElem> visited;
  std::set<PairElem> forms;
  collect_forms(pp, x, visited, forms);
  return forms;
}

PairElem raw_elem(const PairPresentation& pp, const Word& word, NodeId b) {
  const Word nf = normalize(pp.theta(), word);
  PairElem x;
  x.node = b;
  for (const auto& l : nf.letters)
    (l.family == Family::T ? x.t_prefix : x.s_prefix).letters.push_back(l);
  return x;
}

CommutationReport check_theta_commute(const PairPresentation& pp) {
  std::vector<PairElem> sites;
  for (NodeId b = 0; b < pp.size(); ++b) sites.push_back(PairElem{{}, {}, b});
  for (NodeId b = 0; b < pp.size(); ++b) {
    for (Label k = 1; k <= pp.m(); ++k) {
      PairElem x{{}, s_word({k}), b};
      if (is_irreducible(pp, x)) sites.push_back(std::move(x));
    }
    for (Label l = 1; l <= pp.n(); ++l) {
      PairElem x{t_word({l}), {}, b};
      if (is_irreducible(pp, x)) sites.push_back(std::move(x));
    }
  }

  CommutationReport report;
  for (const auto& x : sites) {
    for (Label i = 1; i <= pp.m(); ++i) {
      for (Label j = 1; j <= pp.n(); ++j) {
        Word word{{{Family::S, i}, {Family::T, j}}};
        word = concat(word, concat(x.t_prefix, x.s_prefix));
        const PairElem raw = raw_elem(pp, word, x.node);
        const auto forms = reduce_all(pp, raw);
        if (forms.size() == 1) continue;
        const auto [ip, jp] = pp.theta()(i, j);
        CommutationFailure f;
        f.at = x;
        f.i = i;
        f.j = j;
        f.lhs = reduce_preferring(pp, raw, Family::S);
        f.rhs = reduce_preferring(pp, raw, Family::T);
        f.message = "S_" + std::to_string(i) + " T_" + std::to_string(j) +
                    " vs T_" + std::to_string(jp) + " S_" +
                    std::to_string(ip) + " on " + to_string(pp, x) + ": " +
                    std::to_string(forms.size()) + " distinct values, e.g. " +
                    to_string(pp, *f.lhs) + " and " + to_string(pp, *f.rhs);
        report.failures.push_back(std::move(f));
      }
    }
  }
  return report;
}

CommutingPair::CommutingPair(PairPresentation pp) : pp_(std::move(pp)) {
  const auto valid = validate(pp_);
  if (!valid.ok())
    throw ContractViolation("invalid pair: " + valid.violations.front().message);
  const auto commute = check_theta_commute(pp_);
  if (!commute.ok())
    throw ContractViolation("pair does not theta-commute: " +
                            commute.failures.front().message);
  const auto isometric = check_joint_isometry(pp_);
  if (!isometric.ok())
    throw ContractViolation("relations do not define a pair of row-isometries: " +
                            isometric.failures.front().message);
}

std::optional<CommutingPair> certify(const PairPresentation& pp) {
  try {
    return CommutingPair(pp);
  } catch (const ContractViolation&) {
    return std::nullopt;
  }
}

PairElem reduce_elem(const CommutingPair& cp, const Word& t, const Word& s,
                     NodeId b) {
  const auto& pp = cp.presentation();
  check_word(pp.theta(), t);
  check_word(pp.theta(), s);
  if (b >= pp.size()) throw ValidationError("unknown node");
  return reduce_raw(pp, raw_elem(pp, concat(t, s), b));
}

namespace {

PairElem s_apply_raw(const PairPresentation& pp, Label i, const PairElem& x) {
  if (i < 1 || i > pp.m())
    throw ValidationError("S label " + std::to_string(i) + " out of range");
  auto [w, inner] = push_s_inward(pp.theta(), i, x.t_prefix);
  PairElem y{std::move(w), prepend(Family::S, inner, x.s_prefix), x.node};
  return reduce_raw(pp, std::move(y));
}

PairElem t_apply_raw(const PairPresentation& pp, Label j, const PairElem& x) {
  if (j < 1 || j > pp.n())
    throw ValidationError("T label " + std::to_string(j) + " out of range");
  PairElem y{prepend(Family::T, j, x.t_prefix), x.s_prefix, x.node};
  return reduce_raw(pp, std::move(y));
}

// x = T_w S_u e_b = S_a (T_w' S_u' e_b'): peel the outermost S-letter.
std::optional<std::pair<Label, PairElem>> s_pred_raw(const PairPresentation& pp,
                                                     const PairElem& x) {
  if (!x.s_prefix.empty()) {
    auto [a, w] =
        pull_s_outward(pp.theta(), x.t_prefix, x.s_prefix.letters.front().index);
    PairElem y{std::move(w), tail(x.s_prefix), x.node};
    return std::pair{a, reduce_raw(pp, std::move(y))};
  }
  const auto edge = pp.s_family().in(x.node);
  if (!edge) return std::nullopt;
  auto [a, w] = pull_s_outward(pp.theta(), x.t_prefix, edge->first);
  return std::pair{a, reduce_raw(pp, PairElem{std::move(w), {}, edge->second})};
}

std::optional<std::pair<Label, PairElem>> t_pred_raw(const PairPresentation& pp,
                                                     const PairElem& x) {
  if (!x.t_prefix.empty()) {
    PairElem y{tail(x.t_prefix), x.s_prefix, x.node};
    return std::pair{x.t_prefix.letters.front().index,
                     reduce_raw(pp, std::move(y))};
  }
  const auto edge = pp.t_family().in(x.node);
  if (!edge) return std::nullopt;
  auto [c, u] = pull_t_outward(pp.theta(), x.s_prefix, edge->first);
  return std::pair{c, reduce_raw(pp, PairElem{{}, std::move(u), edge->second})};
}

PairElem apply_raw(const PairPresentation& pp, Family f, Label label,
                   const PairElem& x) {
  return f == Family::S ? s_apply_raw(pp, label, x) : t_apply_raw(pp, label, x);
}

std::optional<std::pair<Label, PairElem>> pred_raw(const PairPresentation& pp,
                                                   Family f, const PairElem& x) {
  return f == Family::S ? s_pred_raw(pp, x) : t_pred_raw(pp, x);
}

std::vector<PairElem> enumerate_raw(const PairPresentation& pp,
                                    std::size_t depth) {
  std::vector<PairElem> out;
  for (std::size_t len = 0; len <= depth; ++len) {
    for (std::size_t tl = 0; tl <= len; ++tl) {
      const std::size_t sl = len - tl;
      std::size_t t_count = 1;
      std::size_t s_count = 1;
      for (std::size_t c = 0; c < tl; ++c) t_count *= pp.n();
      for (std::size_t c = 0; c < sl; ++c) s_count *= pp.m();
      for (std::size_t tc = 0; tc < t_count; ++tc) {
        const Word w = t_word(decode_labels(tc, tl, pp.n()));
        for (std::size_t sc = 0; sc < s_count; ++sc) {
          const Word u = s_word(decode_labels(sc, sl, pp.m()));
          for (NodeId b = 0; b < pp.size(); ++b) {
            PairElem x{w, u, b};
            if (is_irreducible(pp, x)) out.push_back(std::move(x));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

CommutationReport check_joint_isometry(const PairPresentation& pp,
                                       std::size_t depth) {
  CommutationReport report;
  const auto elems = enumerate_raw(pp, depth);
  for (const Family f : {Family::S, Family::T}) {
    const char* fam = f == Family::S ? "S" : "T";
    const Label labels = f == Family::S ? pp.m() : pp.n();
    std::map<PairElem, std::pair<Label, PairElem>> images;
    for (const auto& x : elems) {
      for (Label i = 1; i <= labels; ++i) {
        PairElem y = apply_raw(pp, f, i, x);
        const auto [it, fresh] = images.emplace(y, std::pair{i, x});
        if (!fresh) {
          CommutationFailure fail{x, i, it->second.first, y, y, {}};
          fail.message = std::string(fam) + "_" + std::to_string(i) + " " +
                         to_string(pp, x) + " = " + fam + "_" +
                         std::to_string(it->second.first) + " " +
                         to_string(pp, it->second.second) + " = " +
                         to_string(pp, y) + " (ranges collide)";
          report.failures.push_back(std::move(fail));
          continue;
        }
        const auto back = pred_raw(pp, f, y);
        if (!back || back->first != i || back->second != x) {
          CommutationFailure fail{x, i, i, y, {}, {}};
          if (back) fail.rhs = back->second;
          fail.message = std::string(fam) + "-adjoint does not invert " + fam +
                         "_" + std::to_string(i) + " at " + to_string(pp, x);
          report.failures.push_back(std::move(fail));
        }
      }
    }
  }
  return report;
}

PairElem s_apply(const CommutingPair& cp, Label i, const PairElem& x) {
  return s_apply_raw(cp.presentation(), i, x);
}

PairElem t_apply(const CommutingPair& cp, Label j, const PairElem& x) {
  return t_apply_raw(cp.presentation(), j, x);
}

PairElem apply(const CommutingPair& cp, Family f, Label label,
               const PairElem& x) {
  return apply_raw(cp.presentation(), f, label, x);
}

std::optional<std::pair<Label, PairElem>> s_pred(const CommutingPair& cp,
                                                 const PairElem& x) {
  return s_pred_raw(cp.presentation(), x);
}

std::optional<std::pair<Label, PairElem>> t_pred(const CommutingPair& cp,
                                                 const PairElem& x) {
  return t_pred_raw(cp.presentation(), x);
}

std::optional<std::pair<Label, PairElem>> pred(const CommutingPair& cp,
                                               Family f, const PairElem& x) {
  return pred_raw(cp.presentation(), f, x);
}

std::vector<PairElem> enumerate(const CommutingPair& cp, std::size_t depth) {
  return enumerate_raw(cp.presentation(), depth);
}

CommutationReport check_doubly_commute(const CommutingPair& cp,
                                       std::optional<std::size_t> depth) {
  const auto& pp = cp.presentation();
  const Theta& theta = pp.theta();
  const std::size_t d = depth.value_or(pp.size() + 2);
  CommutationReport report;

  auto fail = [&](const PairElem& x, Label i, Label j,
                  std::optional<PairElem> lhs, std::optional<PairElem> rhs,
                  const std::string& which) {
    auto show = [&](const std::optional<PairElem>& v) {
      return v ? to_string(pp, *v) : std::string("0");
    };
    CommutationFailure f{x, i, j, lhs, rhs, {}};
    f.message = which + " on " + to_string(pp, x) + " with i=" +
                std::to_string(i) + ", j=" + std::to_string(j) + ": " +
                show(lhs) + " vs " + show(rhs);
    report.failures.push_back(std::move(f));
  };

  for (const auto& x : enumerate(cp, d)) {
    const auto x_tpred = t_pred(cp, x);
    const auto x_spred = s_pred(cp, x);
    for (Label i = 1; i <= cp.m(); ++i) {
      for (Label j = 1; j <= cp.n(); ++j) {
        // T_j* S_i x  vs  sum_{l : theta(i,l) = (k,j)} S_k T_l* x
        std::optional<PairElem> lhs;
        if (auto p = t_pred(cp, s_apply(cp, i, x)); p && p->first == j)
          lhs = std::move(p->second);
        std::optional<PairElem> rhs;
        if (x_tpred) {
          const auto [k, jj] = theta(i, x_tpred->first);
          if (jj == j) rhs = s_apply(cp, k, x_tpred->second);
        }
        if (lhs != rhs) fail(x, i, j, lhs, rhs, "T_j* S_i");

        // S_i* T_j x  vs  sum_{k : theta(i,k) = (l,j)} T_k S_l* x
        std::optional<PairElem> lhs2;
        if (auto p = s_pred(cp, t_apply(cp, j, x)); p && p->first == i)
          lhs2 = std::move(p->second);
        std::optional<PairElem> rhs2;
        if (x_spred) {
          const auto [ii, k] = theta.inverse(x_spred->first, j);
          if (ii == i) rhs2 = t_apply(cp, k, x_spred->second);
        }
        if (lhs2 != rhs2) fail(x, i, j, lhs2, rhs2, "S_i* T_j");
      }
    }
  }
  return report;
}

}  // namespace permwold
