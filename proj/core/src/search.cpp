#include "permwold/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "permwold/errors.hpp"
#include "permwold/slocinski.hpp"

namespace permwold {

std::string to_string(Property property) {
  switch (property) {
    case Property::kCommuting: return "commuting";
    case Property::kDoublyCommuting: return "doubly-commuting";
    case Property::kNoSlocinski: return "no-slocinski";
    case Property::kSShiftTUnitary: return "S-shift-T-unitary";
  }
  return "?";
}

Property parse_property(std::string_view name) {
  for (const auto p : {Property::kCommuting, Property::kDoublyCommuting,
                       Property::kNoSlocinski, Property::kSShiftTUnitary})
    if (to_string(p) == name) return p;
  throw ValidationError("unknown property '" + std::string(name) +
                        "' (expected commuting, doubly-commuting, "
                        "no-slocinski or S-shift-T-unitary)");
}

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < exp; ++k) out = mul(out, base);
  return out;
}

std::size_t factorial(std::size_t k) {
  std::size_t out = 1;
  for (std::size_t j = 2; j <= k; ++j) out = mul(out, j);
  return out;
}

std::string node_name(std::size_t k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "n" + std::to_string(k + 1);
}

// Decodes `code` as one optional target per (node, label); returns false if
// some node would get two in-edges.
bool decode_edges(std::size_t code, std::size_t nodes, Label labels,
                  std::vector<Edge>& edges) {
  edges.clear();
  std::vector<bool> hit(nodes, false);
  for (std::size_t b = 0; b < nodes; ++b) {
    for (Label l = 1; l <= labels; ++l) {
      const std::size_t digit = code % (nodes + 1);
      code /= nodes + 1;
      if (digit == 0) continue;
      const std::size_t to = digit - 1;
      if (hit[to]) return false;
      hit[to] = true;
      edges.push_back({static_cast<NodeId>(b), l, static_cast<NodeId>(to)});
    }
  }
  return true;
}

struct Task {
  std::size_t nodes;
  std::size_t theta;
  std::size_t s_code;
};

}  // namespace

std::size_t candidate_count(const SearchSpace& space) {
  const std::size_t theta_count =
      space.theta_all ? factorial(std::size_t{space.m} * space.n) : 1;
  std::size_t total = 0;
  for (std::size_t k = 1; k <= space.max_base; ++k) {
    const std::size_t per =
        mul(theta_count, power(k + 1, k * (space.m + space.n)));
    total = per > kSaturated - total ? kSaturated : total + per;
  }
  return total;
}

std::vector<Theta> thetas(const SearchSpace& space) {
  std::vector<Theta::Pair> images;
  for (Label i = 1; i <= space.m; ++i)
    for (Label j = 1; j <= space.n; ++j) images.emplace_back(i, j);
  std::vector<Theta> out;
  do {
    out.emplace_back(space.m, space.n, images);
  } while (space.theta_all && std::next_permutation(images.begin(), images.end()));
  return out;
}

bool has_property(const CommutingPair& cp, Property property) {
  switch (property) {
    case Property::kCommuting:
      return true;
    case Property::kDoublyCommuting:
      return check_doubly_commute(cp).ok();
    case Property::kNoSlocinski:
      return !slocinski(cp, Order::kST).exists;
    case Property::kSShiftTUnitary: {
      if (cp.size() == 0) return false;
      if (wandering_multiplicity(cp, Family::S).infinite) return false;
      for (const auto& x : enumerate(cp, default_check_depth(cp))) {
        if (chain_is_infinite(cp, Family::S, x)) return false;
        if (!t_pred(cp, x)) return false;
      }
      return true;
    }
  }
  return false;
}

SearchResult search(const SearchSpace& space, Property property,
                    std::size_t budget, unsigned workers) {
  if (space.m == 0 || space.n == 0)
    throw ValidationError("search needs m >= 1 and n >= 1");
  SearchResult result;
  result.candidates = candidate_count(space);
  if (result.candidates > budget)
    throw ResourceError("search space has " +
                        (result.candidates == kSaturated
                             ? std::string("too many")
                             : std::to_string(result.candidates)) +
                        " candidates, budget is " + std::to_string(budget));

  const auto all_thetas = thetas(space);
  std::vector<Task> tasks;
  for (std::size_t k = 1; k <= space.max_base; ++k)
    for (std::size_t t = 0; t < all_thetas.size(); ++t)
      for (std::size_t c = 0; c < power(k + 1, k * space.m); ++c)
        tasks.push_back({k, t, c});

  struct Slot {
    std::vector<PairPresentation> matches;
    std::size_t valid = 0;
    std::size_t commuting = 0;
  };
  std::vector<Slot> slots(tasks.size());
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    std::vector<Edge> s_edges;
    std::vector<Edge> t_edges;
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& task = tasks[i];
      if (!decode_edges(task.s_code, task.nodes, space.m, s_edges)) continue;
      std::vector<std::string> base;
      for (std::size_t b = 0; b < task.nodes; ++b) base.push_back(node_name(b));
      const std::size_t t_codes = power(task.nodes + 1, task.nodes * space.n);
      for (std::size_t c = 0; c < t_codes; ++c) {
        if (!decode_edges(c, task.nodes, space.n, t_edges)) continue;
        ++slots[i].valid;
        PairPresentation pp(all_thetas[task.theta], base, s_edges, t_edges);
        auto cp = certify(pp);
        if (!cp) continue;
        ++slots[i].commuting;
        if (has_property(*cp, property)) slots[i].matches.push_back(std::move(pp));
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (auto& slot : slots) {
    result.valid += slot.valid;
    result.commuting += slot.commuting;
    for (auto& pp : slot.matches) result.matches.push_back(std::move(pp));
  }
  return result;
}

}  // namespace permwold
