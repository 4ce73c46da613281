#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace permwold {

enum class SubspaceMode {
  kForwardClosure,  // closed span of everything reachable from the seeds
  kFullSpace,
  kExplicitFinite,  // span of exactly the seeds
  kCriterion,       // membership given by a pred-chain criterion
};

std::string to_string(SubspaceMode mode);

/// A closed span of basis vectors with a decidable membership test. The
/// membership function owns whatever presentation data it needs.
template <class E>
struct Subspace {
  std::vector<E> seeds;
  SubspaceMode mode = SubspaceMode::kExplicitFinite;
  std::function<bool(const E&)> member;
  std::string description;

  [[nodiscard]] bool contains(const E& x) const {
    return member ? member(x) : false;
  }
};

}  // namespace permwold
