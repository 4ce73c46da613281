#pragma once

// Exhaustive search over small pair presentations. Candidates are every
// assignment of optional targets to (node, label) for both families, for
// every base size 1..max_base and every theta in the chosen set; the raw
// count is bounded before any work starts.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "permwold/pair.hpp"

namespace permwold {

struct SearchSpace {
  std::size_t max_base = 1;
  Label m = 1;
  Label n = 1;
  bool theta_all = false;  // otherwise only the identity
};

enum class Property {
  kCommuting,
  kDoublyCommuting,
  kNoSlocinski,
  kSShiftTUnitary,  // finite-multiplicity S-shift with row-unitary T, nonempty base
};

std::string to_string(Property property);
/// Throws ValidationError on an unknown name.
Property parse_property(std::string_view name);

inline constexpr std::size_t kSearchBudget = 10'000'000;

/// Raw candidate count of the space (before validity filtering).
std::size_t candidate_count(const SearchSpace& space);

/// Every theta of the space, identity first, then lexicographic order.
std::vector<Theta> thetas(const SearchSpace& space);

struct SearchResult {
  std::vector<PairPresentation> matches;  // in candidate order
  std::size_t candidates = 0;
  std::size_t valid = 0;
  std::size_t commuting = 0;
};

bool has_property(const CommutingPair& cp, Property property);

/// Throws ResourceError when candidate_count exceeds `budget`. `workers` = 0
/// uses the hardware concurrency.
SearchResult search(const SearchSpace& space, Property property,
                    std::size_t budget = kSearchBudget, unsigned workers = 0);

}  // namespace permwold
