#pragma once

// Graphviz export: one node per base node, solid "s i" edges, dashed "t j"
// edges.

#include <string>

#include "permwold/pair.hpp"

namespace permwold {

std::string export_dot(const Presentation& p);
std::string export_dot(const PairPresentation& pp);

}  // namespace permwold
