#pragma once

// Rendering of every report type as line-oriented text or as JSON. Both
// forms come from the same ordered tree, so they list the same fields in the
// same order.

#include <string>
#include <utility>
#include <vector>

#include "permwold/lebesgue.hpp"
#include "permwold/oracle.hpp"
#include "permwold/search.hpp"
#include "permwold/slocinski.hpp"
#include "permwold/wold.hpp"

namespace permwold {

enum class Format { kText, kJson };

/// One oracle run: the relation check plus one subspace check per part.
struct OracleRun {
  std::size_t depth = 0;
  std::size_t basis_size = 0;
  OracleReport relations;
  std::vector<std::pair<std::string, OracleReport>> parts;

  [[nodiscard]] bool ok() const;
};

std::string render(const Presentation& p, const ValidationReport& report,
                   Format format);
std::string render(const PairPresentation& pp, const ValidationReport& report,
                   Format format);
std::string render(const Presentation& p, const WoldResult& result,
                   Format format);
std::string render(const Presentation& p, const LebesgueResult& result,
                   Format format);
/// `what` names the identity being checked ("theta-commute", "doubly-commute").
std::string render(const PairPresentation& pp, const CommutationReport& report,
                   const std::string& what, Format format);
std::string render(const CommutingPair& cp, const SlocinskiResult& result,
                   const HypothesisReport& hypotheses, Format format);
std::string render(const OracleRun& run, Format format);
std::string render(const SearchSpace& space, Property property,
                   const SearchResult& result, Format format);
/// Plain error report for invalid input or exceeded budgets.
std::string render_error(const std::string& kind, const std::string& message,
                         Format format);

}  // namespace permwold
