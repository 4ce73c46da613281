#pragma once

// JSON input documents. Keys: m, n, theta, base, s_edges, t_edges; anything
// else is rejected. Labels are 1-based; edges are [from, label, to] with node
// names from `base`.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "permwold/errors.hpp"
#include "permwold/pair.hpp"

namespace permwold {

class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedEdge {
  std::string from;
  Label label = 1;
  std::string to;

  friend bool operator==(const NamedEdge&, const NamedEdge&) = default;
};

struct InputDocument {
  Label m = 1;
  std::optional<Label> n;
  std::optional<std::vector<std::array<Label, 4>>> theta;
  std::vector<std::string> base;
  std::vector<NamedEdge> s_edges;
  std::optional<std::vector<NamedEdge>> t_edges;

  [[nodiscard]] bool is_pair() const { return n.has_value(); }

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Syntax and schema only; node names and label ranges are checked when the
/// document is turned into a presentation.
InputDocument parse_document(std::string_view text);
std::string to_json(const InputDocument& doc);

/// Throws ValidationError on unknown nodes, duplicate base names, labels out
/// of range, or a theta that is not a bijection.
Presentation to_presentation(const InputDocument& doc);
PairPresentation to_pair_presentation(const InputDocument& doc);

InputDocument document_of(const Presentation& p);
InputDocument document_of(const PairPresentation& pp);

}  // namespace permwold
