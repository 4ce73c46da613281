#include "permwold/dot.hpp"

namespace permwold {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string graph(const Presentation& s, const Presentation* t) {
  std::string out = "digraph presentation {\n";
  for (NodeId b = 0; b < s.size(); ++b) out += "  " + quoted(s.name(b)) + ";\n";
  for (const auto& e : s.edges())
    out += "  " + quoted(s.name(e.from)) + " -> " + quoted(s.name(e.to)) +
           " [label=\"s " + std::to_string(e.label) + "\", style=solid];\n";
  if (t) {
    for (const auto& e : t->edges())
      out += "  " + quoted(t->name(e.from)) + " -> " + quoted(t->name(e.to)) +
             " [label=\"t " + std::to_string(e.label) + "\", style=dashed];\n";
  }
  return out + "}\n";
}

}  // namespace

std::string export_dot(const Presentation& p) { return graph(p, nullptr); }

std::string export_dot(const PairPresentation& pp) {
  return graph(pp.s_family(), &pp.t_family());
}

}  // namespace permwold
