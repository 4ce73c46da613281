#include "permwold/document.hpp"

#include <limits>
#include <map>
#include <set>

#include "json.hpp"

namespace permwold {

using nlohmann::json;

ParseError::ParseError(const std::string& what, std::size_t line,
                       std::size_t column)
    : ValidationError("line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Schema errors point at the first occurrence of the offending key.
[[noreturn]] void fail_at_key(std::string_view text, const std::string& key,
                              const std::string& what) {
  const auto pos = text.find("\"" + key + "\"");
  const auto [line, column] =
      line_column(text, pos == std::string_view::npos ? 0 : pos);
  throw ParseError(what, line, column);
}

Label label_of(std::string_view text, const std::string& key, const json& v) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1 ||
      v.get<std::int64_t>() > std::numeric_limits<Label>::max())
    fail_at_key(text, key, "'" + key + "' expects positive integers, got " + v.dump());
  return static_cast<Label>(v.get<std::int64_t>());
}

std::vector<NamedEdge> edges_of(std::string_view text, const std::string& key,
                                const json& v) {
  if (!v.is_array()) fail_at_key(text, key, "'" + key + "' must be an array");
  std::vector<NamedEdge> out;
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[2].is_string())
      fail_at_key(text, key,
                  "'" + key + "' entries must be [node, label, node], got " + e.dump());
    out.push_back({e[0].get<std::string>(), label_of(text, key, e[1]),
                   e[2].get<std::string>()});
  }
  return out;
}

std::vector<Edge> resolve(const std::vector<std::string>& base,
                          const std::vector<NamedEdge>& edges,
                          const char* family) {
  std::map<std::string, NodeId> index;
  for (NodeId b = 0; b < base.size(); ++b)
    if (!index.emplace(base[b], b).second)
      throw ValidationError("duplicate base node '" + base[b] + "'");
  std::vector<Edge> out;
  for (const auto& e : edges) {
    auto from = index.find(e.from);
    auto to = index.find(e.to);
    if (from == index.end() || to == index.end())
      throw ValidationError(std::string(family) + "-edge [" + e.from + ", " +
                            std::to_string(e.label) + ", " + e.to +
                            "] names a node outside base");
    out.push_back({from->second, e.label, to->second});
  }
  return out;
}

std::vector<NamedEdge> named(const Presentation& p) {
  std::vector<NamedEdge> out;
  for (const auto& e : p.edges()) out.push_back({p.name(e.from), e.label, p.name(e.to)});
  return out;
}

}  // namespace

InputDocument parse_document(std::string_view text) {
  std::set<std::string> seen;
  std::string duplicate;
  json::parser_callback_t callback = [&](int depth, json::parse_event_t event,
                                         json& parsed) {
    if (event == json::parse_event_t::key && depth == 1 &&
        !seen.insert(parsed.get<std::string>()).second && duplicate.empty())
      duplicate = parsed.get<std::string>();
    return true;
  };
  json root;
  try {
    root = json::parse(text.begin(), text.end(), callback);
  } catch (const json::parse_error& e) {
    const auto [line, column] =
        line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    // Keep only the library's description; the position is ours.
    if (auto p = what.find("column "); p != std::string::npos)
      if (auto q = what.find(": ", p); q != std::string::npos) what = what.substr(q + 2);
    throw ParseError(what, line, column);
  }
  if (!root.is_object()) throw ParseError("document must be a JSON object", 1, 1);
  if (!duplicate.empty()) fail_at_key(text, duplicate, "duplicate key '" + duplicate + "'");

  static const std::set<std::string> known{"m", "n", "theta", "base", "s_edges", "t_edges"};
  for (const auto& [key, value] : root.items())
    if (!known.count(key)) fail_at_key(text, key, "unknown key '" + key + "'");
  for (const char* key : {"m", "base", "s_edges"})
    if (!root.contains(key))
      throw ParseError(std::string("missing required key '") + key + "'", 1, 1);

  InputDocument doc;
  doc.m = label_of(text, "m", root["m"]);
  if (root.contains("n")) doc.n = label_of(text, "n", root["n"]);

  const json& base = root["base"];
  if (!base.is_array()) fail_at_key(text, "base", "'base' must be an array of names");
  for (const auto& b : base) {
    if (!b.is_string()) fail_at_key(text, "base", "'base' entries must be strings, got " + b.dump());
    doc.base.push_back(b.get<std::string>());
  }
  doc.s_edges = edges_of(text, "s_edges", root["s_edges"]);

  if (root.contains("t_edges")) {
    if (!doc.n) fail_at_key(text, "t_edges", "'t_edges' needs 'n'");
    doc.t_edges = edges_of(text, "t_edges", root["t_edges"]);
  }
  if (root.contains("theta") != doc.n.has_value())
    fail_at_key(text, doc.n ? "n" : "theta", "'theta' is required exactly when 'n' is present");
  if (doc.n) {
    const json& theta = root["theta"];
    if (!theta.is_array()) fail_at_key(text, "theta", "'theta' must be an array of quadruples");
    std::vector<std::array<Label, 4>> quads;
    for (const auto& q : theta) {
      if (!q.is_array() || q.size() != 4)
        fail_at_key(text, "theta", "'theta' entries must be [i, j, i', j'], got " + q.dump());
      quads.push_back({label_of(text, "theta", q[0]), label_of(text, "theta", q[1]),
                       label_of(text, "theta", q[2]), label_of(text, "theta", q[3])});
    }
    doc.theta = std::move(quads);
  }
  return doc;
}

std::string to_json(const InputDocument& doc) {
  auto edges = [](const std::vector<NamedEdge>& es) {
    json out = json::array();
    for (const auto& e : es) out.push_back({e.from, e.label, e.to});
    return out;
  };
  json root = json::object();
  root["m"] = doc.m;
  if (doc.n) root["n"] = *doc.n;
  if (doc.theta) {
    json quads = json::array();
    for (const auto& q : *doc.theta) quads.push_back({q[0], q[1], q[2], q[3]});
    root["theta"] = quads;
  }
  root["base"] = doc.base;
  root["s_edges"] = edges(doc.s_edges);
  if (doc.t_edges) root["t_edges"] = edges(*doc.t_edges);
  return root.dump(2) + "\n";
}

Presentation to_presentation(const InputDocument& doc) {
  return Presentation(doc.m, doc.base, resolve(doc.base, doc.s_edges, "s"));
}

PairPresentation to_pair_presentation(const InputDocument& doc) {
  if (!doc.n || !doc.theta)
    throw ValidationError("a pair document needs 'n' and 'theta'");
  Theta theta = Theta::from_quadruples(doc.m, *doc.n, *doc.theta);
  const std::vector<NamedEdge> none;
  return PairPresentation(std::move(theta), doc.base,
                          resolve(doc.base, doc.s_edges, "s"),
                          resolve(doc.base, doc.t_edges ? *doc.t_edges : none, "t"));
}

InputDocument document_of(const Presentation& p) {
  InputDocument doc;
  doc.m = p.m();
  doc.base = p.base();
  doc.s_edges = named(p);
  return doc;
}

InputDocument document_of(const PairPresentation& pp) {
  InputDocument doc = document_of(pp.s_family());
  doc.n = pp.n();
  doc.theta = pp.theta().quadruples();
  doc.t_edges = named(pp.t_family());
  return doc;
}

}  // namespace permwold
