#include "permwold/report.hpp"

#include "json.hpp"

namespace permwold {

using Tree = nlohmann::ordered_json;

bool OracleRun::ok() const {
  if (!relations.ok()) return false;
  for (const auto& [name, report] : parts)
    if (!report.ok()) return false;
  return true;
}

namespace {

bool is_scalar(const Tree& t) { return !t.is_object() && !t.is_array(); }

std::string scalar_text(const Tree& t) {
  if (t.is_string()) return t.get<std::string>();
  if (t.is_null()) return "none";
  return t.dump();
}

void write_text(const Tree& tree, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : tree.items()) {
    if (is_scalar(value)) {
      out += pad + key + ": " + scalar_text(value) + "\n";
    } else if (value.empty()) {
      out += pad + key + ": (none)\n";
    } else if (value.is_object()) {
      out += pad + key + ":\n";
      write_text(value, indent + 2, out);
    } else {
      out += pad + key + ":\n";
      for (const auto& item : value) {
        if (is_scalar(item)) {
          out += pad + "  - " + scalar_text(item) + "\n";
        } else {
          // Nested records: first field on the dash line.
          std::string nested;
          write_text(item, indent + 4, nested);
          nested.replace(indent + 2, 2, "- ");
          out += nested;
        }
      }
    }
  }
}

std::string emit(const Tree& tree, Format format) {
  if (format == Format::kJson) return tree.dump(2) + "\n";
  std::string out;
  write_text(tree, 0, out);
  return out;
}

template <class E, class Name>
Tree subspace(const Subspace<E>& sub, Name&& name) {
  Tree t;
  t["description"] = sub.description;
  t["mode"] = to_string(sub.mode);
  Tree seeds = Tree::array();
  for (const auto& s : sub.seeds) seeds.push_back(name(s));
  t["seeds"] = seeds;
  return t;
}

Tree violations(const ValidationReport& report) {
  Tree list = Tree::array();
  for (const auto& v : report.violations) list.push_back(v.message);
  return list;
}

Tree oracle_report(const OracleReport& r) {
  Tree t;
  t["ok"] = r.ok();
  t["checked_columns"] = r.checked_columns;
  t["failures"] = r.failures;
  return t;
}

std::string opt_elem(const PairPresentation& pp, const std::optional<PairElem>& x) {
  return x ? to_string(pp, *x) : "0";
}

}  // namespace

std::string render(const Presentation& /*p*/, const ValidationReport& report,
                   Format format) {
  Tree t;
  t["valid"] = report.ok();
  t["violations"] = violations(report);
  return emit(t, format);
}

std::string render(const PairPresentation& /*pp*/,
                   const ValidationReport& report, Format format) {
  Tree t;
  t["valid"] = report.ok();
  t["violations"] = violations(report);
  return emit(t, format);
}

std::string render(const Presentation& p, const WoldResult& result,
                   Format format) {
  auto name = [&](const Elem& x) { return to_string(p, x); };
  Tree t;
  t["row_unitary"] = is_row_unitary(p);
  t["multiplicity"] = result.multiplicity;
  t["unitary_part"] = subspace(result.unitary_part, name);
  t["shift_part"] = subspace(result.shift_part, name);
  Tree wandering = Tree::array();
  for (const auto& x : result.wandering) wandering.push_back(name(x));
  t["wandering"] = wandering;
  return emit(t, format);
}

std::string render(const Presentation& p, const LebesgueResult& result,
                   Format format) {
  auto name = [&](const Elem& x) { return to_string(p, x); };
  Tree t;
  Tree components = Tree::array();
  for (const auto& c : result.components) {
    Tree comp;
    std::string cycle;
    for (const auto& [node, label] : c.cycle)
      cycle += p.name(node) + " -s" + std::to_string(label) + "-> ";
    if (!c.cycle.empty()) cycle += p.name(c.cycle.front().first);
    comp["cycle"] = cycle;
    comp["kind"] = to_string(c.kind);
    Tree v = Tree::array();
    for (const auto& x : c.V.seeds) v.push_back(name(x));
    comp["V"] = v;
    components.push_back(comp);
  }
  t["components"] = components;
  t["H_sing"] = subspace(result.H_sing, name);
  t["H_dil"] = subspace(result.H_dil, name);
  t["H_abs"] = subspace(result.H_abs, name);
  t["PH"] = subspace(result.PH, name);
  return emit(t, format);
}

std::string render(const PairPresentation& pp, const CommutationReport& report,
                   const std::string& what, Format format) {
  Tree t;
  t["check"] = what;
  t["holds"] = report.ok();
  Tree failures = Tree::array();
  for (const auto& f : report.failures) {
    Tree entry;
    entry["at"] = to_string(pp, f.at);
    entry["i"] = f.i;
    entry["j"] = f.j;
    entry["lhs"] = opt_elem(pp, f.lhs);
    entry["rhs"] = opt_elem(pp, f.rhs);
    entry["message"] = f.message;
    failures.push_back(entry);
  }
  t["failures"] = failures;
  return emit(t, format);
}

std::string render(const CommutingPair& cp, const SlocinskiResult& result,
                   const HypothesisReport& h, Format format) {
  const auto& pp = cp.presentation();
  auto name = [&](const PairElem& x) { return to_string(pp, x); };
  Tree t;
  t["exists"] = result.exists;
  t["order"] = to_string(result.order);
  t["checked_depth"] = result.checked_depth;
  if (result.failure_witness) {
    Tree w;
    w["condition"] = result.failure_witness->condition;
    w["element"] = name(result.failure_witness->element);
    w["description"] = result.failure_witness->description;
    t["failure_witness"] = w;
  } else {
    t["H_uu"] = subspace(result.H_uu, name);
    t["H_us"] = subspace(result.H_us, name);
    t["H_su"] = subspace(result.H_su, name);
    t["H_ss"] = subspace(result.H_ss, name);
  }
  Tree hyp;
  hyp["doubly_commuting"] = h.doubly_commuting;
  hyp["s_unitary_singular"] = h.s_unitary_singular;
  hyp["t_unitary_singular"] = h.t_unitary_singular;
  hyp["s_shift_finite_multiplicity"] = h.s_shift_finite_multiplicity;
  hyp["n_at_least_2_or_theta_identity"] = h.n_at_least_2_or_theta_identity;
  t["hypotheses"] = hyp;
  return emit(t, format);
}

std::string render(const OracleRun& run, Format format) {
  Tree t;
  t["ok"] = run.ok();
  t["depth"] = run.depth;
  t["basis_size"] = run.basis_size;
  Tree rel = oracle_report(run.relations);
  rel["doubly_commuting"] = run.relations.doubly_commutes();
  t["relations"] = rel;
  Tree parts = Tree::array();
  for (const auto& [name, report] : run.parts) {
    Tree part;
    part["part"] = name;
    const Tree body = oracle_report(report);
    for (const auto& [key, value] : body.items()) part[key] = value;
    parts.push_back(part);
  }
  t["parts"] = parts;
  return emit(t, format);
}

std::string render(const SearchSpace& space, Property property,
                   const SearchResult& result, Format format) {
  Tree t;
  t["property"] = to_string(property);
  t["max_base"] = space.max_base;
  t["m"] = space.m;
  t["n"] = space.n;
  t["theta_all"] = space.theta_all;
  t["candidates"] = result.candidates;
  t["valid"] = result.valid;
  t["commuting"] = result.commuting;
  t["matches"] = result.matches.size();
  Tree list = Tree::array();
  for (const auto& pp : result.matches) {
    Tree entry;
    std::string theta;
    for (const auto& q : pp.theta().quadruples()) {
      if (!theta.empty()) theta += " ";
      theta += "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + ")->(" +
               std::to_string(q[2]) + "," + std::to_string(q[3]) + ")";
    }
    entry["theta"] = theta;
    std::string base;
    for (const auto& b : pp.base()) base += (base.empty() ? "" : " ") + b;
    entry["base"] = base;
    auto edges = [&](const Presentation& p, const char* tag) {
      std::string out;
      for (const auto& e : p.edges())
        out += (out.empty() ? "" : ", ") + p.name(e.from) + " -" + tag +
               std::to_string(e.label) + "-> " + p.name(e.to);
      return out;
    };
    entry["s_edges"] = edges(pp.s_family(), "s");
    entry["t_edges"] = edges(pp.t_family(), "t");
    list.push_back(entry);
  }
  t["presentations"] = list;
  return emit(t, format);
}

std::string render_error(const std::string& kind, const std::string& message,
                         Format format) {
  Tree t;
  t["error"] = kind;
  t["message"] = message;
  return emit(t, format);
}

}  // namespace permwold
