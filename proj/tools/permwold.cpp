// permwold: command-line front end over the core library.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 invalid input,
// 3 resource budget exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "permwold/document.hpp"
#include "permwold/dot.hpp"
#include "permwold/lebesgue.hpp"
#include "permwold/oracle.hpp"
#include "permwold/report.hpp"
#include "permwold/search.hpp"
#include "permwold/slocinski.hpp"
#include "permwold/wold.hpp"

namespace {

using namespace permwold;

enum Exit { kOk = 0, kFails = 1, kInvalid = 2, kBudget = 3 };

struct Options {
  std::string file;
  bool json = false;
  std::string family = "s";
  std::string order = "st";
  std::size_t depth = 0;  // 0: default for the input
  SearchSpace space;
  std::string property;
};

Format format(const Options& o) { return o.json ? Format::kJson : Format::kText; }

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Single-family view of a document: the S-family, or the T-family of a pair
// when --family t is given.
Presentation single(const InputDocument& doc, const Options& o) {
  if (o.family == "t") {
    if (!doc.is_pair()) throw ValidationError("--family t needs a pair document");
    return to_pair_presentation(doc).t_family();
  }
  return doc.is_pair() ? to_pair_presentation(doc).s_family() : to_presentation(doc);
}

Presentation require_valid(Presentation p) {
  const auto report = validate(p);
  if (!report.ok()) throw ValidationError(report.violations.front().message);
  return p;
}

PairPresentation require_pair(const InputDocument& doc) {
  if (!doc.is_pair()) throw ValidationError("this command needs a pair document (keys n, theta)");
  auto pp = to_pair_presentation(doc);
  const auto report = validate(pp);
  if (!report.ok()) throw ValidationError(report.violations.front().message);
  return pp;
}

int fails_unless(bool holds) { return holds ? kOk : kFails; }

int cmd_validate(const InputDocument& doc, const Options& o) {
  if (doc.is_pair()) {
    const auto pp = to_pair_presentation(doc);
    const auto report = validate(pp);
    std::cout << render(pp, report, format(o));
    return fails_unless(report.ok());
  }
  const auto p = to_presentation(doc);
  const auto report = validate(p);
  std::cout << render(p, report, format(o));
  return fails_unless(report.ok());
}

int cmd_wold(const InputDocument& doc, const Options& o) {
  const auto p = require_valid(single(doc, o));
  std::cout << render(p, wold(p), format(o));
  return kOk;
}

int cmd_classify(const InputDocument& doc, const Options& o) {
  const auto p = require_valid(single(doc, o));
  std::cout << render(p, classify_unitary(p), format(o));
  return kOk;
}

int cmd_check_commute(const InputDocument& doc, const Options& o) {
  const auto pp = require_pair(doc);
  auto report = check_theta_commute(pp);
  std::string what = "theta-commute";
  if (report.ok()) {
    report = check_joint_isometry(pp);
    what = "theta-commute, joint isometry";
  }
  std::cout << render(pp, report, what, format(o));
  return fails_unless(report.ok());
}

std::optional<CommutingPair> commuting_or_report(const PairPresentation& pp,
                                                 const Options& o) {
  auto cp = certify(pp);
  if (!cp)
    std::cout << render_error("not-commuting",
                              "the pair does not theta-commute as row-isometries; "
                              "run check-commute for details",
                              format(o));
  return cp;
}

int cmd_check_doubly(const InputDocument& doc, const Options& o) {
  const auto pp = require_pair(doc);
  auto cp = commuting_or_report(pp, o);
  if (!cp) return kFails;
  const auto report = check_doubly_commute(*cp);
  std::cout << render(pp, report, "doubly-commute", format(o));
  return fails_unless(report.ok());
}

int cmd_slocinski(const InputDocument& doc, const Options& o) {
  const auto pp = require_pair(doc);
  auto cp = commuting_or_report(pp, o);
  if (!cp) return kFails;
  const Order order = o.order == "ts" ? Order::kTS : Order::kST;
  const std::optional<std::size_t> depth =
      o.depth ? std::optional<std::size_t>(o.depth) : std::nullopt;
  const auto result = slocinski(*cp, order, depth);
  std::cout << render(*cp, result, check_hypotheses(*cp), format(o));
  return fails_unless(result.exists);
}

int cmd_oracle(const InputDocument& doc, const Options& o) {
  OracleRun run;
  if (!doc.is_pair()) {
    const auto p = require_valid(to_presentation(doc));
    run.depth = o.depth ? o.depth : default_oracle_depth(p.size());
    const auto model = materialize(p, run.depth);
    run.basis_size = model.size();
    run.relations = verify_relations(model);
    const auto w = wold(p);
    run.parts.emplace_back("unitary part",
                           verify_subspace(model, w.unitary_part,
                                           {Claim::kSReducing, Claim::kSUnitaryOn}));
    run.parts.emplace_back("shift part",
                           verify_subspace(model, w.shift_part,
                                           {Claim::kSReducing, Claim::kSShiftOn}));
  } else {
    const auto pp = require_pair(doc);
    auto cp = commuting_or_report(pp, o);
    if (!cp) return kFails;
    run.depth = o.depth ? o.depth : default_oracle_depth(cp->size());
    const auto model = materialize(*cp, run.depth);
    run.basis_size = model.size();
    run.relations = verify_relations(model);
    const auto result = slocinski(*cp);
    if (result.exists) {
      auto check = [&](const char* name, const PairSubspace& part, bool s_u, bool t_u) {
        run.parts.emplace_back(
            name, verify_subspace(model, part,
                                  {Claim::kSReducing, Claim::kTReducing,
                                   s_u ? Claim::kSUnitaryOn : Claim::kSShiftOn,
                                   t_u ? Claim::kTUnitaryOn : Claim::kTShiftOn}));
      };
      check("H_uu", result.H_uu, true, true);
      check("H_us", result.H_us, true, false);
      check("H_su", result.H_su, false, true);
      check("H_ss", result.H_ss, false, false);
    }
  }
  std::cout << render(run, format(o));
  return fails_unless(run.ok());
}

int cmd_search(const Options& o) {
  const Property property = parse_property(o.property);
  const auto result = search(o.space, property);
  std::cout << render(o.space, property, result, format(o));
  return kOk;
}

int cmd_export_dot(const InputDocument& doc) {
  if (doc.is_pair())
    std::cout << export_dot(to_pair_presentation(doc));
  else
    std::cout << export_dot(to_presentation(doc));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wold-type decompositions of permutative row-isometries and theta-commuting pairs"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit machine-readable JSON reports");

  auto with_file = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Input document (JSON), or - for stdin")->required();
    sub->fallthrough();
    return sub;
  };
  auto family_option = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "Family of a pair document to use")
        ->check(CLI::IsMember({"s", "t"}));
  };

  auto* validate_cmd = with_file("validate", "Check presentation invariants");
  auto* wold_cmd = with_file("wold", "Wold decomposition of one family");
  family_option(wold_cmd);
  auto* classify_cmd = with_file("classify", "Lebesgue-Wold classification of the unitary part");
  family_option(classify_cmd);
  auto* commute_cmd = with_file("check-commute", "Check theta-commutation of a pair");
  auto* doubly_cmd = with_file("check-doubly", "Check the doubly-commuting identities");
  auto* sloc_cmd = with_file("slocinski", "Four-fold decomposition of a pair");
  sloc_cmd->add_option("--order", o.order, "Which family is split first")
      ->check(CLI::IsMember({"st", "ts"}));
  sloc_cmd->add_option("--depth", o.depth, "Criterion check depth");
  auto* oracle_cmd = with_file("oracle", "Verify against truncated sparse matrices");
  oracle_cmd->add_option("--depth", o.depth, "Truncation depth (default max(4, |base|+2))")
      ->check(CLI::PositiveNumber);
  auto* export_cmd = with_file("export-dot", "Graphviz rendering of the base graph");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive search over small pairs");
  search_cmd->fallthrough();
  search_cmd->add_option("--max-base", o.space.max_base, "Largest base size")->required();
  search_cmd->add_option("--m", o.space.m, "Number of S labels")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--n", o.space.n, "Number of T labels")->required()->check(CLI::PositiveNumber);
  search_cmd->add_flag("--theta-all", o.space.theta_all, "Range over every theta, not just the identity");
  search_cmd->add_option("--property", o.property,
                         "commuting, doubly-commuting, no-slocinski or S-shift-T-unitary")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  auto fail = [&](const std::string& kind, const std::string& message, int code) {
    (o.json ? std::cout : std::cerr) << render_error(kind, message, format(o));
    return code;
  };

  try {
    if (search_cmd->parsed()) return cmd_search(o);
    const InputDocument doc = parse_document(read_input(o.file));
    if (validate_cmd->parsed()) return cmd_validate(doc, o);
    if (wold_cmd->parsed()) return cmd_wold(doc, o);
    if (classify_cmd->parsed()) return cmd_classify(doc, o);
    if (commute_cmd->parsed()) return cmd_check_commute(doc, o);
    if (doubly_cmd->parsed()) return cmd_check_doubly(doc, o);
    if (sloc_cmd->parsed()) return cmd_slocinski(doc, o);
    if (oracle_cmd->parsed()) return cmd_oracle(doc, o);
    if (export_cmd->parsed()) return cmd_export_dot(doc);
  } catch (const ValidationError& e) {
    return fail("invalid-input", e.what(), kInvalid);
  } catch (const ResourceError& e) {
    return fail("budget-exceeded", e.what(), kBudget);
  } catch (const ContractViolation& e) {
    return fail("contract-violation", e.what(), kFails);
  } catch (const PreconditionError& e) {
    return fail("invalid-input", e.what(), kInvalid);
  }
  return kInvalid;
}
