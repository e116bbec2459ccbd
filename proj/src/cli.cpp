#include "radio/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "radio/bounds.hpp"
#include "radio/constructions.hpp"
#include "radio/errors.hpp"
#include "radio/io.hpp"
#include "radio/oracle.hpp"

namespace radio {

namespace {

struct ProductArgs {
  std::string t1, t2, family;
  int m = 0, n = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--t1", t1, "First factor: path:M, star:N or a tree file");
    cmd->add_option("--t2", t2, "Second factor: path:M, star:N or a tree file");
    cmd->add_option("--family", family, "Use a constructed family instead of --t1/--t2")
        ->check(CLI::IsMember({"star-star", "path-star"}));
    cmd->add_option("--m", m, "Family parameter m");
    cmd->add_option("--n", n, "Family parameter n");
  }

  bool given() const { return !family.empty() || !t1.empty() || !t2.empty(); }

  std::optional<FamilyParams> params() const {
    if (family.empty()) return std::nullopt;
    return FamilyParams{family == "star-star" ? Family::star_star : Family::path_star, m, n};
  }

  std::shared_ptr<const ProductGraph> graph() const {
    if (auto p = params()) return family_graph(*p);
    if (t1.empty() || t2.empty()) throw Error(ErrorCode::bad_params, "give --t1 and --t2, or --family with --m and --n");
    return std::make_shared<const ProductGraph>(tree_from_spec(t1), tree_from_spec(t2));
  }
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return read_file(path);
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::size_guard:
    case ErrorCode::hypothesis_violated:
      return kExitGuard;
    case ErrorCode::not_feasible:
    case ErrorCode::negative_step:
    case ErrorCode::duplicate_label:
    case ErrorCode::construction_integrity:
      return kExitFailed;
    default:
      return kExitUsage;
  }
}

json error_json(const Error& e) {
  return {{"schema", kSchemaVersion}, {"ok", false}, {"error", error_name(e.code())}, {"message", e.what()}};
}

// Product for verify and export-dot: explicit options win, otherwise the
// trees embedded in a labeling document.
std::shared_ptr<const ProductGraph> graph_for_document(const ProductArgs& pa, const std::string& text) {
  if (pa.given()) return pa.graph();
  auto trimmed = text.find_first_not_of(" \t\r\n");
  if (trimmed != std::string::npos && text[trimmed] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
    }
    if (doc.contains("t1") && doc.contains("t2"))
      return std::make_shared<const ProductGraph>(tree_from_json(doc["t1"]), tree_from_json(doc["t2"]));
  }
  throw Error(ErrorCode::bad_params, "no product given: use --t1/--t2 or --family, or a labeling document with t1/t2");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Radio labelings of Cartesian products of trees", "radiolab"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the result here instead of stdout");

  ProductArgs bound_args, label_args, verify_args, exact_args, check_args, dot_args;

  auto* bound = app.add_subcommand("bound", "Lower bound on the radio number");
  bound_args.add_to(bound);

  auto* label = app.add_subcommand("label", "Greedy labeling of a construction or of an ordering file");
  label_args.add_to(label);
  std::string label_ordering, label_dot;
  label->add_option("--ordering", label_ordering, "Ordering file (ids per line or JSON [[x,y],...])");
  label->add_option("--dot", label_dot, "Also write a labeled DOT file");

  auto* verify_cmd = app.add_subcommand("verify", "Check the radio condition for a labeling");
  verify_args.add_to(verify_cmd);
  std::string verify_labeling = "-";
  int verify_jobs = 1;
  verify_cmd->add_option("--labeling", verify_labeling, "Labeling file (JSON or CSV); - for stdin");
  verify_cmd->add_option("--jobs", verify_jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* exact = app.add_subcommand("exact", "Exact radio number by exhaustive search");
  exact_args.add_to(exact);
  SearchBudget budget;
  std::int64_t upper = -1;
  bool no_symmetry = false;
  exact->add_option("--max-seconds", budget.max_seconds, "Wall clock budget (0 = none)");
  exact->add_option("--max-nodes", budget.max_nodes, "Search node budget (0 = none)");
  exact->add_option("--jobs", budget.jobs, "Worker threads")->check(CLI::PositiveNumber);
  exact->add_option("--upper-bound", upper, "Known upper bound");
  exact->add_flag("--no-symmetry", no_symmetry, "Search every first vertex");

  auto* check = app.add_subcommand("check", "Evaluate the attainability conditions on an ordering");
  check_args.add_to(check);
  std::string check_ordering, which = "all";
  check->add_option("--ordering", check_ordering, "Ordering file; defaults to the family construction");
  check->add_option("--condition", which, "Which checks to run")
      ->check(CLI::IsMember({"all", "distance", "level", "sufficient"}));

  auto* dot = app.add_subcommand("export-dot", "Graphviz text of the product");
  dot_args.add_to(dot);
  std::string dot_labeling;
  dot->add_option("--labeling", dot_labeling, "Annotate vertices with this labeling");

  std::vector<const char*> argv{"radiolab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream payload;
  int code = kExitOk;
  try {
    if (*bound) {
      auto g = bound_args.graph();
      payload << bound_to_json(*g, lower_bound(*g)).dump() << '\n';
    } else if (*label) {
      std::optional<VertexOrdering> ord;
      json doc{{"schema", kSchemaVersion}};
      if (auto p = label_args.params()) {
        ord = family_ordering(*p);
        doc["family"] = family_name(p->family);
        doc["m"] = p->m;
        doc["n"] = p->n;
        doc["closed_form"] = closed_form_rn(*p);
      } else {
        if (label_ordering.empty()) throw Error(ErrorCode::bad_params, "label needs --family or --ordering");
        auto g = label_args.graph();
        ord.emplace(g, parse_ordering(read_input(label_ordering, in), *g));
      }
      auto lab = greedy_label(*ord);
      const auto& g = ord->graph();
      doc["t1"] = tree_to_json(g.t1());
      doc["t2"] = tree_to_json(g.t2());
      doc["ordering"] = ordering_to_json(*ord);
      doc["labeling"] = labeling_to_json(lab);
      doc["span"] = lab.span();
      doc["lower_bound"] = lower_bound(g).value;
      payload << doc.dump() << '\n';
      if (!label_dot.empty()) {
        std::ofstream f(label_dot);
        if (!f) throw Error(ErrorCode::parse_error, "cannot write '" + label_dot + "'");
        f << to_dot(g, &lab);
      }
    } else if (*verify_cmd) {
      std::string text = read_input(verify_labeling, in);
      auto g = graph_for_document(verify_args, text);
      auto lab = parse_labeling(text, g);
      try {
        auto vs = verify(lab, verify_jobs);
        payload << json{{"schema", kSchemaVersion},
                        {"ok", vs.empty()},
                        {"span", lab.span()},
                        {"violations", violations_to_json(*g, vs)}}
                       .dump()
                << '\n';
        code = vs.empty() ? kExitOk : kExitFailed;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::duplicate_label) throw;
        payload << error_json(e).dump() << '\n';
        err << e.what() << '\n';
        code = kExitFailed;
      }
    } else if (*exact) {
      auto g = exact_args.graph();
      budget.symmetry_breaking = !no_symmetry;
      if (upper >= 0) budget.initial_upper_bound = upper;
      auto r = exact_rn(g, budget);
      json doc = oracle_to_json(r);
      doc["lower_bound"] = lower_bound(*g).value;
      payload << doc.dump() << '\n';
    } else if (*check) {
      auto g = check_args.graph();
      std::optional<VertexOrdering> ord;
      if (!check_ordering.empty())
        ord.emplace(g, parse_ordering(read_input(check_ordering, in), *g));
      else if (auto p = check_args.params())
        ord = family_ordering(*p);
      else
        throw Error(ErrorCode::bad_params, "check needs --ordering or --family");
      json doc{{"schema", kSchemaVersion}, {"verdicts", json::array()}, {"skipped", json::array()}};
      bool failed = false;
      auto skip = [&](const char* what, const Error& e) {
        doc["skipped"].push_back({{"check", what}, {"error", error_name(e.code())}, {"message", e.what()}});
      };
      // A named check reports its own guard errors; "all" records and moves on.
      auto attempt = [&](const char* what, auto&& fn) {
        try {
          fn();
        } catch (const Error& e) {
          if (which != "all" || e.code() == ErrorCode::size_guard || e.code() == ErrorCode::not_feasible) throw;
          skip(what, e);
        }
      };
      if (which == "all" || which == "distance")
        attempt("distance", [&] {
          auto v = check_distance_condition(*ord);
          failed |= !v.holds;
          doc["verdicts"].push_back(verdict_to_json(v));
        });
      if (which == "all" || which == "level")
        attempt("level", [&] {
          auto v = check_level_condition(*ord);
          failed |= !v.holds;
          doc["verdicts"].push_back(verdict_to_json(v));
        });
      if (which == "all" || which == "sufficient")
        attempt("sufficient", [&] {
          auto vs = check_sufficient_conditions(*ord);
          bool any = false;
          for (const auto& v : vs) {
            any |= v.holds;
            doc["verdicts"].push_back(verdict_to_json(v));
          }
          if (which == "sufficient") failed |= !any;
        });
      doc["ok"] = !failed;
      payload << doc.dump() << '\n';
      code = failed ? kExitFailed : kExitOk;
    } else if (*dot) {
      if (!dot_labeling.empty()) {
        std::string text = read_input(dot_labeling, in);
        auto g = graph_for_document(dot_args, text);
        auto lab = parse_labeling(text, g);
        payload << to_dot(*g, &lab);
      } else {
        payload << to_dot(*dot_args.graph());
      }
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  }

  if (output.empty()) {
    out << payload.str();
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "cannot write '" << output << "'\n";
      return kExitUsage;
    }
    f << payload.str();
  }
  return code;
}

}  // namespace radio
