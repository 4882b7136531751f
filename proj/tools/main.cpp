// autocomm: exact autocommuting-probability analysis of small finite groups.
//
// Exit codes: 0 success, 1 input error, 2 internal invariant violated,
// 3 definitive negative (isoclinic), 4 search budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "autocomm/autocommuting.hpp"
#include "autocomm/catalog.hpp"
#include "autocomm/isoclinism.hpp"
#include "autocomm/report_json.hpp"
#include "autocomm/survey.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitNone = 3;
constexpr int kExitBudget = 4;

autocomm::Limits limits_from_env() {
  autocomm::Limits limits;
  if (const char* cap = std::getenv("AUTOCOMM_MAX_ORDER")) {
    const int v = std::atoi(cap);
    if (v > 0) limits.max_order = v;
  }
  return limits;
}

int write_output(const std::string& text, const std::string& destination) {
  if (destination.empty() || destination == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(destination);
  if (!out) {
    std::cerr << "error: cannot open output file " << destination << "\n";
    return kExitInput;
  }
  out << text;
  return out ? kExitOk : kExitInput;
}

struct AnalyzeArgs {
  std::string group;
  bool all_g = false;
  bool bounds = false;
  bool characterize = false;
  std::string format = "table";
  std::string output;
};

int run_analyze(const AnalyzeArgs& args) {
  const autocomm::Limits limits = limits_from_env();
  autocomm::FiniteGroup g;
  autocomm::AutomorphismGroup a;
  try {
    g = autocomm::build_group(autocomm::GroupSpec::parse(args.group), limits);
    a = autocomm::enumerate_automorphisms(g, limits);
  } catch (const autocomm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    autocomm::DistributionOptions dopts;
    dopts.oracle_cap = limits.oracle_cap;
    const autocomm::AutocommutingReport report = autocomm::analyze_group(g, a, dopts);

    autocomm::BoundReport bound_data;
    std::vector<autocomm::CharacterizationVerdict> checks;
    if (args.bounds) bound_data = autocomm::bound_report(g, a);
    if (args.characterize) checks = autocomm::characterization_check(g, a, limits);

    const autocomm::BoundReport* bounds_ptr = args.bounds ? &bound_data : nullptr;
    const auto* checks_ptr = args.characterize ? &checks : nullptr;

    std::string text;
    if (args.format == "json") {
      text = autocomm::report_to_json(g, report, bounds_ptr, checks_ptr).dump(2) + "\n";
    } else if (args.format == "table") {
      text = autocomm::render_report_text(g, report, bounds_ptr, checks_ptr, args.all_g);
    } else {
      std::cerr << "error: format '" << args.format << "' is not valid for analyze\n";
      return kExitInput;
    }
    const int rc = write_output(text, args.output);
    if (rc != kExitOk) return rc;
    if (args.bounds && !bound_data.all_hold()) {
      std::cerr << "error: a bound was violated; this indicates a bug in the library\n";
      return kExitInvariant;
    }
    return kExitOk;
  } catch (const autocomm::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const autocomm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

struct SurveyArgs {
  int max_order = 16;
  std::string format = "table";
  int jobs = 1;
  std::string output;
};

int run_survey_cmd(const SurveyArgs& args) {
  const autocomm::Limits limits = limits_from_env();
  try {
    const std::vector<autocomm::SurveyRow> rows =
        autocomm::run_survey(args.max_order, args.jobs, limits);
    std::string text;
    if (args.format == "csv") {
      text = autocomm::survey_csv(rows);
    } else if (args.format == "json") {
      text = autocomm::survey_json(rows).dump(2) + "\n";
    } else if (args.format == "table") {
      text = autocomm::survey_text(rows);
    } else {
      std::cerr << "error: unknown survey format '" << args.format << "'\n";
      return kExitInput;
    }
    return write_output(text, args.output);
  } catch (const autocomm::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const autocomm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

struct IsoclinicArgs {
  std::string group_a;
  std::string group_b;
  long long budget = 1'000'000;
  std::string format = "json";
  std::string output;
};

int run_isoclinic(const IsoclinicArgs& args) {
  const autocomm::Limits limits = limits_from_env();
  autocomm::FiniteGroup g, h;
  try {
    g = autocomm::build_group(autocomm::GroupSpec::parse(args.group_a), limits);
    h = autocomm::build_group(autocomm::GroupSpec::parse(args.group_b), limits);
  } catch (const autocomm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    autocomm::IsoclinismOptions opts;
    opts.budget = args.budget;
    opts.limits = limits;
    const autocomm::AutoisoclinismResult result = autocomm::find_autoisoclinism(g, h, opts);

    nlohmann::ordered_json j;
    j["group_a"] = g.name;
    j["group_b"] = h.name;
    j["pairs_checked"] = result.pairs_checked;
    switch (result.status) {
      case autocomm::IsoclinismStatus::Found: {
        j["status"] = "found";
        j["witness"] = autocomm::witness_to_json(g, h, *result.witness, limits);
        const autocomm::InvarianceVerdict v =
            autocomm::verify_invariance(g, h, *result.witness, opts);
        j["invariance"]["distributions_match"] = v.distributions_match;
        j["invariance"]["bijection_ok"] = v.bijection_ok;
        j["invariance"]["values_checked"] = v.values_checked;
        break;
      }
      case autocomm::IsoclinismStatus::None:
        j["status"] = "none";
        if (!result.reject_reason.empty()) j["reason"] = result.reject_reason;
        break;
      case autocomm::IsoclinismStatus::BudgetExceeded:
        j["status"] = "budget_exceeded";
        break;
    }

    std::string text;
    if (args.format == "json") {
      text = j.dump(2) + "\n";
    } else if (args.format == "table") {
      text = "autoisoclinism " + g.name + " ~ " + h.name + ": " +
             j["status"].get<std::string>() +
             (j.contains("reason") ? " (" + j["reason"].get<std::string>() + ")" : "") + "\n";
    } else {
      std::cerr << "error: format '" << args.format << "' is not valid for isoclinic\n";
      return kExitInput;
    }
    const int rc = write_output(text, args.output);
    if (rc != kExitOk) return rc;

    switch (result.status) {
      case autocomm::IsoclinismStatus::Found:
        return kExitOk;
      case autocomm::IsoclinismStatus::None:
        return kExitNone;
      case autocomm::IsoclinismStatus::BudgetExceeded:
        return kExitBudget;
    }
    return kExitOk;
  } catch (const autocomm::SearchBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const autocomm::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const autocomm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact autocommuting-probability analysis of small finite groups"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze a single group");
  analyze->add_option("--group", analyze_args.group, "group spec, e.g. cyclic:4 or file:g.json")
      ->required();
  analyze->add_flag("--all-g", analyze_args.all_g, "print the full Pr_g distribution");
  analyze->add_flag("--bounds", analyze_args.bounds, "evaluate every bound");
  analyze->add_flag("--characterize", analyze_args.characterize,
                    "run the characterization checks");
  analyze->add_option("--format", analyze_args.format, "table | json")
      ->default_val("table");
  analyze->add_option("--out", analyze_args.output, "output path (default stdout)");

  SurveyArgs survey_args;
  CLI::App* survey = app.add_subcommand("survey", "one summary row per corpus group");
  survey->add_option("--max-order", survey_args.max_order, "largest group order")
      ->default_val(16);
  survey->add_option("--format", survey_args.format, "table | csv | json")
      ->default_val("table");
  survey->add_option("--jobs", survey_args.jobs, "worker threads")->default_val(1);
  survey->add_option("--out", survey_args.output, "output path (default stdout)");

  IsoclinicArgs iso_args;
  CLI::App* isoclinic = app.add_subcommand("isoclinic", "search for an autoisoclinism");
  isoclinic->add_option("group_a", iso_args.group_a, "first group spec")->required();
  isoclinic->add_option("group_b", iso_args.group_b, "second group spec")->required();
  isoclinic->add_option("--budget", iso_args.budget, "candidate-pair budget")
      ->default_val(1'000'000);
  isoclinic->add_option("--format", iso_args.format, "table | json")->default_val("json");
  isoclinic->add_option("--out", iso_args.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  if (analyze->parsed()) return run_analyze(analyze_args);
  if (survey->parsed()) return run_survey_cmd(survey_args);
  if (isoclinic->parsed()) return run_isoclinic(iso_args);
  return kExitInput;
}
