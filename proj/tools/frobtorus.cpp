// frobtorus command line: survey, find, analyze, report.

#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "frobtorus/error.hpp"
#include "frobtorus/survey.hpp"

namespace {

using frobtorus::Error;
using frobtorus::ErrorCode;
namespace sv = frobtorus::survey;

constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CorruptRecord:
    case ErrorCode::InvariantViolation:
    case ErrorCode::WeilBoundViolated:
    case ErrorCode::NonIntegralCoefficient:
      return kExitVerification;
    default:
      return kExitInput;
  }
}

struct SurveyArgs {
  unsigned p = 0;
  int genus = 0;
  int deg = 0;
  std::optional<std::uint64_t> limit;
  std::uint64_t count = 0;
  std::string out;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
};

void add_survey_options(CLI::App* cmd, SurveyArgs& a, bool deg_required) {
  cmd->add_option("--p", a.p, "prime field size")->required();
  cmd->add_option("--genus", a.genus, "genus g")->required()->check(CLI::PositiveNumber);
  auto* deg = cmd->add_option("--deg", a.deg, "deg f, 2g+1 or 2g+2 (default 2g+1)");
  if (deg_required) deg->required();
  cmd->add_option("--out", a.out, "JSONL output file; resumed when it exists");
  cmd->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);
}

sv::SurveyConfig make_config(const SurveyArgs& a, sv::Mode mode) {
  sv::SurveyConfig cfg;
  cfg.p = a.p;
  cfg.genus = a.genus;
  cfg.degree = a.deg ? a.deg : 2 * a.genus + 1;
  cfg.limit = a.limit;
  cfg.mode = mode;
  cfg.count = a.count;
  cfg.output = a.out;
  cfg.threads = a.threads;
  return cfg;
}

int run_survey(const SurveyArgs& a, sv::Mode mode) {
  const auto cfg = make_config(a, mode);
  sv::SurveyHooks hooks;
  const bool find = mode == sv::Mode::FindFirst;
  // Records go to stdout when there is no file, and found curves always do.
  hooks.on_record = [&](const sv::CurveRecord& r) {
    if (find ? r.verdict.kind == frobtorus::simplicity::VerdictKind::AbsolutelySimple : cfg.output.empty()) {
      std::cout << sv::to_json(r).dump() << '\n';
    }
  };
  const auto result = sv::survey_run(cfg, hooks);
  auto summary = sv::summary_to_json(result.summary, sv::config_json(cfg));
  if (find) summary["found"] = summary["absolutely_simple"];
  std::cout << summary.dump() << std::endl;
  if (find && summary["found"].get<std::uint64_t>() < cfg.count) {
    std::cerr << "only " << summary["found"] << " absolutely simple curves in the family\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Absolute simplicity of hyperelliptic Jacobians over finite fields"};
  app.require_subcommand(1);

  SurveyArgs survey_args;
  auto* survey = app.add_subcommand("survey", "enumerate a curve family and classify every Jacobian");
  add_survey_options(survey, survey_args, true);
  survey->add_option("--limit", survey_args.limit, "analyze only the first N equations");

  SurveyArgs find_args;
  auto* find = app.add_subcommand("find", "first N curves with absolutely simple Jacobian");
  add_survey_options(find, find_args, false);
  find->add_option("--count", find_args.count, "curves wanted")->required()->check(CLI::PositiveNumber);

  std::string curve_text;
  std::string weil_text;
  auto* analyze = app.add_subcommand("analyze", "classify one curve or Weil polynomial");
  auto* curve_opt = analyze->add_option("--curve", curve_text, "curve, e.g. \"5; h=; f=0,1,0,1\"");
  auto* weil_opt = analyze->add_option("--weil", weil_text, "Weil polynomial JSON {\"q\",\"g\",\"coeffs\"}");
  curve_opt->excludes(weil_opt);
  analyze->require_option(1);

  std::string report_in;
  auto* report = app.add_subcommand("report", "re-verify a survey file and summarize it");
  report->add_option("--in", report_in, "JSONL survey file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (survey->parsed()) return run_survey(survey_args, sv::Mode::FullEnumeration);
    if (find->parsed()) return run_survey(find_args, sv::Mode::FindFirst);
    if (analyze->parsed()) {
      if (!curve_text.empty()) {
        std::cout << sv::to_json(sv::analyze_curve_text(curve_text)).dump() << std::endl;
        return 0;
      }
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(weil_text);
      } catch (const nlohmann::json::exception& e) {
        std::cerr << "ParseError: " << e.what() << '\n';
        return kExitInput;
      }
      try {
        std::cout << sv::analyze_weil_json(j).dump() << std::endl;
      } catch (const Error& e) {
        // A malformed or non-Weil polynomial is bad input here.
        std::cerr << e.what() << '\n';
        return kExitInput;
      }
      return 0;
    }
    if (report->parsed()) {
      std::cout << sv::report(report_in).dump() << std::endl;
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
