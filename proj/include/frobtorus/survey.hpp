#pragma once

// Curve family enumeration with resumable JSONL persistence.
//
// File layout: one header line {"frobtorus_survey": config, "fingerprint": hex}
// then one line per enumerated equation in enumeration order. Singular
// equations get a short {"index", "curve", "skipped": "singular"} line so a
// resumed run knows where to continue.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "frobtorus/records.hpp"

namespace frobtorus::survey {

enum class Mode { FullEnumeration, FindFirst };

struct SurveyConfig {
  unsigned p = 0;
  int genus = 0;
  int degree = 0;                       // deg f, 2g+1 or 2g+2
  std::optional<std::uint64_t> limit;   // cap on enumerated equations
  Mode mode = Mode::FullEnumeration;
  std::uint64_t count = 0;              // FindFirst: AbsolutelySimple records wanted
  std::string output;                   // empty: no persistence
  unsigned threads = 1;
};

/// Throws NonPrime, BadDegrees or SizeExceeded for an unusable config.
void validate_config(const SurveyConfig& cfg);

/// Number of equations in the family, before any limit.
std::uint64_t family_size(const SurveyConfig& cfg);

/// Config fields that define the record set (threads and output excluded).
nlohmann::json config_json(const SurveyConfig& cfg);
std::string fingerprint(const SurveyConfig& cfg);

struct SurveyHooks {
  /// Called for each valid curve's record, in enumeration order, including
  /// records replayed from an existing output file.
  std::function<void(const CurveRecord&)> on_record;
  /// Stop after this many new lines have been written (simulated crash).
  std::optional<std::uint64_t> stop_after;
};

struct SurveyResult {
  SummaryReport summary;
  std::uint64_t resumed_from = 0;  // first index computed by this run
  bool complete = false;           // enumeration or find target finished
};

/// Throws ResumeMismatch when the output file belongs to another config and
/// CorruptRecord when an existing line is unreadable (a torn final line is
/// dropped instead).
SurveyResult survey_run(const SurveyConfig& cfg, const SurveyHooks& hooks = {});

/// Full pipeline for one curve in text form.
CurveRecord analyze_curve_text(const std::string& text);

/// Verdict for a Weil polynomial given as JSON {"q", "g", "coeffs"}.
nlohmann::json analyze_weil_json(const nlohmann::json& j);

/// Re-verifies every record of a survey file and recomputes the summary.
/// Throws CorruptRecordError naming the first bad line.
nlohmann::json report(const std::string& path);

}  // namespace frobtorus::survey
