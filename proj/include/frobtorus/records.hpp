#pragma once

// Persisted per-curve records and the aggregate summary.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "frobtorus/curves.hpp"
#include "frobtorus/simplicity.hpp"
#include "frobtorus/zeta.hpp"

namespace frobtorus::survey {

struct StageTiming {
  std::int64_t count_us = 0;
  std::int64_t weil_us = 0;
  std::int64_t classify_us = 0;

  bool operator==(const StageTiming&) const = default;
};

struct CurveRecord {
  std::optional<std::uint64_t> index;  // position in the survey enumeration
  std::string curve;                   // curves::to_text form
  curves::PointCounts counts;
  zeta::WeilPolynomial weil;
  simplicity::SimplicityVerdict verdict;
  StageTiming timing;

  bool operator==(const CurveRecord&) const = default;
};

nlohmann::json to_json(const CurveRecord& r);
/// Throws ParseError on malformed input.
CurveRecord record_from_json(const nlohmann::json& j);

/// Empty string when the record verifies: the curve text parses with the
/// recorded field and genus, the Weil polynomial recomputes from the counts and
/// the verdict certificate replays.
std::string record_verification_failure(const CurveRecord& r);

/// Removes the "timing" member, for determinism comparisons.
nlohmann::json strip_timing(nlohmann::json j);

struct SummaryReport {
  std::uint64_t enumerated = 0;
  std::uint64_t valid = 0;
  std::uint64_t singular_skipped = 0;
  std::map<std::string, std::uint64_t> totals;  // keyed by verdict kind

  void add(const simplicity::SimplicityVerdict& v);
  /// AbsolutelySimple records over valid curves, 0 when nothing is valid.
  double absolutely_simple_fraction() const;
  bool operator==(const SummaryReport&) const = default;
};

/// Optional config echoes the survey parameters in the output.
nlohmann::json summary_to_json(const SummaryReport& s, const nlohmann::json& config = nullptr);

}  // namespace frobtorus::survey
