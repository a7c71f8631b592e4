#include "frobtorus/records.hpp"

#include "frobtorus/error.hpp"

namespace frobtorus::survey {

nlohmann::json to_json(const CurveRecord& r) {
  nlohmann::json j;
  if (r.index) j["index"] = *r.index;
  j["curve"] = r.curve;
  j["counts"] = {{"q", r.counts.q}, {"g", r.counts.g}, {"counts", r.counts.counts}};
  j["weil"] = zeta::to_json(r.weil);
  j["verdict"] = simplicity::to_json(r.verdict);
  j["timing"] = {{"count_us", r.timing.count_us}, {"weil_us", r.timing.weil_us}, {"classify_us", r.timing.classify_us}};
  return j;
}

CurveRecord record_from_json(const nlohmann::json& j) {
  try {
    CurveRecord r;
    if (j.contains("index")) r.index = j["index"].get<std::uint64_t>();
    r.curve = j.at("curve").get<std::string>();
    const auto& c = j.at("counts");
    r.counts.q = c.at("q").get<std::uint64_t>();
    r.counts.g = c.at("g").get<int>();
    r.counts.counts = c.at("counts").get<std::vector<std::uint64_t>>();
    // Validation happens in record_verification_failure; keep the raw value.
    const auto& w = j.at("weil");
    r.weil.q = zeta::big_from_json(w.at("q"));
    r.weil.g = w.at("g").get<int>();
    for (const auto& x : w.at("coeffs")) r.weil.coeffs.push_back(zeta::big_from_json(x));
    r.verdict = simplicity::verdict_from_json(j.at("verdict"));
    if (j.contains("timing")) {
      const auto& t = j["timing"];
      r.timing.count_us = t.value("count_us", std::int64_t{0});
      r.timing.weil_us = t.value("weil_us", std::int64_t{0});
      r.timing.classify_us = t.value("classify_us", std::int64_t{0});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("record JSON: ") + e.what());
  }
}

std::string record_verification_failure(const CurveRecord& r) {
  try {
    const auto curve = curves::parse_curve(r.curve);
    if (curve.base()->order() != r.counts.q || curve.genus() != r.counts.g) {
      return "counts do not belong to the recorded curve";
    }
    const auto weil = zeta::weil_from_counts(r.counts);
    if (!(weil == r.weil)) return "Weil polynomial does not recompute from the counts";
    return simplicity::replay_failure(r.weil, r.verdict);
  } catch (const Error& e) {
    return e.what();
  }
}

nlohmann::json strip_timing(nlohmann::json j) {
  if (j.is_object()) j.erase("timing");
  return j;
}

void SummaryReport::add(const simplicity::SimplicityVerdict& v) {
  ++valid;
  ++totals[simplicity::to_string(v.kind)];
}

double SummaryReport::absolutely_simple_fraction() const {
  if (valid == 0) return 0.0;
  auto it = totals.find(simplicity::to_string(simplicity::VerdictKind::AbsolutelySimple));
  const std::uint64_t hits = it == totals.end() ? 0 : it->second;
  return static_cast<double>(hits) / static_cast<double>(valid);
}

nlohmann::json summary_to_json(const SummaryReport& s, const nlohmann::json& config) {
  using simplicity::VerdictKind;
  nlohmann::json totals = nlohmann::json::object();
  for (auto k : {VerdictKind::AbsolutelySimple, VerdictKind::NotSimple, VerdictKind::NotAbsolutelySimple,
                 VerdictKind::Inconclusive}) {
    const auto name = simplicity::to_string(k);
    auto it = s.totals.find(name);
    totals[name] = it == s.totals.end() ? 0 : it->second;
  }
  nlohmann::json j;
  if (!config.is_null()) j["config"] = config;
  j["enumerated"] = s.enumerated;
  j["valid"] = s.valid;
  j["singular_skipped"] = s.singular_skipped;
  j["totals"] = totals;
  j["absolutely_simple"] = totals[simplicity::to_string(VerdictKind::AbsolutelySimple)];
  j["empirical_fraction"] = s.absolutely_simple_fraction();
  j["note"] = "fraction of valid equations, not of isomorphism classes of curves";
  return j;
}

}  // namespace frobtorus::survey
