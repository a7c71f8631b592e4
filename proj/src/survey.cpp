#include "frobtorus/survey.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "frobtorus/error.hpp"

namespace frobtorus::survey {

namespace {

using Clock = std::chrono::steady_clock;
using gf::FieldSpec;
using gf::FqPoly;

std::int64_t micros(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
}

std::string mode_name(Mode m) { return m == Mode::FindFirst ? "find-first" : "full-enumeration"; }

struct Equation {
  std::vector<FieldSpec::Code> h;
  std::vector<FieldSpec::Code> f;
};

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Lexicographic order with c_0 most significant; f monic of the configured
/// degree, and for p = 2 the nonzero h of degree <= g+1 form the outer loop.
Equation equation_at(const SurveyConfig& cfg, std::uint64_t index) {
  Equation eq;
  const std::uint64_t nf = ipow(cfg.p, cfg.degree);
  std::uint64_t fi = index;
  if (cfg.p == 2) {
    fi = index % nf;
    const std::uint64_t hi = index / nf + 1;
    const int hlen = cfg.genus + 2;
    for (int j = 0; j < hlen; ++j) eq.h.push_back(static_cast<FieldSpec::Code>((hi >> (hlen - 1 - j)) & 1U));
  }
  eq.f.assign(static_cast<std::size_t>(cfg.degree) + 1, 0);
  for (int j = cfg.degree - 1; j >= 0; --j) {
    eq.f[static_cast<std::size_t>(j)] = static_cast<FieldSpec::Code>(fi % cfg.p);
    fi /= cfg.p;
  }
  eq.f.back() = 1;
  return eq;
}

std::string coeff_text(const std::vector<FieldSpec::Code>& c) {
  std::size_t n = c.size();
  while (n > 0 && c[n - 1] == 0) --n;
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

std::string equation_text(const SurveyConfig& cfg, const Equation& eq) {
  return std::to_string(cfg.p) + "; h=" + coeff_text(eq.h) + "; f=" + coeff_text(eq.f);
}

struct Outcome {
  std::optional<CurveRecord> record;
  std::string text;  // set for skipped equations
};

CurveRecord analyze(const curves::HyperellipticCurve& curve, Clock::time_point start) {
  CurveRecord r;
  r.curve = curves::to_text(curve);
  r.counts = curves::counts_up_to_genus(curve);
  const auto t1 = Clock::now();
  r.weil = zeta::weil_from_counts(r.counts);
  const auto t2 = Clock::now();
  r.verdict = simplicity::classify(r.weil);
  const auto t3 = Clock::now();
  r.timing = {micros(start, t1), micros(t1, t2), micros(t2, t3)};
  return r;
}

Outcome run_one(const SurveyConfig& cfg, const gf::FieldPtr& base, std::uint64_t index) {
  const Equation eq = equation_at(cfg, index);
  const auto start = Clock::now();
  Outcome out;
  try {
    auto curve = curves::validate_curve(base, FqPoly(base, eq.h), FqPoly(base, eq.f), cfg.genus);
    out.record = analyze(curve, start);
    out.record->index = index;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    out.text = equation_text(cfg, eq);
  }
  return out;
}

std::vector<Outcome> run_batch(const SurveyConfig& cfg, const gf::FieldPtr& base, std::uint64_t first,
                               std::uint64_t size) {
  std::vector<Outcome> out(size);
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1U, cfg.threads), size));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < size; ++i) out[i] = run_one(cfg, base, first + i);
    return out;
  }
  std::vector<std::exception_ptr> errors(size);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t i; (i = next.fetch_add(1)) < size;) {
        try {
          out[i] = run_one(cfg, base, first + i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

nlohmann::json skip_json(std::uint64_t index, const std::string& text) {
  return {{"index", index}, {"curve", text}, {"skipped", "singular"}};
}

bool is_absolutely_simple(const CurveRecord& r) {
  return r.verdict.kind == simplicity::VerdictKind::AbsolutelySimple;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Resume {
  SummaryReport summary;
  std::uint64_t next = 0;
  std::uint64_t found = 0;
  bool has_header = false;
};

/// Reads committed (newline-terminated) lines of an existing output file and
/// truncates a torn tail.
Resume load_existing(const SurveyConfig& cfg, const SurveyHooks& hooks) {
  Resume st;
  namespace fs = std::filesystem;
  if (!fs::exists(cfg.output)) return st;
  const std::string data = read_file(cfg.output);
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < data.size()) {
    const std::size_t nl = data.find('\n', pos);
    if (nl == std::string::npos) {
      fs::resize_file(cfg.output, pos);
      break;
    }
    ++line_no;
    const std::string line = data.substr(pos, nl - pos);
    pos = nl + 1;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw CorruptRecordError(line_no, "unparseable line in " + cfg.output);
    }
    if (line_no == 1) {
      if (!j.is_object() || !j.contains("frobtorus_survey")) {
        throw CorruptRecordError(line_no, cfg.output + " does not start with a survey header");
      }
      if (j["frobtorus_survey"] != config_json(cfg)) {
        throw Error(ErrorCode::ResumeMismatch,
                    cfg.output + " holds a survey with config " + j["frobtorus_survey"].dump());
      }
      st.has_header = true;
      continue;
    }
    if (!j.is_object() || !j.contains("index") || !j["index"].is_number_unsigned() ||
        j["index"].get<std::uint64_t>() != st.next) {
      throw CorruptRecordError(line_no, "expected index " + std::to_string(st.next));
    }
    ++st.summary.enumerated;
    ++st.next;
    if (j.contains("skipped")) {
      ++st.summary.singular_skipped;
      continue;
    }
    CurveRecord r;
    try {
      r = record_from_json(j);
    } catch (const Error& e) {
      throw CorruptRecordError(line_no, e.what());
    }
    st.summary.add(r.verdict);
    if (is_absolutely_simple(r)) ++st.found;
    if (hooks.on_record) hooks.on_record(r);
  }
  return st;
}

}  // namespace

void validate_config(const SurveyConfig& cfg) {
  if (!gf::is_prime(cfg.p)) throw Error(ErrorCode::NonPrime, std::to_string(cfg.p) + " is not prime");
  if (cfg.genus < 1) throw Error(ErrorCode::BadDegrees, "genus must be at least 1");
  if (cfg.degree != 2 * cfg.genus + 1 && cfg.degree != 2 * cfg.genus + 2) {
    throw Error(ErrorCode::BadDegrees, "deg must be 2g+1 or 2g+2");
  }
  if (cfg.mode == Mode::FindFirst && cfg.count == 0) throw Error(ErrorCode::BadDegrees, "count must be positive");
  // Counting N_g needs the field with p^g elements.
  std::uint64_t size = 1;
  for (int i = 0; i < cfg.genus; ++i) {
    size *= cfg.p;
    if (size > gf::kMaxFieldSize) {
      throw Error(ErrorCode::SizeExceeded, "p^g exceeds the field size cap " + std::to_string(gf::kMaxFieldSize));
    }
  }
  // Enumeration indices must fit in 64 bits.
  long double total = 1;
  for (int i = 0; i < cfg.degree + (cfg.p == 2 ? cfg.genus + 2 : 0); ++i) total *= cfg.p;
  if (total > 1e18L) throw Error(ErrorCode::SizeExceeded, "family too large to enumerate");
}

std::uint64_t family_size(const SurveyConfig& cfg) {
  const std::uint64_t nf = ipow(cfg.p, cfg.degree);
  if (cfg.p == 2) return nf * (ipow(2, cfg.genus + 2) - 1);
  return nf;
}

nlohmann::json config_json(const SurveyConfig& cfg) {
  nlohmann::json j{{"p", cfg.p}, {"genus", cfg.genus}, {"deg", cfg.degree}, {"mode", mode_name(cfg.mode)}};
  j["limit"] = cfg.limit ? nlohmann::json(*cfg.limit) : nlohmann::json(nullptr);
  if (cfg.mode == Mode::FindFirst) j["count"] = cfg.count;
  return j;
}

std::string fingerprint(const SurveyConfig& cfg) {
  // FNV-1a over the canonical config text.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : config_json(cfg).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SurveyResult survey_run(const SurveyConfig& cfg, const SurveyHooks& hooks) {
  validate_config(cfg);
  const gf::FieldPtr base = gf::field_create(cfg.p, 1);
  const std::uint64_t total = family_size(cfg);
  const std::uint64_t end = cfg.limit ? std::min(*cfg.limit, total) : total;

  SurveyResult result;
  Resume st;
  std::ofstream out;
  if (!cfg.output.empty()) {
    st = load_existing(cfg, hooks);
    out.open(cfg.output, std::ios::binary | std::ios::app);
    if (!out) throw Error(ErrorCode::Io, "cannot open " + cfg.output);
    if (!st.has_header) {
      nlohmann::json header{{"frobtorus_survey", config_json(cfg)}, {"fingerprint", fingerprint(cfg)}};
      out << header.dump() << '\n';
      out.flush();
    }
  }
  result.summary = st.summary;
  result.resumed_from = st.next;

  const bool find = cfg.mode == Mode::FindFirst;
  std::uint64_t found = st.found;
  std::uint64_t next = st.next;
  std::uint64_t written = 0;
  bool done = find && found >= cfg.count;
  const std::uint64_t batch = 8ULL * std::max(1U, cfg.threads);

  while (!done && next < end) {
    const std::uint64_t size = std::min(batch, end - next);
    auto outcomes = run_batch(cfg, base, next, size);
    for (std::uint64_t i = 0; i < size && !done; ++i, ++next) {
      const Outcome& o = outcomes[i];
      ++result.summary.enumerated;
      if (o.record) {
        result.summary.add(o.record->verdict);
        if (out.is_open()) out << to_json(*o.record).dump() << '\n';
        if (hooks.on_record) hooks.on_record(*o.record);
        if (is_absolutely_simple(*o.record)) ++found;
      } else {
        ++result.summary.singular_skipped;
        if (out.is_open()) out << skip_json(next, o.text).dump() << '\n';
      }
      ++written;
      if (hooks.stop_after && written >= *hooks.stop_after) {
        if (out.is_open()) out.flush();
        return result;
      }
      if (find && found >= cfg.count) done = true;
    }
    if (out.is_open()) {
      out.flush();
      if (!out) throw Error(ErrorCode::Io, "write to " + cfg.output + " failed");
    }
  }
  result.complete = true;
  return result;
}

CurveRecord analyze_curve_text(const std::string& text) {
  const auto start = Clock::now();
  const auto curve = curves::parse_curve(text);
  return analyze(curve, start);
}

nlohmann::json analyze_weil_json(const nlohmann::json& j) {
  const auto P = zeta::weil_from_json(j);
  // Root moduli are reported, never used to decide the verdict.
  const auto check = zeta::is_weil(P);
  nlohmann::json root_check{{"ok", check.ok}, {"max_relative_deviation", check.max_relative_deviation}};
  if (check.offending_root) root_check["offending_root"] = {check.offending_root->real(), check.offending_root->imag()};
  return {{"weil", zeta::to_json(P)},
          {"verdict", simplicity::to_json(simplicity::classify(P))},
          {"root_check", root_check}};
}

nlohmann::json report(const std::string& path) {
  const std::string data = read_file(path);
  SummaryReport s;
  nlohmann::json config = nullptr;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < data.size()) {
    std::size_t nl = data.find('\n', pos);
    ++line_no;
    if (nl == std::string::npos) throw CorruptRecordError(line_no, "truncated final line");
    const std::string line = data.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw CorruptRecordError(line_no, "unparseable JSON");
    }
    if (line_no == 1 && j.is_object() && j.contains("frobtorus_survey")) {
      config = j["frobtorus_survey"];
      continue;
    }
    if (j.is_object() && j.contains("skipped")) {
      ++s.enumerated;
      ++s.singular_skipped;
      continue;
    }
    CurveRecord r;
    try {
      r = record_from_json(j);
    } catch (const Error& e) {
      throw CorruptRecordError(line_no, e.what());
    }
    if (auto why = record_verification_failure(r); !why.empty()) throw CorruptRecordError(line_no, why);
    ++s.enumerated;
    s.add(r.verdict);
  }
  return summary_to_json(s, config);
}

}  // namespace frobtorus::survey
