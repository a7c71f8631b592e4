#include "frobtorus/curves.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "frobtorus/error.hpp"

namespace frobtorus::curves {

using gf::FieldPtr;
using gf::FieldSpec;
using gf::FqPoly;
using Code = FieldSpec::Code;

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    out *= base;
    if (out > gf::kMaxFieldSize) {
      throw Error(ErrorCode::SizeExceeded, "extension field exceeds the size cap 2^20");
    }
  }
  return out;
}

/// F_{q^i} for a base field F_{p^k}.
FieldPtr extension_field(const FieldPtr& base, int i) {
  checked_power(base->order(), static_cast<std::uint64_t>(i));
  return gf::field_create(base->characteristic(), base->degree() * static_cast<std::uint32_t>(i));
}

std::string element_text(const FieldSpec& field, Code c) {
  if (field.degree() == 1) return std::to_string(c);
  std::string s = "(";
  const auto rep = field.rep(c);
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rep[i]);
  }
  return s + ")";
}

std::string point_text(const FieldSpec& field, Code x, Code y) {
  return "(" + element_text(field, x) + ", " + element_text(field, y) + ") over " + field.describe();
}

/// First root of `poly` (over base) in an extension of degree up to deg poly,
/// within the size cap.
std::optional<std::pair<FieldPtr, Code>> find_root(const FqPoly& poly) {
  const FieldPtr& base = poly.field();
  for (int m = 1; m <= poly.degree(); ++m) {
    FieldPtr ext;
    try {
      ext = extension_field(base, m);
    } catch (const Error&) {
      return std::nullopt;
    }
    const FqPoly lifted(ext, embed(base, ext, poly.coeffs()));
    for (std::uint32_t r = 0; r < ext->order(); ++r) {
      const Code x = ext->code_at_rank(r);
      if (lifted.evaluate(x) == 0) return std::make_pair(ext, x);
    }
  }
  return std::nullopt;
}

/// Square root in characteristic 2: a^{2^{K-1}}.
Code sqrt_char2(const FieldSpec& field, Code a) {
  for (std::uint32_t i = 0; i + 1 < field.degree(); ++i) a = field.mul(a, a);
  return a;
}

void check_singularities(const FqPoly& h, const FqPoly& f, int genus) {
  const FieldPtr& base = f.field();
  const FieldSpec& F = *base;
  if (F.characteristic() != 2) {
    const FqPoly d = gcd(f, f.derivative());
    if (d.degree() > 0) {
      std::string witness = "f is not squarefree";
      if (auto root = find_root(d)) witness += "; singular point " + point_text(*root->first, root->second, 0);
      throw Error(ErrorCode::Singular, witness);
    }
    return;
  }

  // Characteristic 2: a singular affine point has h(x0) = 0, y0^2 = f(x0) and
  // h'(x0) y0 = f'(x0), i.e. x0 is a common root of h and h'^2 f + f'^2.
  const FqPoly hd = h.derivative();
  const FqPoly fd = f.derivative();
  const FqPoly d = gcd(h, hd * hd * f + fd * fd);
  if (d.degree() > 0) {
    std::string witness = "singular affine point";
    if (auto root = find_root(d)) {
      const FieldSpec& ext = *root->first;
      const FqPoly lifted_f(root->first, embed(base, root->first, f.coeffs()));
      const Code y0 = sqrt_char2(ext, lifted_f.evaluate(root->second));
      witness += " " + point_text(ext, root->second, y0);
    }
    throw Error(ErrorCode::Singular, witness);
  }
  // Chart at infinity: v^2 + H(u) v = F(u), H(u) = u^{g+1} h(1/u),
  // F(u) = u^{2g+2} f(1/u). Singular at u = 0 iff H(0) = 0 and
  // H'(0)^2 F(0) = F'(0)^2.
  const int top = 2 * genus + 2;
  const Code h0 = h.coeff(genus + 1);
  const Code h1 = h.coeff(genus);
  const Code f0 = f.coeff(top);
  const Code f1 = f.coeff(top - 1);
  if (h0 == 0 && F.mul(F.mul(h1, h1), f0) == F.mul(f1, f1)) {
    throw Error(ErrorCode::Singular, "singular point at infinity");
  }
}

/// Solutions z in `field` of z^2 + a z = b.
std::uint64_t quadratic_solutions(const FieldSpec& field, Code a, Code b) {
  if (field.characteristic() == 2) {
    if (a == 0) return 1;
    const Code c = field.div(b, field.mul(a, a));
    return field.trace_f2(c) == 0 ? 2 : 0;
  }
  // (2z + a)^2 = a^2 + 4b
  const Code disc = field.add(field.mul(a, a), field.mul(field.from_int(4), b));
  return static_cast<std::uint64_t>(1 + field.chi(disc));
}

std::vector<std::uint32_t> to_logs(const FieldSpec& field, const std::vector<Code>& codes) {
  std::vector<std::uint32_t> out(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) out[i] = field.log(codes[i]);
  return out;
}

/// Horner's rule in the log domain: returns log f(g^l).
inline std::uint32_t eval_log(const FieldSpec& field, const std::vector<std::uint32_t>& coeff_logs,
                              std::uint32_t l, std::uint32_t n) {
  constexpr std::uint32_t kZero = FieldSpec::kZeroLog;
  std::uint32_t acc = kZero;
  for (std::size_t j = coeff_logs.size(); j-- > 0;) {
    if (acc != kZero) {
      acc += l;
      if (acc >= n) acc -= n;
    }
    const std::uint32_t c = coeff_logs[j];
    if (acc == kZero) {
      acc = c;
    } else if (c != kZero) {
      std::uint32_t diff = c >= acc ? c - acc : c + n - acc;
      const std::uint32_t z = field.zech(diff);
      if (z == kZero) {
        acc = kZero;
      } else {
        acc += z;
        if (acc >= n) acc -= n;
      }
    }
  }
  return acc;
}

std::uint64_t affine_count_odd(const FieldSpec& field, const std::vector<Code>& f) {
  const std::uint32_t n = field.order() - 1;
  const auto logs = to_logs(field, f);
  std::int64_t chi_sum = field.chi(f.empty() ? 0 : f[0]);
  for (std::uint32_t l = 0; l < n; ++l) {
    const std::uint32_t v = eval_log(field, logs, l, n);
    if (v != FieldSpec::kZeroLog) chi_sum += (v & 1u) == 0 ? 1 : -1;
  }
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(field.order()) + chi_sum);
}

std::uint64_t affine_count_char2(const FieldSpec& field, const std::vector<Code>& h, const std::vector<Code>& f) {
  const std::uint32_t n = field.order() - 1;
  const auto hlogs = to_logs(field, h);
  const auto flogs = to_logs(field, f);
  auto solutions = [&](std::uint32_t hl, std::uint32_t fl) -> std::uint64_t {
    if (hl == FieldSpec::kZeroLog) return 1;
    if (fl == FieldSpec::kZeroLog) return 2;
    // z^2 + z = f / h^2
    std::uint64_t e = (std::uint64_t{fl} + 2 * std::uint64_t{n} - 2 * std::uint64_t{hl}) % n;
    return field.trace_f2(field.exp(static_cast<std::uint32_t>(e))) == 0 ? 2 : 0;
  };
  std::uint64_t total = solutions(field.log(h.empty() ? 0 : h[0]), field.log(f.empty() ? 0 : f[0]));
  for (std::uint32_t l = 0; l < n; ++l) total += solutions(eval_log(field, hlogs, l, n), eval_log(field, flogs, l, n));
  return total;
}

// --- text parsing -------------------------------------------------------

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> out;
  s = trim(s);
  if (s.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw Error(ErrorCode::ParseError, "unbalanced parentheses");
    if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw Error(ErrorCode::ParseError, "unbalanced parentheses");
  out.push_back(trim(s.substr(start)));
  return out;
}

Code parse_element(const FieldSpec& field, std::string_view s) {
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw Error(ErrorCode::ParseError, "unterminated tuple");
    std::vector<std::uint32_t> rep;
    for (auto part : split_top_level(s.substr(1, s.size() - 2))) {
      const auto v = parse_int(part);
      if (v < 0 || v >= static_cast<std::int64_t>(field.characteristic())) {
        throw Error(ErrorCode::ParseError, "tuple entry outside [0, p)");
      }
      rep.push_back(static_cast<std::uint32_t>(v));
    }
    if (rep.size() > field.degree()) throw Error(ErrorCode::ParseError, "tuple longer than the extension degree");
    return field.from_rep(rep);
  }
  return field.from_int(parse_int(s));
}

FqPoly parse_poly(const FieldPtr& field, std::string_view s) {
  std::vector<Code> coeffs;
  for (auto part : split_top_level(s)) {
    if (part.empty()) throw Error(ErrorCode::ParseError, "empty coefficient");
    coeffs.push_back(parse_element(*field, part));
  }
  return {field, std::move(coeffs)};
}

std::string_view expect_assignment(std::string_view part, std::string_view name) {
  part = trim(part);
  const auto eq = part.find('=');
  if (eq == std::string_view::npos || trim(part.substr(0, eq)) != name) {
    throw Error(ErrorCode::ParseError, "expected '" + std::string(name) + " = ...'");
  }
  return part.substr(eq + 1);
}

std::string poly_text(const FqPoly& poly) {
  std::string s;
  for (int i = 0; i <= poly.degree(); ++i) {
    if (i) s += ",";
    s += element_text(*poly.field(), poly.coeff(i));
  }
  return s;
}

}  // namespace

bool HyperellipticCurve::operator==(const HyperellipticCurve& o) const {
  return genus_ == o.genus_ && base()->characteristic() == o.base()->characteristic() &&
         base()->degree() == o.base()->degree() && h_ == o.h_ && f_ == o.f_;
}

HyperellipticCurve validate_curve(const FieldPtr& base, const FqPoly& h, const FqPoly& f, int genus) {
  if (h.field() != base || f.field() != base) throw Error(ErrorCode::BadDegrees, "h and f must be over the base field");
  if (genus < 1) throw Error(ErrorCode::BadDegrees, "genus must be at least 1");
  if (f.degree() != 2 * genus + 1 && f.degree() != 2 * genus + 2) {
    throw Error(ErrorCode::BadDegrees, "deg f = " + std::to_string(f.degree()) + " is not 2g+1 or 2g+2 for g = " +
                                           std::to_string(genus));
  }
  if (f.lead() != 1) throw Error(ErrorCode::BadDegrees, "f must be monic");
  if (h.degree() > genus + 1) throw Error(ErrorCode::BadDegrees, "deg h exceeds g+1");
  if (base->characteristic() == 2) {
    if (h.is_zero()) throw Error(ErrorCode::BadDegrees, "h must be nonzero in characteristic 2");
  } else if (!h.is_zero()) {
    throw Error(ErrorCode::BadDegrees, "h must be zero in odd characteristic");
  }
  check_singularities(h, f, genus);
  return HyperellipticCurve(h, f, genus);
}

HyperellipticCurve validate_curve(const FieldPtr& base, const FqPoly& h, const FqPoly& f) {
  if (f.degree() < 3) throw Error(ErrorCode::BadDegrees, "deg f must be at least 3");
  return validate_curve(base, h, f, (f.degree() + 1) / 2 - 1);
}

std::vector<Code> embed(const FieldPtr& from, const FieldPtr& to, const std::vector<Code>& codes) {
  if (from->characteristic() != to->characteristic() || to->degree() % from->degree() != 0) {
    throw Error(ErrorCode::InvariantViolation, "no embedding " + from->describe() + " -> " + to->describe());
  }
  if (from->degree() == 1 || from == to) return codes;
  // Root of the modulus of `from` inside `to`.
  const FqPoly modulus(to, std::vector<Code>(from->modulus().begin(), from->modulus().end()));
  std::optional<Code> root;
  for (std::uint32_t r = 0; r < to->order() && !root; ++r) {
    const Code c = to->code_at_rank(r);
    if (modulus.evaluate(c) == 0) root = c;
  }
  if (!root) throw Error(ErrorCode::InvariantViolation, "modulus has no root in the extension");
  std::vector<Code> out;
  out.reserve(codes.size());
  for (Code c : codes) {
    const auto rep = from->rep(c);
    Code acc = 0;
    for (std::size_t j = rep.size(); j-- > 0;) acc = to->add(to->mul(acc, *root), rep[j]);
    out.push_back(acc);
  }
  return out;
}

std::uint64_t count_points(const HyperellipticCurve& curve, int i) {
  if (i < 1 || i > curve.genus()) throw Error(ErrorCode::BadDegrees, "extension index must lie in [1, g]");
  const FieldPtr& base = curve.base();
  const FieldPtr ext = extension_field(base, i);
  const auto f = embed(base, ext, curve.f().coeffs());
  const auto h = embed(base, ext, curve.h().coeffs());

  const std::uint64_t affine = ext->characteristic() == 2 ? affine_count_char2(*ext, h, f) : affine_count_odd(*ext, f);

  const int g = curve.genus();
  const Code top_h = static_cast<int>(h.size()) > g + 1 ? h[g + 1] : 0;
  const Code top_f = static_cast<int>(f.size()) > 2 * g + 2 ? f[2 * g + 2] : 0;
  return affine + quadratic_solutions(*ext, top_h, top_f);
}

bool satisfies_weil_bound(const PointCounts& counts) {
  unsigned __int128 qi = 1;
  for (std::size_t i = 0; i < counts.counts.size(); ++i) {
    qi *= counts.q;
    const __int128 dev = static_cast<__int128>(counts.counts[i]) - static_cast<__int128>(qi) - 1;
    const unsigned __int128 dev2 = static_cast<unsigned __int128>(dev * dev);
    if (dev2 > static_cast<unsigned __int128>(4) * counts.g * counts.g * qi) return false;
  }
  return true;
}

PointCounts counts_up_to_genus(const HyperellipticCurve& curve) {
  PointCounts out;
  out.q = curve.base()->order();
  out.g = curve.genus();
  for (int i = 1; i <= curve.genus(); ++i) out.counts.push_back(count_points(curve, i));
  if (!satisfies_weil_bound(out)) throw Error(ErrorCode::WeilBoundViolated, "counts of " + to_text(curve));
  return out;
}

std::string to_text(const HyperellipticCurve& curve) {
  const auto& F = *curve.base();
  std::string s = std::to_string(F.characteristic());
  if (F.degree() > 1) s += "^" + std::to_string(F.degree());
  return s + "; h=" + poly_text(curve.h()) + "; f=" + poly_text(curve.f());
}

HyperellipticCurve parse_curve(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) throw Error(ErrorCode::ParseError, "curve text must look like 'p^k; h=...; f=...'");
  const auto field_part = trim(parts[0]);
  std::int64_t p = 0;
  std::int64_t k = 1;
  if (const auto caret = field_part.find('^'); caret != std::string_view::npos) {
    p = parse_int(field_part.substr(0, caret));
    k = parse_int(field_part.substr(caret + 1));
  } else {
    p = parse_int(field_part);
  }
  if (p < 2 || k < 1 || p > (1 << 20) || k > 20) throw Error(ErrorCode::ParseError, "bad field size");
  const FieldPtr field = gf::field_create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
  const FqPoly h = parse_poly(field, expect_assignment(parts[1], "h"));
  const FqPoly f = parse_poly(field, expect_assignment(parts[2], "f"));
  return validate_curve(field, h, f);
}

}  // namespace frobtorus::curves
