#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frobtorus/fq_poly.hpp"
#include "frobtorus/gf.hpp"

namespace frobtorus::curves {

/// y^2 + h(x) y = f(x) over F_q. Only validate_curve builds one, so a live
/// instance is always nonsingular with consistent degrees.
class HyperellipticCurve {
 public:
  const gf::FieldPtr& base() const noexcept { return h_.field(); }
  const gf::FqPoly& h() const noexcept { return h_; }
  const gf::FqPoly& f() const noexcept { return f_; }
  int genus() const noexcept { return genus_; }

  bool operator==(const HyperellipticCurve& o) const;

 private:
  friend HyperellipticCurve validate_curve(const gf::FieldPtr&, const gf::FqPoly&, const gf::FqPoly&, int);
  HyperellipticCurve(gf::FqPoly h, gf::FqPoly f, int genus) : h_(std::move(h)), f_(std::move(f)), genus_(genus) {}

  gf::FqPoly h_;
  gf::FqPoly f_;
  int genus_;
};

struct PointCounts {
  std::uint64_t q = 0;
  int g = 0;
  std::vector<std::uint64_t> counts;  // N_1, ..., N_g

  bool operator==(const PointCounts&) const = default;
};

/// Throws BadDegrees or Singular (the message names a witness point when one
/// was found within the field size cap).
HyperellipticCurve validate_curve(const gf::FieldPtr& base, const gf::FqPoly& h, const gf::FqPoly& f, int genus);

/// Genus read off deg f = 2g+1 or 2g+2.
HyperellipticCurve validate_curve(const gf::FieldPtr& base, const gf::FqPoly& h, const gf::FqPoly& f);

/// N_i = #C(F_{q^i}), affine solutions plus points at infinity.
std::uint64_t count_points(const HyperellipticCurve& curve, int i);

/// (N_1, ..., N_g), Weil bound checked.
PointCounts counts_up_to_genus(const HyperellipticCurve& curve);

/// |N_i - (q^i + 1)| <= 2g sqrt(q^i), in exact integer arithmetic.
bool satisfies_weil_bound(const PointCounts& counts);

/// Maps codes of `from` into `to` (deg from | deg to), sending the generator t
/// of `from` to the first root of its modulus in enumeration order of `to`.
std::vector<gf::FieldSpec::Code> embed(const gf::FieldPtr& from, const gf::FieldPtr& to,
                                       const std::vector<gf::FieldSpec::Code>& codes);

// Text form: "p^k; h=<coeffs>; f=<coeffs>", coefficients low-to-high. Prime
// field coefficients are integers; extension field coefficients are tuples
// "(c_0,...,c_{k-1})" of the element's coefficient vector.
std::string to_text(const HyperellipticCurve& curve);
HyperellipticCurve parse_curve(std::string_view text);

}  // namespace frobtorus::curves
