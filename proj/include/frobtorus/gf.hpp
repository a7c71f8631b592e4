#pragma once

// Arithmetic in small finite fields F_{p^k}.
//
// An element of F_{p^k} = F_p[t]/(m(t)) is identified with its coefficient
// vector (c_0, ..., c_{k-1}). Internally it is packed into a 32-bit code
// c_0 + c_1 p + ... + c_{k-1} p^{k-1}; the code is an implementation handle,
// not the enumeration order. Enumeration and "lexicographic" comparisons
// always compare the coefficient vector starting from c_0.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace frobtorus::gf {

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Returns F_{p^k} with the lexicographically smallest monic irreducible
/// modulus of degree k. Fields are cached, so repeated calls share tables.
/// Throws NonPrime, SizeExceeded.
FieldPtr field_create(std::uint32_t p, std::uint32_t k);

class FieldSpec {
 public:
  using Code = std::uint32_t;
  /// Log of zero in the log/Zech domain.
  static constexpr std::uint32_t kZeroLog = 0xFFFFFFFFu;

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Monic modulus, low-to-high, length k + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Code zero() const noexcept { return 0; }
  Code one() const noexcept { return 1; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;  // throws DivisionByZero
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const;
  /// Quadratic character: 0 for zero, +1 for nonzero squares, -1 otherwise.
  /// Only meaningful in odd characteristic.
  int chi(Code a) const;
  /// Absolute trace to F_2; characteristic 2 only.
  int trace_f2(Code a) const;

  Code from_rep(std::span<const std::uint32_t> rep) const;
  std::vector<std::uint32_t> rep(Code a) const;
  Code from_int(std::int64_t v) const;

  /// Position of an element in the lexicographic enumeration, and back.
  std::uint32_t rank_of(Code a) const;
  Code code_at_rank(std::uint32_t rank) const;

  /// Generator of the multiplicative group used by the log tables: the first
  /// primitive element in enumeration order.
  Code generator() const noexcept { return generator_; }

  // Log-domain access for the counting kernels.
  std::uint32_t log(Code a) const noexcept { return log_[a]; }
  Code exp(std::uint32_t l) const noexcept { return exp_[l]; }
  /// log(1 + g^l), or kZeroLog when 1 + g^l = 0.
  std::uint32_t zech(std::uint32_t l) const noexcept { return zech_[l]; }

  std::string describe() const;

  FieldSpec(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

 private:
  Code slow_add(Code a, Code b) const;
  Code slow_mul(Code a, Code b) const;
  Code slow_pow(Code a, std::uint64_t e) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Code generator_ = 1;
  std::vector<Code> exp_;            // length 2(q-1)
  std::vector<std::uint32_t> log_;   // length q
  std::vector<std::uint32_t> zech_;  // length q-1
  std::uint32_t trace_mask_ = 0;
};

/// Value type for a field element; carries its field.
class FieldElement {
 public:
  using Code = FieldSpec::Code;

  FieldElement(FieldPtr field, Code code);
  static FieldElement from_rep(const FieldPtr& field, std::span<const std::uint32_t> rep);
  static FieldElement from_int(const FieldPtr& field, std::int64_t v);

  const FieldPtr& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }
  std::vector<std::uint32_t> rep() const { return field_->rep(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;

  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Code code_;
};

FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t e);

/// All q elements, lexicographic in the coefficient vector.
std::vector<FieldElement> enumerate(const FieldPtr& field);

}  // namespace frobtorus::gf
