#include "frobtorus/gf.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "frobtorus/error.hpp"
#include "frobtorus/fq_poly.hpp"

namespace frobtorus::gf {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint32_t> find_modulus(const FieldPtr& prime_field, std::uint32_t k) {
  const std::uint32_t p = prime_field->characteristic();
  std::uint64_t candidates = 1;
  for (std::uint32_t i = 0; i < k; ++i) candidates *= p;
  // Candidates in lexicographic order of (c_0, ..., c_{k-1}), c_0 most significant.
  for (std::uint64_t r = 0; r < candidates; ++r) {
    std::vector<FieldSpec::Code> c(k + 1, 0);
    std::uint64_t rest = r;
    for (std::uint32_t i = k; i-- > 0;) {
      c[i] = static_cast<FieldSpec::Code>(rest % p);
      rest /= p;
    }
    c[k] = 1;
    FqPoly m(prime_field, c);
    if (is_irreducible(m)) return {c.begin(), c.end()};
  }
  throw Error(ErrorCode::InvariantViolation, "no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldPtr field_create(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::BadDegrees, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw Error(ErrorCode::SizeExceeded, std::to_string(p) + "^" + std::to_string(k) +
                                               " exceeds the field size cap 2^20");
    }
  }

  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, k}); it != cache.end()) return it->second;
  }

  FieldPtr field;
  if (k == 1) {
    field = std::make_shared<const FieldSpec>(p, 1, std::vector<std::uint32_t>{0, 1});
  } else {
    auto modulus = find_modulus(field_create(p, 1), k);
    field = std::make_shared<const FieldSpec>(p, k, std::move(modulus));
  }

  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(p, k), field);
  return it->second;
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
  build_tables();
}

FieldSpec::Code FieldSpec::slow_add(Code a, Code b) const {
  if (k_ == 1) return (a + b) % p_;
  Code out = 0;
  Code place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

FieldSpec::Code FieldSpec::slow_mul(Code a, Code b) const {
  if (k_ == 1) return static_cast<Code>((std::uint64_t{a} * b) % p_);
  const auto ra = rep(a);
  const auto rb = rep(b);
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ra[i]} * rb[j]) % p_;
  }
  for (std::size_t d = prod.size(); d-- > k_;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    // t^k = -(m_0 + ... + m_{k-1} t^{k-1})
    for (std::uint32_t i = 0; i < k_; ++i) {
      prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i]) % p_ * c) % p_;
    }
    prod[d] = 0;
  }
  Code out = 0;
  for (std::uint32_t i = k_; i-- > 0;) out = out * p_ + static_cast<Code>(prod[i]);
  return out;
}

FieldSpec::Code FieldSpec::slow_pow(Code a, std::uint64_t e) const {
  Code result = 1;
  while (e > 0) {
    if (e & 1) result = slow_mul(result, a);
    a = slow_mul(a, a);
    e >>= 1;
  }
  return result;
}

void FieldSpec::build_tables() {
  const std::uint32_t n = q_ - 1;
  const auto factors = prime_factors(n);
  generator_ = 0;
  for (std::uint32_t r = 1; r < q_ && generator_ == 0; ++r) {
    const Code a = code_at_rank(r);
    bool primitive = true;
    for (auto f : factors) {
      if (slow_pow(a, n / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator_ = a;
  }

  exp_.assign(2 * std::size_t{n}, 0);
  log_.assign(q_, kZeroLog);
  Code cur = 1;
  for (std::uint32_t l = 0; l < n; ++l) {
    exp_[l] = cur;
    exp_[l + n] = cur;
    log_[cur] = l;
    cur = slow_mul(cur, generator_);
  }

  zech_.assign(n, kZeroLog);
  for (std::uint32_t l = 0; l < n; ++l) {
    const Code v = slow_add(1, exp_[l]);
    zech_[l] = v == 0 ? kZeroLog : log_[v];
  }

  if (p_ == 2) {
    for (std::uint32_t j = 0; j < k_; ++j) {
      Code basis = Code{1} << j;
      Code acc = 0;
      Code frob = basis;
      for (std::uint32_t i = 0; i < k_; ++i) {
        acc = slow_add(acc, frob);
        frob = slow_mul(frob, frob);
      }
      if (acc == 1) trace_mask_ |= basis;
    }
  }
}

FieldSpec::Code FieldSpec::add(Code a, Code b) const {
  if (k_ == 1) {
    const Code s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t n = q_ - 1;
  const std::uint32_t la = log_[a];
  const std::uint32_t lb = log_[b];
  const std::uint32_t z = zech_[lb >= la ? lb - la : lb + n - la];
  if (z == kZeroLog) return 0;
  return exp_[la + z];
}

FieldSpec::Code FieldSpec::neg(Code a) const {
  if (a == 0 || p_ == 2) return a;
  if (k_ == 1) return p_ - a;
  return exp_[log_[a] + (q_ - 1) / 2];
}

FieldSpec::Code FieldSpec::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

FieldSpec::Code FieldSpec::inv(Code a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + describe());
  const std::uint32_t n = q_ - 1;
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : n - l];
}

FieldSpec::Code FieldSpec::pow(Code a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = q_ - 1;
  return exp_[static_cast<std::uint32_t>((log_[a] % n) * (e % n) % n)];
}

int FieldSpec::chi(Code a) const {
  if (a == 0) return 0;
  if (p_ == 2) return 1;
  return (log_[a] & 1u) == 0 ? 1 : -1;
}

int FieldSpec::trace_f2(Code a) const {
  return __builtin_parity(a & trace_mask_);
}

FieldSpec::Code FieldSpec::from_rep(std::span<const std::uint32_t> rep) const {
  if (rep.size() > k_) throw Error(ErrorCode::ParseError, "element has more than k coefficients");
  Code out = 0;
  for (std::size_t i = rep.size(); i-- > 0;) {
    if (rep[i] >= p_) throw Error(ErrorCode::ParseError, "coefficient outside [0, p)");
    out = out * p_ + rep[i];
  }
  return out;
}

std::vector<std::uint32_t> FieldSpec::rep(Code a) const {
  std::vector<std::uint32_t> out(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

FieldSpec::Code FieldSpec::from_int(std::int64_t v) const {
  const std::int64_t r = ((v % static_cast<std::int64_t>(p_)) + p_) % p_;
  return static_cast<Code>(r);
}

std::uint32_t FieldSpec::rank_of(Code a) const {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r = r * p_ + a % p_;
    a /= p_;
  }
  return r;
}

FieldSpec::Code FieldSpec::code_at_rank(std::uint32_t rank) const {
  // rank digits, most significant first, are c_0, c_1, ...; reversing the
  // base-p digits gives the code.
  Code c = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    c = c * p_ + rank % p_;
    rank /= p_;
  }
  return c;
}

std::string FieldSpec::describe() const {
  std::string s = "F_" + std::to_string(p_);
  if (k_ > 1) s += "^" + std::to_string(k_);
  return s;
}

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (code_ >= field_->order()) throw Error(ErrorCode::InvariantViolation, "element code out of range");
}

FieldElement FieldElement::from_rep(const FieldPtr& field, std::span<const std::uint32_t> rep) {
  return {field, field->from_rep(rep)};
}

FieldElement FieldElement::from_int(const FieldPtr& field, std::int64_t v) {
  return {field, field->from_int(v)};
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_) throw Error(ErrorCode::InvariantViolation, "mixed fields in arithmetic");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(code_, o.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(code_, o.code_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  return code_ == o.code_ && (field_ == o.field_ || (field_->characteristic() == o.field_->characteristic() &&
                                                     field_->modulus() == o.field_->modulus()));
}

FieldElement inv(const FieldElement& a) { return {a.field(), a.field()->inv(a.code())}; }

FieldElement pow(const FieldElement& a, std::uint64_t e) { return {a.field(), a.field()->pow(a.code(), e)}; }

std::vector<FieldElement> enumerate(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->order());
  for (std::uint32_t r = 0; r < field->order(); ++r) out.emplace_back(field, field->code_at_rank(r));
  return out;
}

}  // namespace frobtorus::gf
