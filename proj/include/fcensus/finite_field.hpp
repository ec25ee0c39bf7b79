#pragma once

// Finite fields F_{p^e} in the polynomial basis F_p[x]/(modulus).
//
// Elements are stored as a single integer code: the coefficient vector
// (c_0, ..., c_{e-1}) read as base-p digits, c_0 least significant. Code 0 is
// zero and code 1 is one in every field. Fields up to kTableThreshold elements
// carry log/antilog/Zech tables; larger ones fall back to polynomial
// arithmetic on the digit vectors.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fcensus/error.hpp"

namespace fcensus {

using BigInt = boost::multiprecision::cpp_int;
using Code = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kTableThreshold = std::uint64_t{1} << 16;

class FieldDescriptor;
using Field = std::shared_ptr<const FieldDescriptor>;

/// Returns the field F_{p^e} with the lexicographically smallest monic
/// irreducible modulus (coefficients compared from the constant term up).
/// Fields are cached, so two calls with the same (p, e) share one descriptor.
Field make_field(std::uint32_t p, std::uint32_t e, std::uint64_t cap = kDefaultFieldCap);

bool is_prime(std::uint64_t n);

class FieldDescriptor {
 public:
  // Use make_field(); public only for std::make_shared.
  FieldDescriptor(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint64_t q() const noexcept { return q_; }
  BigInt order() const { return BigInt(q_); }
  /// Monic modulus, constant term first, length e + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool has_tables() const noexcept { return !exp_.empty(); }
  bool same_as(const FieldDescriptor& other) const noexcept {
    return p_ == other.p_ && e_ == other.e_;
  }
  std::string name() const;

  /// Class of x in F_p[x]/(modulus).
  Code generator() const noexcept { return gen_; }
  /// A generator of the multiplicative group.
  Code primitive() const noexcept { return primitive_; }

  std::vector<std::uint32_t> coeffs(Code a) const;
  Code from_coeffs(std::span<const std::uint32_t> c) const;
  /// Image of an integer in the prime subfield.
  Code from_int(std::int64_t v) const;

  Code add(Code a, Code b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (has_tables()) {
      if (a == 0) return b;
      if (b == 0) return a;
      std::int64_t d = static_cast<std::int64_t>(log_[b]) - log_[a];
      if (d < 0) d += static_cast<std::int64_t>(q_ - 1);
      const std::int32_t z = zech_[d];
      if (z < 0) return 0;
      return exp_[log_[a] + static_cast<std::uint32_t>(z)];
    }
    return add_slow(a, b);
  }
  Code neg(Code a) const noexcept {
    if (p_ == 2) return a;
    if (has_tables()) return neg_[a];
    return neg_slow(a);
  }
  Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }
  Code mul(Code a, Code b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (has_tables()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
  }
  /// Throws Errc::kDivisionByZero for a == 0.
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, const BigInt& exponent) const;
  Code pow(Code a, std::uint64_t exponent) const;
  /// x -> x^{p^r}.
  Code frobenius(Code a, std::uint64_t r = 1) const noexcept;

  bool is_prime_field_element(Code a) const noexcept { return a < p_; }

 private:
  Code add_slow(Code a, Code b) const noexcept;
  Code neg_slow(Code a) const noexcept;
  Code mul_slow(Code a, Code b) const noexcept;
  Code frobenius_once(Code a) const noexcept;
  void build_tables();
  Code find_primitive() const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  Code gen_ = 0;
  Code primitive_ = 1;

  std::vector<std::uint32_t> exp_;   // size 2(q-1)
  std::vector<std::uint32_t> log_;   // size q, log_[0] unused
  std::vector<std::int32_t> zech_;   // log(1 + g^k), -1 when 1 + g^k = 0
  std::vector<Code> neg_;
  std::vector<Code> frob_;
};

/// A field scalar: a value type carrying its owning field.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field field, Code code);

  static FieldElement zero(const Field& f) { return {f, 0}; }
  static FieldElement one(const Field& f) { return {f, 1}; }
  static FieldElement from_coeffs(const Field& f, std::span<const std::uint32_t> c) {
    return {f, f->from_coeffs(c)};
  }

  const Field& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(code_)}; }
  FieldElement inv() const { return {field_, field_->inv(code_)}; }
  FieldElement pow(const BigInt& exponent) const { return {field_, field_->pow(code_, exponent)}; }

  bool operator==(const FieldElement& o) const noexcept {
    return code_ == o.code_ && field_ && o.field_ && field_->same_as(*o.field_);
  }
  bool operator<(const FieldElement& o) const noexcept { return code_ < o.code_; }

  std::string to_string() const;

 private:
  void check_same(const FieldElement& o) const;

  Field field_;
  Code code_ = 0;
};

FieldElement frobenius(const FieldElement& x, std::uint64_t r = 1);

/// Code table of the embedding F_{p^r} -> F_{p^{rs}} sending the class of x
/// to the smallest-code root of the source modulus. Built once per pair.
const std::vector<Code>& embedding_table(const Field& source, const Field& target);

/// Throws Errc::kNoEmbedding unless the source degree divides the target's.
FieldElement embed(const FieldElement& x, const Field& target);

}  // namespace fcensus
