#pragma once

#include <utility>
#include <vector>

#include "fcensus/finite_field.hpp"

namespace fcensus {

/// Univariate polynomial over a finite field, constant term first, with no
/// trailing zero coefficients. The zero polynomial has degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Code> coeffs);

  static Poly constant(const Field& f, Code c) { return Poly(f, {c}); }
  static Poly x(const Field& f) { return Poly(f, {0, 1}); }
  /// x - root
  static Poly linear(const Field& f, Code root) { return Poly(f, {f->neg(root), 1}); }

  const Field& field() const noexcept { return field_; }
  const std::vector<Code>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Code operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Code leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Code s) const;
  Poly monic() const;
  Poly derivative() const;
  Code eval(Code x) const noexcept;

  bool operator==(const Poly& o) const noexcept { return c_ == o.c_ && field_->same_as(*o.field_); }

  std::string to_string() const;

 private:
  void normalize();
  void check_same(const Poly& o) const;

  Field field_;
  std::vector<Code> c_;
};

/// (quotient, remainder); throws kDivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd (zero when both inputs are zero).
Poly poly_gcd(const Poly& f, const Poly& g);

/// gcd(f, f') == 1.
bool poly_is_squarefree(const Poly& f);

Poly powmod(const Poly& base, const BigInt& exponent, const Poly& modulus);

/// Coefficientwise embedding into an extension field.
Poly embed(const Poly& f, const Field& target);

struct Root {
  FieldElement value;
  unsigned multiplicity = 0;
};

/// All roots of f in F_{q^k}, q the size of f's field, ordered by code.
/// Exhaustive scan; multiplicities by repeated synthetic division.
std::vector<Root> poly_roots_in_extension(const Poly& f, unsigned k,
                                          std::uint64_t cap = kDefaultFieldCap);

/// Multiplicity of root r in f (f nonzero).
unsigned root_multiplicity(const Poly& f, Code r);

/// Degrees of the distinct irreducible factors of a nonzero f, ascending.
std::vector<unsigned> irreducible_factor_degrees(const Poly& f);

}  // namespace fcensus
