#pragma once

// Closed-form point counts and the exact identities behind them. Everything
// here is exact integer or rational arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "fcensus/finite_field.hpp"
#include "fcensus/partition.hpp"

namespace fcensus {

using Rational = boost::multiprecision::cpp_rational;

enum class ClassTag { kXDiag, kXInf, kXInfDiag, kXEigFp, kXN2Exact };

std::string_view class_tag_name(ClassTag tag);
std::optional<ClassTag> parse_class_tag(std::string_view name);

struct LeadingTerm {
  BigInt coefficient;
  int exponent = 0;
  ClassTag tag = ClassTag::kXDiag;
};

/// Number of k-dimensional subspaces of F_p^n.
BigInt gaussian_binomial(unsigned n, unsigned k, unsigned p);
/// |GL_n(F_p)|
BigInt gl_order(unsigned n, unsigned p);

BigInt c_diag(unsigned p, unsigned n);
BigInt c_inf(unsigned p, unsigned n);
BigInt c_inf_diag(unsigned p, unsigned n);
BigInt c_eig(unsigned p, unsigned n);

/// |X(F_q)| for 2 x 2 matrices: q + (p^2 + p + 1)(q - 1) q.
BigInt exact_X_n2(unsigned p, const BigInt& q);

LeadingTerm leading_term(ClassTag tag, unsigned p, unsigned n);

/// (sum over partitions of n of 1 / prod_l l^{n_l} n_l! (p^l - 1)^{n_l},
///  p^{n^2 - n} / |GL_n(F_p)|)
std::pair<Rational, Rational> partition_sum_identity(unsigned p, unsigned n);

/// Partition of s with exactly n parts -> partition of s - n with parts <= n:
/// subtract one from each part, then conjugate.
Partition partition_bijection(const Partition& lambda, unsigned n);
Partition partition_bijection_inverse(const Partition& mu, unsigned n);

/// Ordered sigma-permuted line tuples for a permutation of the given cycle
/// type: |GL_n(F_p)| / prod_C (p^{|C|} - 1).
BigInt N_pi_count(const Partition& cycle_type, unsigned p);
/// (1/n!) sum over S_n of N_pi_count, grouped by cycle type.
BigInt diag_count_via_pi(unsigned p, unsigned n);

/// Number of a x b matrices of rank b over F_q.
BigInt rank_count(unsigned a, unsigned b, const BigInt& q);

BigInt ipow(const BigInt& base, unsigned exponent);

}  // namespace fcensus
