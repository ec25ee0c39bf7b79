#include "fcensus/formulas.hpp"

#include <map>

namespace fcensus {

std::string_view class_tag_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::kXDiag: return "X_diag";
    case ClassTag::kXInf: return "X_inf";
    case ClassTag::kXInfDiag: return "X_inf_diag";
    case ClassTag::kXEigFp: return "X_eig_fp";
    case ClassTag::kXN2Exact: return "X_n2_exact";
  }
  return "?";
}

std::optional<ClassTag> parse_class_tag(std::string_view name) {
  for (auto tag : {ClassTag::kXDiag, ClassTag::kXInf, ClassTag::kXInfDiag, ClassTag::kXEigFp,
                   ClassTag::kXN2Exact}) {
    if (class_tag_name(tag) == name) return tag;
  }
  return std::nullopt;
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  BigInt out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

namespace {

void require_prime(unsigned p) {
  if (!is_prime(p)) throw Error(Errc::kOutOfRange, "p = " + std::to_string(p) + " is not prime");
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

BigInt gaussian_binomial(unsigned n, unsigned k, unsigned p) {
  if (k > n) throw Error(Errc::kOutOfRange, "k > n in gaussian_binomial");
  BigInt num = 1;
  BigInt den = 1;
  const BigInt bp = p;
  for (unsigned i = 0; i < k; ++i) {
    num *= ipow(bp, n - i) - 1;
    den *= ipow(bp, i + 1) - 1;
  }
  if (num % den != 0) throw Error(Errc::kNonIntegerResult, "gaussian_binomial");
  return num / den;
}

BigInt gl_order(unsigned n, unsigned p) {
  if (n < 1) throw Error(Errc::kOutOfRange, "gl_order needs n >= 1");
  const BigInt pn = ipow(BigInt(p), n);
  BigInt out = 1;
  for (unsigned i = 0; i < n; ++i) out *= pn - ipow(BigInt(p), i);
  return out;
}

BigInt c_diag(unsigned p, unsigned n) {
  require_prime(p);
  if (n < 2) throw Error(Errc::kOutOfRange, "c_diag needs n >= 2");
  if (n == 2) return BigInt(p) * p;
  if (n == 4) return 2;
  return 1;
}

BigInt c_inf(unsigned p, unsigned n) {
  require_prime(p);
  if (n < 2) throw Error(Errc::kOutOfRange, "c_inf needs n >= 2");
  const BigInt bp = p;
  if (n == 2) return bp * bp + bp + 1;
  if (n == 3) {
    return ipow(bp, 6) + ipow(bp, 5) + 3 * ipow(bp, 4) + 3 * ipow(bp, 3) + 3 * bp * bp + bp + 1;
  }
  if (n % 2 == 0) return gaussian_binomial(n, n / 2, p);
  return 2 * gaussian_binomial(n, n / 2, p);
}

BigInt c_inf_diag(unsigned p, unsigned n) {
  require_prime(p);
  if (n < 1) throw Error(Errc::kOutOfRange, "c_inf_diag needs n >= 1");
  return ipow(BigInt(p), n * n - n);
}

BigInt c_eig(unsigned p, unsigned n) {
  require_prime(p);
  if (n < 2) throw Error(Errc::kOutOfRange, "c_eig needs n >= 2");
  const BigInt bp = p;
  if (n == 2) return (bp + 2) * (bp + 1) / 2;
  if (n == 3) {
    const BigInt num = (bp * bp + bp + 1) * (ipow(bp, 4) + 7 * ipow(bp, 3) + 6 * bp * bp + 6 * bp + 12);
    if (num % 6 != 0) throw Error(Errc::kNonIntegerResult, "c_eig(p, 3)");
    return num / 6;
  }
  const BigInt half = gaussian_binomial(n, n / 2, p);
  if (n % 2 == 0) return half;
  return half + half * gaussian_binomial((n + 1) / 2, 1, p);
}

BigInt exact_X_n2(unsigned p, const BigInt& q) {
  require_prime(p);
  BigInt rest = q;
  unsigned k = 0;
  while (rest > 1 && rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1 || k == 0) throw Error(Errc::kNotAPowerOfP, "q is not a power of p");
  const BigInt bp = p;
  return q + (bp * bp + bp + 1) * (q - 1) * q;
}

LeadingTerm leading_term(ClassTag tag, unsigned p, unsigned n) {
  LeadingTerm out;
  out.tag = tag;
  switch (tag) {
    case ClassTag::kXDiag:
      out.coefficient = c_diag(p, n);
      out.exponent = static_cast<int>(n * n / 3 + 1);
      break;
    case ClassTag::kXInf:
      out.coefficient = c_inf(p, n);
      out.exponent = static_cast<int>(n * n / 4 + 1);
      break;
    case ClassTag::kXInfDiag:
      out.coefficient = c_inf_diag(p, n);
      out.exponent = static_cast<int>(n);
      break;
    case ClassTag::kXEigFp:
      out.coefficient = c_eig(p, n);
      out.exponent = static_cast<int>(n * n / 4 + 1);
      break;
    case ClassTag::kXN2Exact:
      require_prime(p);
      if (n != 2) throw Error(Errc::kOutOfRange, "X_n2_exact is the n = 2 law");
      out.coefficient = BigInt(p) * p + p + 1;
      out.exponent = 2;
      break;
  }
  return out;
}

std::pair<Rational, Rational> partition_sum_identity(unsigned p, unsigned n) {
  require_prime(p);
  if (n < 1) throw Error(Errc::kOutOfRange, "n >= 1");
  Rational lhs = 0;
  for (const Partition& part : partitions_of(n)) {
    std::map<unsigned, unsigned> counts;
    for (unsigned l : part) ++counts[l];
    BigInt den = 1;
    for (const auto& [l, nl] : counts) {
      den *= ipow(BigInt(l), nl) * factorial(nl) * ipow(ipow(BigInt(p), l) - 1, nl);
    }
    lhs += Rational(1, den);
  }
  const Rational rhs(ipow(BigInt(p), n * n - n), gl_order(n, p));
  return {lhs, rhs};
}

Partition partition_bijection(const Partition& lambda, unsigned n) {
  if (!is_partition(lambda)) throw Error(Errc::kNotAPartition, "input is not a partition");
  if (lambda.size() != n) throw Error(Errc::kWrongPartCount, "expected exactly n parts");
  Partition reduced;
  for (unsigned part : lambda) {
    if (part > 1) reduced.push_back(part - 1);
  }
  return conjugate(reduced);
}

Partition partition_bijection_inverse(const Partition& mu, unsigned n) {
  if (!is_partition(mu)) throw Error(Errc::kNotAPartition, "input is not a partition");
  if (!mu.empty() && mu.front() > n) throw Error(Errc::kOutOfRange, "parts must be <= n");
  Partition reduced = conjugate(mu);
  reduced.resize(n, 0);
  for (unsigned& part : reduced) ++part;
  return reduced;
}

BigInt N_pi_count(const Partition& cycle_type, unsigned p) {
  require_prime(p);
  if (!is_partition(cycle_type) || cycle_type.empty()) {
    throw Error(Errc::kNotAPartition, "cycle type must be a non-empty partition");
  }
  const unsigned n = weight(cycle_type);
  BigInt den = 1;
  for (unsigned l : cycle_type) den *= ipow(BigInt(p), l) - 1;
  const BigInt num = gl_order(n, p);
  if (num % den != 0) throw Error(Errc::kNonIntegerResult, "N_pi_count");
  return num / den;
}

BigInt diag_count_via_pi(unsigned p, unsigned n) {
  Rational total = 0;
  for (const Partition& type : partitions_of(n)) {
    std::map<unsigned, unsigned> counts;
    for (unsigned l : type) ++counts[l];
    BigInt centralizer = 1;
    for (const auto& [l, nl] : counts) centralizer *= ipow(BigInt(l), nl) * factorial(nl);
    // n! / centralizer permutations of this type, then divide by n!.
    total += Rational(N_pi_count(type, p), centralizer);
  }
  if (denominator(total) != 1) throw Error(Errc::kNonIntegerResult, "diag_count_via_pi");
  return numerator(total);
}

BigInt rank_count(unsigned a, unsigned b, const BigInt& q) {
  if (b > a) throw Error(Errc::kOutOfRange, "rank_count needs a >= b");
  const BigInt qa = ipow(q, a);
  BigInt out = 1;
  for (unsigned i = 0; i < b; ++i) out *= qa - ipow(q, i);
  return out;
}

}  // namespace fcensus
