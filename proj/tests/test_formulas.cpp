#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "fcensus/formulas.hpp"

using namespace fcensus;

namespace {

// Number of k-dimensional subspaces of F_2^n, by collecting spans as bitsets
// of their members.
std::size_t brute_subspaces_f2(unsigned n, unsigned k) {
  const unsigned size = 1u << n;
  std::set<std::vector<bool>> spans;
  std::vector<unsigned> pick(k, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned depth, unsigned from) {
    if (depth == k) {
      std::vector<bool> member(size, false);
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        unsigned v = 0;
        for (unsigned i = 0; i < k; ++i)
          if (mask >> i & 1) v ^= pick[i];
        member[v] = true;
      }
      if (std::count(member.begin(), member.end(), true) == static_cast<long>(1u << k)) spans.insert(member);
      return;
    }
    for (unsigned v = from; v < size; ++v) {
      pick[depth] = v;
      rec(depth + 1, v + 1);
    }
  };
  rec(0, 1);
  return spans.size();
}

// Invertible n x n matrices over F_p by Gaussian elimination on every matrix.
std::size_t brute_gl(unsigned n, unsigned p) {
  std::size_t total = 1;
  for (unsigned i = 0; i < n * n; ++i) total *= p;
  std::size_t count = 0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n));
    std::size_t rest = idx;
    for (auto& row : m)
      for (auto& c : row) {
        c = rest % p;
        rest /= p;
      }
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
      unsigned piv = rank;
      while (piv < n && m[piv][col] == 0) ++piv;
      if (piv == n) continue;
      std::swap(m[piv], m[rank]);
      unsigned inv = 1;
      while (inv * m[rank][col] % p != 1) ++inv;
      for (unsigned r = 0; r < n; ++r) {
        if (r == rank || m[r][col] == 0) continue;
        const unsigned f = m[r][col] * inv % p;
        for (unsigned c = 0; c < n; ++c) m[r][c] = (m[r][c] + p * p - f * m[rank][c] % p) % p;
      }
      ++rank;
    }
    if (rank == n) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(5, 0, 3) == 1);
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k, 2) == brute_subspaces_f2(n, k));
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (unsigned n = 0; n <= 10; ++n)
      for (unsigned k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k, p) == gaussian_binomial(n, n - k, p));
}

TEST_CASE("general linear group orders") {
  CHECK(gl_order(1, 2) == 1);
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(3, 2) == 168);
  CHECK(gl_order(2, 3) == brute_gl(2, 3));
  CHECK(gl_order(3, 2) == brute_gl(3, 2));
  CHECK(gl_order(2, 5) == brute_gl(2, 5));
}

TEST_CASE("leading coefficients") {
  CHECK(c_inf(2, 3) == 183);
  CHECK(c_inf_diag(2, 2) == 4);
  CHECK(c_eig(2, 2) == 6);
  for (unsigned p : {2u, 3u, 5u}) {
    CHECK(c_diag(p, 2) == p * p);
    // Hand count of split plus conjugate pairs of lines.
    CHECK(c_inf_diag(p, 2) == (p * p - p) / 2 + (p * p + p) / 2);
    CHECK(c_eig(p, 2) == (p + 2) * (p + 1) / 2);
    for (unsigned n = 1; n <= 6; ++n) CHECK(c_inf_diag(p, n) == ipow(BigInt(p), n * n - n));
    for (unsigned n = 4; n <= 9; ++n) {
      if (n % 2 == 0) {
        CHECK(c_inf(p, n) == gaussian_binomial(n, n / 2, p));
      } else {
        CHECK(c_inf(p, n) == 2 * gaussian_binomial(n, n / 2, p));
      }
    }
  }
}

TEST_CASE("exact count for 2 x 2") {
  CHECK(exact_X_n2(2, 2) == 16);
  CHECK(exact_X_n2(2, 4) == 88);
  CHECK(exact_X_n2(3, 3) == 81);
  CHECK_THROWS_AS(exact_X_n2(2, 6), Error);
  CHECK_THROWS_AS(exact_X_n2(3, 1), Error);
}

TEST_CASE("leading terms and class tags") {
  const LeadingTerm d = leading_term(ClassTag::kXDiag, 2, 2);
  CHECK(d.coefficient == 4);
  CHECK(d.exponent == 2);
  const LeadingTerm e = leading_term(ClassTag::kXEigFp, 2, 2);
  CHECK(e.coefficient == 6);
  CHECK(e.exponent == 2);
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned n = 1; n <= 5; ++n) {
      const LeadingTerm lt = leading_term(ClassTag::kXInfDiag, p, n);
      CHECK(lt.coefficient == ipow(BigInt(p), n * n - n));
      CHECK(lt.exponent == static_cast<int>(n));
    }
  }
  const LeadingTerm inf = leading_term(ClassTag::kXInf, 2, 3);
  CHECK(inf.coefficient == 183);
  CHECK(inf.exponent == 3);
  for (auto tag : {ClassTag::kXDiag, ClassTag::kXInf, ClassTag::kXInfDiag, ClassTag::kXEigFp, ClassTag::kXN2Exact})
    CHECK(parse_class_tag(class_tag_name(tag)) == tag);
  CHECK_FALSE(parse_class_tag("X_bogus").has_value());
}

TEST_CASE("partition identity and bijection") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned n = 1; n <= 12; ++n) {
      const auto [lhs, rhs] = partition_sum_identity(p, n);
      CHECK(lhs == rhs);
    }
  }
  CHECK(partition_bijection({3, 1}, 2) == Partition{1, 1});
  CHECK(partition_bijection(Partition(5, 1), 5).empty());
  CHECK(partition_bijection_inverse({1, 1}, 2) == Partition{3, 1});
  CHECK_THROWS_AS(partition_bijection({3, 1}, 3), Error);
  for (unsigned s = 1; s <= 40; ++s)
    for (unsigned n = 1; n <= std::min(s, 10u); ++n)
      CHECK(partitions_with_parts(s, n).size() == partitions_bounded(s - n, n).size());
}

TEST_CASE("counting through cycle types") {
  CHECK(N_pi_count({2}, 2) == 2);
  CHECK(N_pi_count({1, 1}, 2) == 6);
  CHECK(diag_count_via_pi(2, 2) == 4);
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned n = 1; n <= 6; ++n) CHECK(diag_count_via_pi(p, n) == ipow(BigInt(p), n * n - n));
}

TEST_CASE("full-rank rectangular matrices") {
  CHECK(rank_count(1, 1, 7) == 6);
  CHECK(rank_count(2, 1, 3) == 8);
  CHECK(rank_count(2, 2, 2) == 6);
  CHECK(rank_count(3, 3, 2) == gl_order(3, 2));
}
