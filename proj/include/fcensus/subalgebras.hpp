#pragma once

// Commutative and diagonalizable subalgebras of M_n(F_p). Subalgebras are
// unital (contain I_n) unless stated otherwise.

#include <cstdint>
#include <vector>

#include "fcensus/finite_field.hpp"
#include "fcensus/matrix.hpp"

namespace fcensus {

inline constexpr std::uint64_t kDefaultSubalgebraCap = 10'000'000;

/// A subalgebra stored as the echelonized span of its flattened elements.
class SubalgebraBasis {
 public:
  SubalgebraBasis(std::size_t n, Subspace span);

  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return span_.dim(); }
  const Field& field() const noexcept { return span_.field(); }
  const Subspace& span() const noexcept { return span_; }
  std::vector<Matrix> basis() const;
  bool contains(const Matrix& m) const;

  bool operator==(const SubalgebraBasis& o) const noexcept { return n_ == o.n_ && span_ == o.span_; }

 private:
  std::size_t n_;
  Subspace span_;
};

Matrix unflatten(std::span<const Code> v, const Field& f, std::size_t n);

/// The span contains I, is closed under products and is commutative.
bool is_commutative_subalgebra(const std::vector<Matrix>& span);

struct CommutativeCensus {
  BigInt count;
  BigInt candidates;
  std::vector<SubalgebraBasis> algebras;
};

/// All d-dimensional commutative subalgebras of M_n(F_p). The unital search
/// walks (d-1)-dimensional subspaces of the complement {X : X(0,0) = 0} of
/// <I>; the non-unital variant walks all d-dimensional subspaces.
CommutativeCensus commutative_census(unsigned p, unsigned n, unsigned d,
                                     std::uint64_t cap = kDefaultSubalgebraCap, bool unital = true);

/// Unordered n-sets of lines in F_{p^L}^n, L = lcm(1..n), in direct sum and
/// permuted by sigma; each is one n-dimensional diagonalizable subalgebra
/// defined over F_p.
BigInt diag_subalgebra_census(unsigned p, unsigned n, std::uint64_t cap = kDefaultSubalgebraCap);

/// I together with {A : im A in V, V in ker A}, for a proper nonzero V of
/// F_p^n. Throws kDegenerateV otherwise.
SubalgebraBasis schur_algebra(const Subspace& v);

/// Calls visit(rref) for every k-dimensional subspace of F^m, given by its
/// reduced row echelon basis.
template <class Visit>
void for_each_subspace(const Field& f, std::size_t m, std::size_t k, Visit&& visit);

}  // namespace fcensus

#include "fcensus/detail/subspace_walk.hpp"
