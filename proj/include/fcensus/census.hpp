#pragma once

// Exhaustive census of M_n(F_q).
//
// Every matrix is addressed by a linear index in [0, q^{n^2}): entry t of the
// row-major flattening is digit t of the index in base q. Workers take
// contiguous index chunks and keep private tallies that are merged by
// addition, so results do not depend on the worker count.
//
// Class membership:
//   X          M commutes with sigma(M)
//   X_inf      M commutes with sigma^i(M) for 1 <= i < e. This suffices for
//              the whole orbit: sigma^e(M) = M, and sigma^a(M), sigma^b(M)
//              commute iff M and sigma^{b-a}(M) do (apply sigma^{-a}).
//   X_diag     X and semisimple
//   X_eig_fp   X and every eigenspace is fixed by sigma

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fcensus/finite_field.hpp"
#include "fcensus/jordan_shape.hpp"
#include "fcensus/matrix.hpp"
#include "fcensus/quiver.hpp"

namespace fcensus {

inline constexpr std::uint64_t kDefaultWorkCap = 200'000'000;
inline constexpr std::uint64_t kDefaultStrataCap = 1'000'000;
inline constexpr std::uint64_t kHardWorkCap = 2'000'000'000;

struct CensusOptions {
  bool strata = false;
  unsigned workers = 1;
  std::uint64_t chunk_size = std::uint64_t{1} << 16;
  std::uint64_t work_cap = kDefaultWorkCap;
  std::uint64_t strata_cap = kDefaultStrataCap;
  /// Classify sigma^twist(M) in place of M (a test hook for Frobenius
  /// closure of the classes).
  std::uint64_t twist = 0;
};

struct ClassCounts {
  BigInt X;
  BigInt X_diag;
  BigInt X_inf;
  BigInt X_inf_diag;
  BigInt X_eig_fp;
  BigInt total;

  bool operator==(const ClassCounts&) const = default;
};

struct ShapeCounts {
  BigInt count_X;
  BigInt count_eig;

  bool operator==(const ShapeCounts&) const = default;
};

struct CensusReport {
  unsigned p = 0;
  unsigned e = 0;
  unsigned n = 0;
  BigInt q;
  ClassCounts counts;
  bool has_strata = false;
  std::map<Quiver, BigInt> strata_by_quiver;
  std::map<JordanShape, ShapeCounts> strata_by_shape;
  /// Members whose quiver or kernel filtration broke an expected invariant
  /// (balanced quiver with n edges and degrees equal to eigenspace
  /// dimensions; Frobenius-fixed generalized eigenspaces for X_eig_fp).
  /// Only checked with strata.
  std::uint64_t invariant_violations = 0;
  double elapsed_ms = 0;
};

/// Throws kWorkCapExceeded when q^{n^2} exceeds the applicable cap.
CensusReport census(unsigned p, unsigned e, unsigned n, const CensusOptions& options = {});
std::map<Quiver, BigInt> census_by_quiver(unsigned p, unsigned e, unsigned n, CensusOptions options = {});
std::map<JordanShape, ShapeCounts> census_by_shape(unsigned p, unsigned e, unsigned n,
                                                   CensusOptions options = {});

/// Matrix with the given linear census index.
Matrix matrix_from_index(const Field& f, std::size_t n, std::uint64_t index);

/// Nilpotent M in M_m(F_q), m = sum(e_list), commuting with sigma(M) and with
/// ker M^k spanned by the first e(1) + ... + e(k) standard basis vectors.
/// Only matrices mapping each such span into the previous one are visited,
/// which every solution does.
BigInt w_q_bruteforce(const std::vector<unsigned>& e_list, unsigned p, unsigned e,
                      std::uint64_t cap = kDefaultStrataCap);

/// Number of N in GL_a(F_q) with N w = sigma(N) v.
BigInt count_vw(unsigned a, unsigned p, unsigned e, std::span<const Code> v, std::span<const Code> w,
                std::uint64_t cap = kDefaultWorkCap);

struct ExponentFit {
  int exponent = 0;
  double exponent_raw = 0;
  /// count / q^exponent at the largest q
  double coefficient = 0;
  /// count / q^exponent_raw at the largest q
  double coefficient_raw = 0;
};

/// Log-ratio exponent estimate from the last two (q, count) points.
ExponentFit fit_exponent(const std::vector<std::pair<BigInt, BigInt>>& series);

/// For 2 x 2 M = [[a, b], [c, d]]: M is scalar or [b : c : d - a] is fixed by
/// sigma. Throws kWrongSize otherwise.
bool x2_projective_predicate(const Matrix& m);

}  // namespace fcensus
