#pragma once

// Jordan shapes: for each abstract eigenvalue i, the partition
// (e(i,1) >= e(i,2) >= ...) where e(i,k) counts the Jordan blocks of size at
// least k.

#include <span>
#include <string>
#include <vector>

#include "fcensus/matrix.hpp"
#include "fcensus/partition.hpp"

namespace fcensus {

inline constexpr unsigned kMaxShapeSize = 10;

class JordanShape {
 public:
  JordanShape() = default;
  /// Sorts the partitions into canonical (descending lexicographic) order.
  explicit JordanShape(std::vector<Partition> parts);

  const std::vector<Partition>& parts() const noexcept { return parts_; }
  std::size_t eigenvalue_count() const noexcept { return parts_.size(); }
  unsigned size() const noexcept;

  bool operator==(const JordanShape& o) const noexcept { return parts_ == o.parts_; }
  bool operator<(const JordanShape& o) const noexcept { return parts_ < o.parts_; }

  std::string to_string() const;

 private:
  std::vector<Partition> parts_;
};

std::vector<JordanShape> enumerate_shapes(unsigned n);

JordanShape shape_of_matrix(const EigenData& eigen);
JordanShape shape_of_matrix(const Matrix& m);

/// Block-diagonal Jordan matrix: eigenvalue i gets e(i,k) - e(i,k+1) blocks of
/// size k, largest blocks first, eigenvalues in the given order.
Matrix build_jordan_matrix(const JordanShape& s, std::span<const FieldElement> eigenvalues);

/// sum_{i,k} e(i,k)^2
unsigned dim_cent(const JordanShape& s);
/// sum_{i,k} e(i,k) e(i,k+1)
unsigned dim_E(const JordanShape& s);
/// r + dim_E
unsigned dim_X_eig(const JordanShape& s);

struct ShapeOptimum {
  unsigned max_dim = 0;
  std::vector<JordanShape> classes;  // sorted
};

ShapeOptimum optimal_shapes(unsigned n);

/// The centralizer {B : AB = BA} as a subspace of the flattened n^2-space.
Subspace centralizer(const Matrix& a);
unsigned cent_dim_numeric(const Matrix& a);
/// dim {B : AB = BA and B v = 0 for all v in ker A}; throws kNotNilpotent.
unsigned restricted_space_dim_numeric(const Matrix& a);

}  // namespace fcensus
