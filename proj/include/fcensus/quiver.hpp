#pragma once

// Quivers (directed multigraphs) recorded by their edge multiplicity matrix.
//
// The quiver of a semisimple matrix M has one vertex per eigenvalue and
// dim(E_lambda ∩ sigma(E_mu)) edges from lambda to mu. It is balanced with n
// edges exactly when M commutes with its Frobenius image, and the dimension
// of the corresponding stratum is |V| + sum_i d(i)^2 - sum_{i,j} m(i,j)^2.

#include <cstddef>
#include <string>
#include <vector>

#include "fcensus/matrix.hpp"

namespace fcensus {

inline constexpr std::size_t kMaxCanonicalVertices = 8;
inline constexpr unsigned kMaxBalEdges = 7;

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::size_t vertices, std::vector<unsigned> mult);
  explicit Quiver(const std::vector<std::vector<unsigned>>& rows);

  std::size_t vertex_count() const noexcept { return r_; }
  unsigned mult(std::size_t i, std::size_t j) const noexcept { return m_[i * r_ + j]; }
  const std::vector<unsigned>& flattened() const noexcept { return m_; }
  std::vector<std::vector<unsigned>> rows() const;

  bool has_isolated_vertex() const noexcept;

  bool operator==(const Quiver& o) const noexcept { return r_ == o.r_ && m_ == o.m_; }
  bool operator<(const Quiver& o) const noexcept {
    return r_ != o.r_ ? r_ < o.r_ : m_ < o.m_;
  }

  std::string to_string() const;

 private:
  std::size_t r_ = 0;
  std::vector<unsigned> m_;
};

/// Out-degree sum_j m(i, j).
unsigned degree(const Quiver& q, std::size_t i);
unsigned in_degree(const Quiver& q, std::size_t i);
unsigned edge_count(const Quiver& q);
bool is_balanced(const Quiver& q);

/// Lexicographically smallest flattened multiplicity matrix over all vertex
/// permutations. Throws kTooManyVertices above kMaxCanonicalVertices.
Quiver canonicalize(const Quiver& q);
Quiver permuted(const Quiver& q, const std::vector<std::size_t>& perm);
Quiver disjoint_union(const Quiver& a, const Quiver& b);

/// Canonical representatives of balanced quivers with n edges and no
/// isolated vertex, sorted.
std::vector<Quiver> enumerate_bal(unsigned n);

/// Throws kNotBalanced.
int dim_X_diag(const Quiver& q);

/// Center with n - 2k loops and k two-cycles to leaves, k the integer
/// nearest n/3.
Quiver octopus(unsigned n);
/// Two vertices, one loop each, joined by a two-cycle.
Quiver dumbbell();

struct QuiverMaximizers {
  int max_dim = 0;
  std::vector<Quiver> classes;  // canonical, sorted
};

QuiverMaximizers maximizers(unsigned n);

/// Throws kNotSemisimple when the eigenspaces do not span.
Quiver quiver_of_matrix(const Matrix& m, const EigenData& eigen);

}  // namespace fcensus
