#include "fcensus/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "fcensus/partition.hpp"

namespace fcensus {

Quiver::Quiver(std::size_t vertices, std::vector<unsigned> mult) : r_(vertices), m_(std::move(mult)) {
  if (m_.size() != r_ * r_) throw Error(Errc::kSizeMismatch, "multiplicity matrix is not r x r");
}

Quiver::Quiver(const std::vector<std::vector<unsigned>>& rows) : r_(rows.size()) {
  for (const auto& row : rows) {
    if (row.size() != r_) throw Error(Errc::kSizeMismatch, "multiplicity matrix is not square");
    m_.insert(m_.end(), row.begin(), row.end());
  }
}

std::vector<std::vector<unsigned>> Quiver::rows() const {
  std::vector<std::vector<unsigned>> out(r_);
  for (std::size_t i = 0; i < r_; ++i) out[i].assign(m_.begin() + i * r_, m_.begin() + (i + 1) * r_);
  return out;
}

bool Quiver::has_isolated_vertex() const noexcept {
  for (std::size_t i = 0; i < r_; ++i) {
    if (degree(*this, i) + in_degree(*this, i) == 0) return true;
  }
  return false;
}

std::string Quiver::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < r_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < r_; ++j) os << (j ? "," : "") << mult(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

unsigned degree(const Quiver& q, std::size_t i) {
  unsigned d = 0;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) d += q.mult(i, j);
  return d;
}

unsigned in_degree(const Quiver& q, std::size_t i) {
  unsigned d = 0;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) d += q.mult(j, i);
  return d;
}

unsigned edge_count(const Quiver& q) {
  return std::accumulate(q.flattened().begin(), q.flattened().end(), 0u);
}

bool is_balanced(const Quiver& q) {
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    if (degree(q, i) != in_degree(q, i)) return false;
  }
  return true;
}

Quiver permuted(const Quiver& q, const std::vector<std::size_t>& perm) {
  const std::size_t r = q.vertex_count();
  std::vector<unsigned> m(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i * r + j] = q.mult(perm[i], perm[j]);
  }
  return Quiver(r, std::move(m));
}

Quiver canonicalize(const Quiver& q) {
  const std::size_t r = q.vertex_count();
  if (r > kMaxCanonicalVertices) {
    throw Error(Errc::kTooManyVertices, std::to_string(r) + " vertices");
  }
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<unsigned> best = q.flattened();
  do {
    // Compare the permuted flattening against the best one, stopping at the
    // first differing entry.
    bool smaller = false;
    for (std::size_t idx = 0; idx < r * r; ++idx) {
      const unsigned v = q.mult(perm[idx / r], perm[idx % r]);
      if (v != best[idx]) {
        smaller = v < best[idx];
        break;
      }
    }
    if (smaller) {
      for (std::size_t idx = 0; idx < r * r; ++idx) best[idx] = q.mult(perm[idx / r], perm[idx % r]);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Quiver(r, std::move(best));
}

Quiver disjoint_union(const Quiver& a, const Quiver& b) {
  const std::size_t r = a.vertex_count() + b.vertex_count();
  std::vector<unsigned> m(r * r, 0);
  for (std::size_t i = 0; i < a.vertex_count(); ++i) {
    for (std::size_t j = 0; j < a.vertex_count(); ++j) m[i * r + j] = a.mult(i, j);
  }
  const std::size_t off = a.vertex_count();
  for (std::size_t i = 0; i < b.vertex_count(); ++i) {
    for (std::size_t j = 0; j < b.vertex_count(); ++j) m[(off + i) * r + off + j] = b.mult(i, j);
  }
  return Quiver(r, std::move(m));
}

namespace {

// Fills the r x r matrix cell by cell so that row i sums to deg[i] and column
// j sums to deg[j].
void fill_tables(std::size_t cell, std::size_t r, std::vector<unsigned>& row_left,
                 std::vector<unsigned>& col_left, std::vector<unsigned>& m, std::set<Quiver>& out) {
  if (cell == r * r) {
    out.insert(canonicalize(Quiver(r, m)));
    return;
  }
  const std::size_t i = cell / r;
  const std::size_t j = cell % r;
  const unsigned hi = std::min(row_left[i], col_left[j]);
  unsigned lo = 0;
  // The last cell of a row or column must absorb what remains.
  if (j == r - 1) lo = row_left[i];
  if (i == r - 1) lo = std::max(lo, col_left[j]);
  if (lo > hi) return;
  for (unsigned v = lo; v <= hi; ++v) {
    m[cell] = v;
    row_left[i] -= v;
    col_left[j] -= v;
    fill_tables(cell + 1, r, row_left, col_left, m, out);
    row_left[i] += v;
    col_left[j] += v;
  }
  m[cell] = 0;
}

}  // namespace

std::vector<Quiver> enumerate_bal(unsigned n) {
  if (n > kMaxBalEdges) throw Error(Errc::kOutOfRange, "enumerate_bal is capped at n = 7");
  std::set<Quiver> out;
  // In a balanced quiver without isolated vertices every out-degree is >= 1,
  // and up to relabeling the degree sequence is a partition of n.
  for (const Partition& deg : partitions_of(n)) {
    const std::size_t r = deg.size();
    std::vector<unsigned> row_left(deg.begin(), deg.end());
    std::vector<unsigned> col_left(deg.begin(), deg.end());
    std::vector<unsigned> m(r * r, 0);
    fill_tables(0, r, row_left, col_left, m, out);
  }
  return {out.begin(), out.end()};
}

int dim_X_diag(const Quiver& q) {
  if (!is_balanced(q)) throw Error(Errc::kNotBalanced, q.to_string());
  int dim = static_cast<int>(q.vertex_count());
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    const int d = static_cast<int>(degree(q, i));
    dim += d * d;
  }
  for (unsigned m : q.flattened()) dim -= static_cast<int>(m * m);
  return dim;
}

Quiver octopus(unsigned n) {
  if (n < 1) throw Error(Errc::kOutOfRange, "octopus needs n >= 1");
  const unsigned k = (n + 1) / 3;  // nearest integer to n/3
  const std::size_t r = k + 1;
  std::vector<unsigned> m(r * r, 0);
  m[0] = n - 2 * k;
  for (std::size_t leg = 1; leg < r; ++leg) {
    m[leg] = 1;
    m[leg * r] = 1;
  }
  return Quiver(r, std::move(m));
}

Quiver dumbbell() { return Quiver({{1, 1}, {1, 1}}); }

QuiverMaximizers maximizers(unsigned n) {
  QuiverMaximizers out;
  out.max_dim = -1;
  for (const Quiver& q : enumerate_bal(n)) {
    const int d = dim_X_diag(q);
    if (d > out.max_dim) {
      out.max_dim = d;
      out.classes.clear();
    }
    if (d == out.max_dim) out.classes.push_back(q);
  }
  return out;
}

Quiver quiver_of_matrix(const Matrix& m, const EigenData& eigen) {
  std::size_t total = 0;
  for (const auto& ev : eigen.eigen) total += ev.eigenspace.dim();
  if (total != m.n()) throw Error(Errc::kNotSemisimple, "eigenspaces do not span");
  const std::size_t r = eigen.eigen.size();
  std::vector<Subspace> images;
  images.reserve(r);
  for (const auto& ev : eigen.eigen) images.push_back(ev.eigenspace.frobenius(1));
  std::vector<unsigned> mult(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      mult[i * r + j] = static_cast<unsigned>(intersect_dim(eigen.eigen[i].eigenspace, images[j]));
    }
  }
  return Quiver(r, std::move(mult));
}

}  // namespace fcensus
