#include "fcensus/jordan_shape.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace fcensus {

JordanShape::JordanShape(std::vector<Partition> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_) {
    if (p.empty() || !is_partition(p)) throw Error(Errc::kNotAPartition, "invalid shape component");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

unsigned JordanShape::size() const noexcept {
  unsigned s = 0;
  for (const auto& p : parts_) s += weight(p);
  return s;
}

std::string JordanShape::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ", ";
    os << '(';
    for (std::size_t k = 0; k < parts_[i].size(); ++k) os << (k ? "," : "") << parts_[i][k];
    os << ')';
  }
  os << ')';
  return os.str();
}

std::vector<JordanShape> enumerate_shapes(unsigned n) {
  if (n > kMaxShapeSize) throw Error(Errc::kOutOfRange, "enumerate_shapes is capped at n = 10");
  std::set<JordanShape> out;
  // Split n into eigenvalue multiplicities, then pick a partition of each.
  for (const Partition& mults : partitions_of(n)) {
    std::vector<std::vector<Partition>> choices;
    for (unsigned m : mults) choices.push_back(partitions_of(m));
    std::vector<Partition> cur(mults.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == mults.size()) {
        out.insert(JordanShape(cur));
        return;
      }
      for (const auto& p : choices[i]) {
        cur[i] = p;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return {out.begin(), out.end()};
}

JordanShape shape_of_matrix(const EigenData& eigen) {
  std::vector<Partition> parts;
  for (const auto& ev : eigen.eigen) parts.emplace_back(ev.filtration.begin(), ev.filtration.end());
  return JordanShape(std::move(parts));
}

JordanShape shape_of_matrix(const Matrix& m) { return shape_of_matrix(eigen_data(m)); }

Matrix build_jordan_matrix(const JordanShape& s, std::span<const FieldElement> eigenvalues) {
  if (eigenvalues.size() != s.eigenvalue_count()) {
    throw Error(Errc::kSizeMismatch, "need one eigenvalue per shape component");
  }
  if (eigenvalues.empty()) throw Error(Errc::kSizeMismatch, "empty shape");
  const Field& field = eigenvalues.front().field();
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    if (!eigenvalues[i].field()->same_as(*field)) throw Error(Errc::kMixedFields, "eigenvalues");
    for (std::size_t j = 0; j < i; ++j) {
      if (eigenvalues[i] == eigenvalues[j]) throw Error(Errc::kDuplicateEigenvalues, eigenvalues[i].to_string());
    }
  }
  const std::size_t n = s.size();
  Matrix m(field, n);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < s.eigenvalue_count(); ++i) {
    const Partition& e = s.parts()[i];
    // Block sizes are the parts of the conjugate partition, largest first.
    for (unsigned block : conjugate(e)) {
      for (std::size_t t = 0; t < block; ++t) {
        m(pos + t, pos + t) = eigenvalues[i].code();
        if (t + 1 < block) m(pos + t, pos + t + 1) = 1;
      }
      pos += block;
    }
  }
  return m;
}

unsigned dim_cent(const JordanShape& s) {
  unsigned d = 0;
  for (const auto& p : s.parts()) {
    for (unsigned e : p) d += e * e;
  }
  return d;
}

unsigned dim_E(const JordanShape& s) {
  unsigned d = 0;
  for (const auto& p : s.parts()) {
    for (std::size_t k = 0; k + 1 < p.size(); ++k) d += p[k] * p[k + 1];
  }
  return d;
}

unsigned dim_X_eig(const JordanShape& s) {
  return static_cast<unsigned>(s.eigenvalue_count()) + dim_E(s);
}

ShapeOptimum optimal_shapes(unsigned n) {
  ShapeOptimum out;
  for (const auto& s : enumerate_shapes(n)) {
    const unsigned d = dim_X_eig(s);
    if (d > out.max_dim) {
      out.max_dim = d;
      out.classes.clear();
    }
    if (d == out.max_dim) out.classes.push_back(s);
  }
  return out;
}

namespace {

// Rows of the linear map B -> AB - BA on the flattened unknowns B(k,l) -> k n + l.
Matrix commutator_system(const Matrix& a) {
  const std::size_t n = a.n();
  const auto& f = *a.field();
  Matrix sys(a.field(), n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        sys(row, k * n + j) = f.add(sys(row, k * n + j), a(i, k));
        sys(row, i * n + k) = f.sub(sys(row, i * n + k), a(k, j));
      }
    }
  }
  return sys;
}

}  // namespace

// Both systems have entries in the field of A; when A has prime-field
// entries the kernel dimension does not depend on the field used.
Subspace centralizer(const Matrix& a) {
  if (!a.is_square()) throw Error(Errc::kSizeMismatch, "centralizer needs a square matrix");
  return kernel_basis(commutator_system(a));
}

unsigned cent_dim_numeric(const Matrix& a) { return static_cast<unsigned>(centralizer(a).dim()); }

unsigned restricted_space_dim_numeric(const Matrix& a) {
  if (!a.is_square()) throw Error(Errc::kSizeMismatch, "needs a square matrix");
  const std::size_t n = a.n();
  Matrix power = a;
  for (std::size_t k = 1; k < n; ++k) power = power * a;
  if (!power.is_zero()) throw Error(Errc::kNotNilpotent, a.to_string());
  const Subspace ker = kernel_basis(a);
  const Matrix comm = commutator_system(a);
  Matrix sys(a.field(), n * n + ker.dim() * n, n * n);
  for (std::size_t r = 0; r < n * n; ++r) {
    for (std::size_t c = 0; c < n * n; ++c) sys(r, c) = comm(r, c);
  }
  // (B v)_i = sum_j B(i, j) v_j = 0.
  for (std::size_t v = 0; v < ker.dim(); ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t row = n * n + v * n + i;
      for (std::size_t j = 0; j < n; ++j) sys(row, i * n + j) = ker.basis()(v, j);
    }
  }
  return static_cast<unsigned>(kernel_basis(sys).dim());
}

}  // namespace fcensus
