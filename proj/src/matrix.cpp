#include "fcensus/matrix.hpp"

#include <bit>
#include <numeric>
#include <sstream>

namespace fcensus {

namespace {

void check_same_field(const Matrix& a, const Matrix& b) {
  if (!a.field()->same_as(*b.field())) throw Error(Errc::kMixedFields, "matrices over different fields");
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Code> codes)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(codes)) {
  if (a_.size() != rows_ * cols_) throw Error(Errc::kSizeMismatch, "entry count does not match shape");
  for (Code c : a_) {
    if (c >= field_->q()) throw Error(Errc::kOutOfRange, "entry outside the field");
  }
}

Matrix Matrix::identity(const Field& f, std::size_t n) { return scalar(f, n, 1); }

Matrix Matrix::scalar(const Field& f, std::size_t n, Code lambda) {
  Matrix m(f, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = lambda;
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::initializer_list<std::initializer_list<Code>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Code> codes;
  codes.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(Errc::kSizeMismatch, "ragged rows");
    codes.insert(codes.end(), row.begin(), row.end());
  }
  return Matrix(f, r, c, std::move(codes));
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same_field(*this, o);
  if (cols_ != o.rows_) throw Error(Errc::kSizeMismatch, "inner dimensions differ");
  Matrix out(field_, rows_, o.cols_);
  const auto& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Code a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(a, o(k, j)));
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::kSizeMismatch, "shapes differ");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->add(a_[i], o.a_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::kSizeMismatch, "shapes differ");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->sub(a_[i], o.a_[i]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

bool Matrix::is_zero() const noexcept {
  for (Code c : a_) {
    if (c != 0) return false;
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

bool commutes(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (!a.is_square() || !b.is_square() || a.n() != b.n()) {
    throw Error(Errc::kSizeMismatch, "commutes needs square matrices of equal size");
  }
  const auto& f = *a.field();
  const std::size_t n = a.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Code ab = 0;
      Code ba = 0;
      for (std::size_t k = 0; k < n; ++k) {
        ab = f.add(ab, f.mul(a(i, k), b(k, j)));
        ba = f.add(ba, f.mul(b(i, k), a(k, j)));
      }
      if (ab != ba) return false;
    }
  }
  return true;
}

Matrix mat_frobenius(const Matrix& m, std::uint64_t r) {
  std::vector<Code> codes(m.codes());
  for (Code& c : codes) c = m.field()->frobenius(c, r);
  return Matrix(m.field(), m.rows(), m.cols(), std::move(codes));
}

Matrix embed(const Matrix& m, const Field& target) {
  const auto& table = embedding_table(m.field(), target);
  std::vector<Code> codes(m.codes());
  for (Code& c : codes) c = table[c];
  return Matrix(target, m.rows(), m.cols(), std::move(codes));
}

Matrix poly_eval(const Poly& f, const Matrix& m) {
  const std::size_t n = m.n();
  Matrix acc(m.field(), n);
  const auto& coeffs = f.coeffs();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * m + Matrix::scalar(m.field(), n, coeffs[i]);
  }
  return acc;
}

std::size_t rref_in_place(Matrix& m, std::vector<std::size_t>* pivots) {
  const auto& f = *m.field();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    }
    const Code inv = f.inv(m(rank, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(rank, j) = f.mul(m(rank, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank) continue;
      const Code factor = m(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(rank, j)));
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

std::size_t rank(Matrix m) { return rref_in_place(m); }

Subspace::Subspace(Field field, std::size_t ambient) : basis_(std::move(field), 0, ambient) {}

Subspace Subspace::span_of(const Matrix& spanning) {
  Matrix m = spanning;
  const std::size_t r = rref_in_place(m);
  std::vector<Code> codes(m.codes().begin(), m.codes().begin() + static_cast<std::ptrdiff_t>(r * m.cols()));
  return Subspace(Matrix(m.field(), r, m.cols(), std::move(codes)));
}

bool Subspace::contains(std::span<const Code> v) const {
  if (v.size() != ambient()) throw Error(Errc::kAmbientMismatch, "vector length differs from ambient");
  std::vector<Code> codes(basis_.codes());
  codes.insert(codes.end(), v.begin(), v.end());
  return rank(Matrix(field(), dim() + 1, ambient(), std::move(codes))) == dim();
}

Subspace Subspace::frobenius(std::uint64_t r) const { return span_of(mat_frobenius(basis_, r)); }

Subspace kernel_basis(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  const std::size_t rk = rref_in_place(r, &pivots);
  const auto& f = *m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(m.field(), m.cols() - rk, m.cols());
  std::size_t row = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(row, free) = 1;
    for (std::size_t i = 0; i < rk; ++i) basis(row, pivots[i]) = f.neg(r(i, free));
    ++row;
  }
  return Subspace::span_of(basis);
}

std::size_t intersect_dim(const Subspace& v, const Subspace& w) {
  if (v.ambient() != w.ambient()) throw Error(Errc::kAmbientMismatch, "subspaces of different ambient spaces");
  if (!v.field()->same_as(*w.field())) throw Error(Errc::kMixedFields, "subspaces over different fields");
  std::vector<Code> codes(v.basis().codes());
  codes.insert(codes.end(), w.basis().codes().begin(), w.basis().codes().end());
  const std::size_t stacked = rank(Matrix(v.field(), v.dim() + w.dim(), v.ambient(), std::move(codes)));
  return v.dim() + w.dim() - stacked;
}

Subspace intersect(const Subspace& v, const Subspace& w) {
  if (v.ambient() != w.ambient()) throw Error(Errc::kAmbientMismatch, "subspaces of different ambient spaces");
  if (!v.field()->same_as(*w.field())) throw Error(Errc::kMixedFields, "subspaces over different fields");
  // Solve sum a_i v_i - sum b_j w_j = 0 in the coefficients (a, b).
  const auto& f = *v.field();
  const std::size_t dv = v.dim();
  const std::size_t dw = w.dim();
  Matrix system(v.field(), v.ambient(), dv + dw);
  for (std::size_t k = 0; k < v.ambient(); ++k) {
    for (std::size_t i = 0; i < dv; ++i) system(k, i) = v.basis()(i, k);
    for (std::size_t j = 0; j < dw; ++j) system(k, dv + j) = f.neg(w.basis()(j, k));
  }
  const Subspace sol = kernel_basis(system);
  Matrix vectors(v.field(), sol.dim(), v.ambient());
  for (std::size_t s = 0; s < sol.dim(); ++s) {
    for (std::size_t i = 0; i < dv; ++i) {
      const Code a = sol.basis()(s, i);
      if (a == 0) continue;
      for (std::size_t k = 0; k < v.ambient(); ++k) {
        vectors(s, k) = f.add(vectors(s, k), f.mul(a, v.basis()(i, k)));
      }
    }
  }
  return Subspace::span_of(vectors);
}

bool subspace_defined_over(const Subspace& v, std::uint64_t r) { return v.frobenius(r) == v; }

Poly char_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::kSizeMismatch, "char_poly needs a square matrix");
  const std::size_t n = m.n();
  if (n > 20) throw Error(Errc::kOutOfRange, "matrix too large for cofactor expansion");
  const auto& field = m.field();
  const auto& f = *field;
  // minor[S] = det of the |S| x |S| minor on the first |S| rows and columns S,
  // expanded along its last row.
  std::vector<Poly> minor(std::size_t{1} << n, Poly(field));
  minor[0] = Poly::constant(field, 1);
  for (std::size_t s = 1; s < minor.size(); ++s) {
    const std::size_t k = static_cast<std::size_t>(std::popcount(s));
    const std::size_t row = k - 1;
    Poly acc(field);
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(s & (std::size_t{1} << j))) continue;
      // Entry (row, j) of x I - m.
      Poly entry = Poly::constant(field, f.neg(m(row, j)));
      if (row == j) entry = entry + Poly::x(field);
      if (!entry.is_zero()) {
        Poly term = entry * minor[s & ~(std::size_t{1} << j)];
        acc = ((row + pos) % 2 == 0) ? acc + term : acc - term;
      }
      ++pos;
    }
    minor[s] = std::move(acc);
  }
  return minor.back();
}

Poly min_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::kSizeMismatch, "min_poly needs a square matrix");
  const auto& field = m.field();
  const auto& f = *field;
  const std::size_t n = m.n();
  const std::size_t nn = n * n;
  std::vector<Matrix> powers{Matrix::identity(field, n)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * m);
    // Columns: vec(M^0) .. vec(M^{k-1}) | vec(M^k).
    Matrix system(field, nn, k + 1);
    for (std::size_t c = 0; c <= k; ++c) {
      for (std::size_t t = 0; t < nn; ++t) system(t, c) = powers[c].codes()[t];
    }
    std::vector<std::size_t> pivots;
    rref_in_place(system, &pivots);
    if (!pivots.empty() && pivots.back() == k) continue;  // inconsistent
    // Powers below k are independent, so pivots are exactly 0..k-1.
    std::vector<Code> coeffs(k + 1);
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = f.neg(system(i, k));
    coeffs[k] = 1;
    return Poly(field, std::move(coeffs));
  }
  return char_poly(m);
}

bool is_semisimple(const Matrix& m) { return poly_is_squarefree(min_poly(m)); }

EigenData eigen_data(const Matrix& m, std::uint64_t cap) {
  if (!m.is_square()) throw Error(Errc::kSizeMismatch, "eigen_data needs a square matrix");
  if (m.n() > kMaxEigenSize) throw Error(Errc::kOutOfRange, "eigen analysis is capped at n = 6");
  const auto& base = m.field();
  const Poly cp = char_poly(m);
  unsigned lcm = 1;
  for (unsigned d : irreducible_factor_degrees(cp)) lcm = std::lcm(lcm, d);
  EigenData out;
  out.ext = make_field(base->p(), base->e() * lcm, cap);
  const auto& ef = *out.ext;
  const Matrix me = embed(m, out.ext);
  const Poly ce = embed(cp, out.ext);
  const std::size_t n = m.n();
  for (Code t = 0; t < ef.q(); ++t) {
    if (ce.eval(t) != 0) continue;
    Eigenvalue ev{FieldElement(out.ext, t), root_multiplicity(ce, t), Subspace(out.ext, n), {}, {}};
    const Matrix shifted = me - Matrix::scalar(out.ext, n, t);
    Matrix power = shifted;
    std::size_t prev = 0;
    while (true) {
      Subspace ker = kernel_basis(power);
      const std::size_t d = ker.dim();
      if (d == prev) break;  // cannot happen before reaching the multiplicity
      ev.filtration.push_back(static_cast<unsigned>(d - prev));
      ev.generalized.push_back(std::move(ker));
      prev = d;
      if (d >= ev.multiplicity) break;
      power = power * shifted;
    }
    ev.eigenspace = ev.generalized.front();
    out.eigen.push_back(std::move(ev));
  }
  return out;
}

}  // namespace fcensus
