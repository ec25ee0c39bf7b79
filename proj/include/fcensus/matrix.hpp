#pragma once

// Dense exact linear algebra over a finite field.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "fcensus/finite_field.hpp"
#include "fcensus/poly.hpp"

namespace fcensus {

inline constexpr std::size_t kMaxEigenSize = 6;

/// Row-major matrix of field codes. Square n x n for the membership
/// predicates; rectangular shapes are used for subspace bases and linear
/// systems.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t n) : Matrix(std::move(field), n, n) {}
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Code> codes);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix scalar(const Field& f, std::size_t n, Code lambda);
  /// Entries given as codes, one initializer list per row.
  static Matrix from_rows(const Field& f, std::initializer_list<std::initializer_list<Code>> rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::size_t n() const noexcept { return rows_; }

  Code operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }
  Code& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
  FieldElement at(std::size_t i, std::size_t j) const { return {field_, (*this)(i, j)}; }
  std::span<const Code> row(std::size_t i) const noexcept { return {a_.data() + i * cols_, cols_}; }
  std::span<Code> row(std::size_t i) noexcept { return {a_.data() + i * cols_, cols_}; }
  const std::vector<Code>& codes() const noexcept { return a_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  bool is_zero() const noexcept;

  bool operator==(const Matrix& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && field_->same_as(*o.field_);
  }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> a_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
bool commutes(const Matrix& a, const Matrix& b);
/// Entrywise x -> x^{p^r}.
Matrix mat_frobenius(const Matrix& m, std::uint64_t r = 1);
Matrix embed(const Matrix& m, const Field& target);
/// Evaluates f at a square matrix.
Matrix poly_eval(const Poly& f, const Matrix& m);

/// Reduces m to reduced row echelon form in place and returns the rank.
/// Pivot columns are appended to `pivots` when given.
std::size_t rref_in_place(Matrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(Matrix m);

/// A linear subspace of F^ambient, stored by its reduced row echelon basis so
/// that equal subspaces have equal representations.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient);
  /// Span of the rows of `spanning`.
  static Subspace span_of(const Matrix& spanning);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  bool contains(std::span<const Code> v) const;
  Subspace frobenius(std::uint64_t r = 1) const;

  bool operator==(const Subspace& o) const noexcept { return basis_ == o.basis_; }

 private:
  explicit Subspace(Matrix rref) : basis_(std::move(rref)) {}
  Matrix basis_;
};

/// {x : m x = 0}.
Subspace kernel_basis(const Matrix& m);
std::size_t intersect_dim(const Subspace& v, const Subspace& w);
Subspace intersect(const Subspace& v, const Subspace& w);
/// True iff V is fixed by sigma^r.
bool subspace_defined_over(const Subspace& v, std::uint64_t r);

/// det(x I - m) by cofactor expansion over the polynomial ring.
Poly char_poly(const Matrix& m);
Poly min_poly(const Matrix& m);
bool is_semisimple(const Matrix& m);

struct Eigenvalue {
  FieldElement value;
  unsigned multiplicity = 0;
  Subspace eigenspace;
  /// e(lambda, k) = dim ker (M - lambda)^k - dim ker (M - lambda)^{k-1}, k >= 1.
  std::vector<unsigned> filtration;
  /// ker (M - lambda)^k for k = 1 .. filtration.size().
  std::vector<Subspace> generalized;
};

struct EigenData {
  /// F_{q^L}, L the lcm of the irreducible factor degrees of the
  /// characteristic polynomial; every eigenvalue and eigenspace lives here.
  Field ext;
  std::vector<Eigenvalue> eigen;  // ordered by code in ext
};

EigenData eigen_data(const Matrix& m, std::uint64_t cap = kDefaultFieldCap);

}  // namespace fcensus
