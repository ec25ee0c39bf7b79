#include "fcensus/subalgebras.hpp"

#include <functional>
#include <numeric>
#include <unordered_set>

#include "fcensus/formulas.hpp"

namespace fcensus {

namespace {

// Membership in the row space of an RREF matrix.
class SpanTester {
 public:
  explicit SpanTester(const Subspace& s) : s_(s) {
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.rows(); ++i) {
      std::size_t c = 0;
      while (b(i, c) == 0) ++c;
      pivots_.push_back(c);
    }
  }

  bool contains(std::vector<Code> v) const {
    const auto& f = *s_.field();
    const auto& b = s_.basis();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Code factor = v[pivots_[i]];
      if (factor == 0) continue;
      for (std::size_t j = pivots_[i]; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(factor, b(i, j)));
    }
    for (Code c : v) {
      if (c != 0) return false;
    }
    return true;
  }

 private:
  const Subspace& s_;
  std::vector<std::size_t> pivots_;
};

bool closed_and_commutative(const std::vector<Matrix>& mats, const SpanTester& span) {
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i; j < mats.size(); ++j) {
      const Matrix ij = mats[i] * mats[j];
      if (i != j && !(ij == mats[j] * mats[i])) return false;
      if (!span.contains(ij.codes())) return false;
    }
  }
  return true;
}

Matrix flatten_rows(const std::vector<Matrix>& mats, const Field& f, std::size_t n) {
  Matrix rows(f, mats.size(), n * n);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t t = 0; t < n * n; ++t) rows(i, t) = mats[i].codes()[t];
  }
  return rows;
}

std::uint64_t lcm_upto(unsigned n) {
  std::uint64_t l = 1;
  for (unsigned i = 2; i <= n; ++i) l = std::lcm(l, std::uint64_t{i});
  return l;
}

}  // namespace

SubalgebraBasis::SubalgebraBasis(std::size_t n, Subspace span) : n_(n), span_(std::move(span)) {
  if (span_.ambient() != n_ * n_) throw Error(Errc::kAmbientMismatch, "span must live in the n^2-space");
}

Matrix unflatten(std::span<const Code> v, const Field& f, std::size_t n) {
  return Matrix(f, n, n, std::vector<Code>(v.begin(), v.end()));
}

std::vector<Matrix> SubalgebraBasis::basis() const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(unflatten(span_.basis().row(i), field(), n_));
  return out;
}

bool SubalgebraBasis::contains(const Matrix& m) const { return span_.contains(m.codes()); }

bool is_commutative_subalgebra(const std::vector<Matrix>& span) {
  if (span.empty()) return false;
  const Field& f = span.front().field();
  const std::size_t n = span.front().n();
  for (const auto& m : span) {
    if (!m.is_square() || m.n() != n || !m.field()->same_as(*f)) {
      throw Error(Errc::kSizeMismatch, "matrices must share field and size");
    }
  }
  const Subspace s = Subspace::span_of(flatten_rows(span, f, n));
  if (!s.contains(Matrix::identity(f, n).codes())) return false;
  // Closure and commutativity on a basis extend bilinearly to the span.
  const SubalgebraBasis alg(n, s);
  return closed_and_commutative(alg.basis(), SpanTester(s));
}

CommutativeCensus commutative_census(unsigned p, unsigned n, unsigned d, std::uint64_t cap, bool unital) {
  if (n < 1 || d < 1 || d > n * n) throw Error(Errc::kOutOfRange, "need 1 <= d <= n^2");
  const Field f = make_field(p, 1);
  const std::size_t nn = n * n;
  const std::size_t m = unital ? nn - 1 : nn;
  const std::size_t k = unital ? d - 1 : d;
  CommutativeCensus out;
  out.candidates = gaussian_binomial(static_cast<unsigned>(m), static_cast<unsigned>(k), p);
  if (out.candidates > cap) {
    throw Error(Errc::kWorkCapExceeded, "candidate subspaces exceed the cap " + std::to_string(cap));
  }
  const Matrix identity = Matrix::identity(f, n);
  for_each_subspace(f, m, k, [&](const Matrix& rows) {
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      std::vector<Code> flat(nn, 0);
      // Unital: coordinate t of the complement is flattened entry t + 1.
      for (std::size_t t = 0; t < m; ++t) flat[unital ? t + 1 : t] = rows(i, t);
      mats.emplace_back(f, n, n, std::move(flat));
    }
    std::vector<Matrix> spanning = mats;
    if (unital) spanning.push_back(identity);
    const Subspace s = Subspace::span_of(flatten_rows(spanning, f, n));
    if (closed_and_commutative(mats, SpanTester(s))) {
      ++out.count;
      out.algebras.emplace_back(n, s);
    }
  });
  return out;
}

BigInt diag_subalgebra_census(unsigned p, unsigned n, std::uint64_t cap) {
  if (n < 1) throw Error(Errc::kOutOfRange, "n >= 1");
  const std::uint64_t degree = lcm_upto(n);
  const Field ext = make_field(p, static_cast<std::uint32_t>(degree));
  const auto& f = *ext;
  const std::uint64_t big_q = f.q();
  BigInt lines = 0;
  for (unsigned i = 0; i < n; ++i) lines += ipow(BigInt(big_q), i);
  if (lines > cap) throw Error(Errc::kWorkCapExceeded, "too many lines to scan");

  using Vec = std::vector<Code>;
  auto key_of = [&](const Vec& v) {
    std::uint64_t key = 0;
    for (std::size_t i = v.size(); i-- > 0;) key = key * big_q + v[i];
    return key;
  };
  auto normalize = [&](Vec v) {
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    const Code inv = f.inv(v[lead]);
    for (auto& c : v) c = f.mul(c, inv);
    return v;
  };

  // Sigma-orbits of lines with at most n members.
  std::vector<std::vector<Vec>> orbits;
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail = n - lead - 1;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < tail; ++i) combos *= big_q;
    for (std::uint64_t t = 0; t < combos; ++t) {
      Vec v(n, 0);
      v[lead] = 1;
      std::uint64_t rest = t;
      for (std::size_t i = lead + 1; i < n; ++i) {
        v[i] = static_cast<Code>(rest % big_q);
        rest /= big_q;
      }
      const std::uint64_t key = key_of(v);
      if (seen.count(key)) continue;
      std::vector<Vec> orbit{v};
      seen.insert(key);
      Vec w = v;
      while (true) {
        for (auto& c : w) c = f.frobenius(c, 1);
        w = normalize(std::move(w));
        const std::uint64_t wk = key_of(w);
        if (wk == key) break;
        seen.insert(wk);
        orbit.push_back(w);
      }
      if (orbit.size() <= n) orbits.push_back(std::move(orbit));
    }
  }

  // Choose distinct orbits whose sizes add up to n and whose lines span.
  BigInt count = 0;
  std::vector<const std::vector<Vec>*> chosen;
  std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t left) {
    if (left == 0) {
      Matrix stacked(ext, n, n);
      std::size_t row = 0;
      for (const auto* orbit : chosen) {
        for (const auto& v : *orbit) {
          for (std::size_t j = 0; j < n; ++j) stacked(row, j) = v[j];
          ++row;
        }
      }
      if (rank(stacked) == n) ++count;
      return;
    }
    for (std::size_t i = from; i < orbits.size(); ++i) {
      if (orbits[i].size() > left) continue;
      chosen.push_back(&orbits[i]);
      pick(i + 1, left - orbits[i].size());
      chosen.pop_back();
    }
  };
  pick(0, n);
  return count;
}

SubalgebraBasis schur_algebra(const Subspace& v) {
  const std::size_t n = v.ambient();
  const std::size_t k = v.dim();
  if (k == 0 || k >= n) throw Error(Errc::kDegenerateV, "V must be a proper nonzero subspace");
  const Field& field = v.field();
  // Annihilator: y with y . v = 0 for all v in V.
  const Subspace ann = kernel_basis(v.basis());
  // Unknowns A(i, j) at i n + j. Rows: A v = 0 for v in V, y^T A = 0 for y in ann.
  Matrix sys(field, k * n + ann.dim() * n, n * n);
  std::size_t row = 0;
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t i = 0; i < n; ++i, ++row) {
      for (std::size_t j = 0; j < n; ++j) sys(row, i * n + j) = v.basis()(b, j);
    }
  }
  for (std::size_t b = 0; b < ann.dim(); ++b) {
    for (std::size_t j = 0; j < n; ++j, ++row) {
      for (std::size_t i = 0; i < n; ++i) sys(row, i * n + j) = ann.basis()(b, i);
    }
  }
  const Subspace nilpotent_part = kernel_basis(sys);
  Matrix spanning(field, nilpotent_part.dim() + 1, n * n);
  for (std::size_t r = 0; r < nilpotent_part.dim(); ++r) {
    for (std::size_t t = 0; t < n * n; ++t) spanning(r, t) = nilpotent_part.basis()(r, t);
  }
  for (std::size_t i = 0; i < n; ++i) spanning(nilpotent_part.dim(), i * n + i) = 1;
  return SubalgebraBasis(n, Subspace::span_of(spanning));
}

}  // namespace fcensus
