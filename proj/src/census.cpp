#include "fcensus/census.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

namespace fcensus {

namespace {

constexpr std::size_t kMaxCensusN = kMaxEigenSize;

bool commute_raw(const FieldDescriptor& f, std::size_t n, const Code* a, const Code* b) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Code ab = 0;
      Code ba = 0;
      for (std::size_t k = 0; k < n; ++k) {
        ab = f.add(ab, f.mul(a[i * n + k], b[k * n + j]));
        ba = f.add(ba, f.mul(b[i * n + k], a[k * n + j]));
      }
      if (ab != ba) return false;
    }
  }
  return true;
}

struct Tally {
  std::uint64_t X = 0;
  std::uint64_t X_diag = 0;
  std::uint64_t X_inf = 0;
  std::uint64_t X_inf_diag = 0;
  std::uint64_t X_eig_fp = 0;
  std::map<Quiver, std::uint64_t> quivers;
  std::map<JordanShape, std::pair<std::uint64_t, std::uint64_t>> shapes;
  std::uint64_t violations = 0;

  void merge(const Tally& o) {
    X += o.X;
    X_diag += o.X_diag;
    X_inf += o.X_inf;
    X_inf_diag += o.X_inf_diag;
    X_eig_fp += o.X_eig_fp;
    violations += o.violations;
    for (const auto& [k, v] : o.quivers) quivers[k] += v;
    for (const auto& [k, v] : o.shapes) {
      auto& slot = shapes[k];
      slot.first += v.first;
      slot.second += v.second;
    }
  }
};

// Quiver invariants for a semisimple member of X: balanced, n edges, and
// out-degree of each vertex equal to its eigenspace dimension.
bool quiver_invariants_hold(const Quiver& q, const EigenData& eig, std::size_t n) {
  if (!is_balanced(q) || edge_count(q) != n) return false;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    if (degree(q, i) != eig.eigen[i].eigenspace.dim()) return false;
  }
  return true;
}

void classify_member(const Field& field, std::size_t n, const Code* codes, bool in_x_inf,
                     const CensusOptions& options, Tally& tally) {
  const Matrix m(field, n, n, std::vector<Code>(codes, codes + n * n));
  const bool semisimple = is_semisimple(m);
  if (semisimple) {
    ++tally.X_diag;
    if (in_x_inf) ++tally.X_inf_diag;
  }
  const EigenData eig = eigen_data(m);
  bool eig_fp = true;
  for (const auto& ev : eig.eigen) {
    if (!subspace_defined_over(ev.eigenspace, 1)) {
      eig_fp = false;
      break;
    }
  }
  if (eig_fp) ++tally.X_eig_fp;
  if (!options.strata) return;

  if (semisimple) {
    const Quiver q = quiver_of_matrix(m, eig);
    if (!quiver_invariants_hold(q, eig, n)) ++tally.violations;
    ++tally.quivers[canonicalize(q)];
  }
  auto& slot = tally.shapes[shape_of_matrix(eig)];
  ++slot.first;
  if (eig_fp) {
    ++slot.second;
    for (const auto& ev : eig.eigen) {
      for (const auto& g : ev.generalized) {
        if (!subspace_defined_over(g, 1)) {
          ++tally.violations;
          break;
        }
      }
    }
  }
}

void classify_range(const Field& field, std::size_t n, std::uint64_t lo, std::uint64_t hi,
                    const CensusOptions& options, Tally& tally) {
  const auto& f = *field;
  const std::size_t nn = n * n;
  const std::uint64_t q = f.q();
  Code digits[kMaxCensusN * kMaxCensusN] = {};
  {
    std::uint64_t rest = lo;
    for (std::size_t t = 0; t < nn; ++t) {
      digits[t] = static_cast<Code>(rest % q);
      rest /= q;
    }
  }
  Code m[kMaxCensusN * kMaxCensusN];
  Code s[kMaxCensusN * kMaxCensusN];
  Code si[kMaxCensusN * kMaxCensusN];
  const std::uint64_t twist = options.twist % f.e();
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    for (std::size_t t = 0; t < nn; ++t) {
      m[t] = twist == 0 ? digits[t] : f.frobenius(digits[t], twist);
      s[t] = f.frobenius(m[t], 1);
    }
    if (commute_raw(f, n, m, s)) {
      ++tally.X;
      bool in_x_inf = true;
      for (std::uint32_t i = 2; i < f.e() && in_x_inf; ++i) {
        for (std::size_t t = 0; t < nn; ++t) si[t] = f.frobenius(m[t], i);
        in_x_inf = commute_raw(f, n, m, si);
      }
      if (in_x_inf) ++tally.X_inf;
      classify_member(field, n, m, in_x_inf, options, tally);
    }
    // Odometer increment of the base-q digits.
    for (std::size_t t = 0; t < nn; ++t) {
      if (++digits[t] < q) break;
      digits[t] = 0;
    }
  }
}

std::uint64_t checked_total(std::uint64_t q, unsigned n, std::uint64_t cap) {
  const std::uint64_t limit = std::min(cap, kHardWorkCap);
  std::uint64_t total = 1;
  for (unsigned t = 0; t < n * n; ++t) {
    if (total > limit / q) {
      throw Error(Errc::kWorkCapExceeded, "q^{n^2} exceeds the work cap " + std::to_string(limit));
    }
    total *= q;
  }
  if (total > limit) throw Error(Errc::kWorkCapExceeded, "q^{n^2} exceeds the work cap " + std::to_string(limit));
  return total;
}

}  // namespace

Matrix matrix_from_index(const Field& f, std::size_t n, std::uint64_t index) {
  std::vector<Code> codes(n * n);
  for (auto& c : codes) {
    c = static_cast<Code>(index % f->q());
    index /= f->q();
  }
  return Matrix(f, n, n, std::move(codes));
}

CensusReport census(unsigned p, unsigned e, unsigned n, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (n < 1 || n > kMaxCensusN) throw Error(Errc::kOutOfRange, "census needs 1 <= n <= 6");
  const Field field = make_field(p, e);
  const std::uint64_t total = checked_total(field->q(), n, options.strata ? options.strata_cap : options.work_cap);

  const unsigned workers = std::max(1u, options.workers);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, options.chunk_size);
  std::atomic<std::uint64_t> next{0};
  std::vector<Tally> tallies(workers);
  std::mutex error_mu;
  std::exception_ptr error;
  auto run = [&](unsigned w) {
    try {
      while (true) {
        const std::uint64_t lo = next.fetch_add(chunk);
        if (lo >= total) break;
        classify_range(field, n, lo, std::min(total, lo + chunk), options, tallies[w]);
      }
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);

  Tally merged;
  for (const auto& t : tallies) merged.merge(t);

  CensusReport report;
  report.p = p;
  report.e = e;
  report.n = n;
  report.q = field->q();
  report.counts.X = merged.X;
  report.counts.X_diag = merged.X_diag;
  report.counts.X_inf = merged.X_inf;
  report.counts.X_inf_diag = merged.X_inf_diag;
  report.counts.X_eig_fp = merged.X_eig_fp;
  report.counts.total = total;
  report.has_strata = options.strata;
  for (const auto& [k, v] : merged.quivers) report.strata_by_quiver.emplace(k, v);
  for (const auto& [k, v] : merged.shapes) report.strata_by_shape.emplace(k, ShapeCounts{v.first, v.second});
  report.invariant_violations = merged.violations;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::map<Quiver, BigInt> census_by_quiver(unsigned p, unsigned e, unsigned n, CensusOptions options) {
  options.strata = true;
  return census(p, e, n, options).strata_by_quiver;
}

std::map<JordanShape, ShapeCounts> census_by_shape(unsigned p, unsigned e, unsigned n, CensusOptions options) {
  options.strata = true;
  return census(p, e, n, options).strata_by_shape;
}

BigInt w_q_bruteforce(const std::vector<unsigned>& e_list, unsigned p, unsigned e, std::uint64_t cap) {
  const Field field = make_field(p, e);
  const auto& f = *field;
  std::size_t m = 0;
  for (unsigned x : e_list) {
    if (x == 0) throw Error(Errc::kOutOfRange, "filtration dimensions must be positive");
    m += x;
  }
  if (m == 0 || m > 4) throw Error(Errc::kOutOfRange, "w_q_bruteforce needs 1 <= m <= 4");
  // prefix[k] = dim V_k.
  std::vector<std::size_t> prefix{0};
  for (unsigned x : e_list) prefix.push_back(prefix.back() + x);
  // Free cells: column j in block k may be nonzero only in rows < dim V_{k-1}.
  std::vector<std::size_t> cells;
  for (std::size_t k = 1; k < prefix.size(); ++k) {
    for (std::size_t j = prefix[k - 1]; j < prefix[k]; ++j) {
      for (std::size_t i = 0; i < prefix[k - 1]; ++i) cells.push_back(i * m + j);
    }
  }
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (total > cap / f.q()) throw Error(Errc::kWorkCapExceeded, "w_q_bruteforce search space");
    total *= f.q();
  }
  std::uint64_t count = 0;
  std::vector<Code> digits(cells.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix mat(field, m);
    for (std::size_t c = 0; c < cells.size(); ++c) mat(cells[c] / m, cells[c] % m) = digits[c];
    bool ok = commutes(mat, mat_frobenius(mat, 1));
    // V_k is inside ker M^k by construction; equality is a dimension check.
    Matrix power = mat;
    for (std::size_t k = 1; ok && k < prefix.size(); ++k) {
      if (kernel_basis(power).dim() != prefix[k]) ok = false;
      power = power * mat;
    }
    if (ok) ++count;
    for (auto& d : digits) {
      if (++d < f.q()) break;
      d = 0;
    }
  }
  return count;
}

BigInt count_vw(unsigned a, unsigned p, unsigned e, std::span<const Code> v, std::span<const Code> w,
                std::uint64_t cap) {
  const Field field = make_field(p, e);
  const auto& f = *field;
  if (a < 1 || v.size() != a || w.size() != a) throw Error(Errc::kSizeMismatch, "vectors must have length a");
  std::uint64_t total = 1;
  for (unsigned t = 0; t < a * a; ++t) {
    if (total > cap / f.q()) throw Error(Errc::kWorkCapExceeded, "count_vw search space");
    total *= f.q();
  }
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Matrix nm = matrix_from_index(field, a, idx);
    bool ok = true;
    for (std::size_t i = 0; i < a && ok; ++i) {
      Code lhs = 0;
      Code rhs = 0;
      for (std::size_t j = 0; j < a; ++j) {
        lhs = f.add(lhs, f.mul(nm(i, j), w[j]));
        rhs = f.add(rhs, f.mul(f.frobenius(nm(i, j), 1), v[j]));
      }
      ok = lhs == rhs;
    }
    if (ok && rank(nm) == a) ++count;
  }
  return count;
}

ExponentFit fit_exponent(const std::vector<std::pair<BigInt, BigInt>>& series) {
  if (series.size() < 3) throw Error(Errc::kInsufficientData, "need at least three points");
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i].second <= 0) throw Error(Errc::kZeroCount, "counts must be positive");
    if (series[i].first <= 1 || (i > 0 && series[i].first <= series[i - 1].first)) {
      throw Error(Errc::kInsufficientData, "q must be strictly increasing and > 1");
    }
  }
  const auto& [q1, c1] = series[series.size() - 2];
  const auto& [q2, c2] = series.back();
  const double lq1 = std::log(q1.convert_to<double>());
  const double lq2 = std::log(q2.convert_to<double>());
  const double lc1 = std::log(c1.convert_to<double>());
  const double lc2 = std::log(c2.convert_to<double>());
  ExponentFit fit;
  fit.exponent_raw = (lc2 - lc1) / (lq2 - lq1);
  fit.exponent = static_cast<int>(std::lround(fit.exponent_raw));
  fit.coefficient = std::exp(lc2 - fit.exponent * lq2);
  fit.coefficient_raw = std::exp(lc2 - fit.exponent_raw * lq2);
  return fit;
}

bool x2_projective_predicate(const Matrix& m) {
  if (!m.is_square() || m.n() != 2) throw Error(Errc::kWrongSize, "x2_projective_predicate needs a 2 x 2 matrix");
  const auto& f = *m.field();
  const Code a = m(0, 0);
  const Code b = m(0, 1);
  const Code c = m(1, 0);
  const Code d = m(1, 1);
  const Code u[3] = {b, c, f.sub(d, a)};
  if (u[0] == 0 && u[1] == 0 && u[2] == 0) return true;  // scalar
  Code su[3];
  for (int i = 0; i < 3; ++i) su[i] = f.frobenius(u[i], 1);
  // u and sigma(u) proportional: all 2 x 2 minors vanish.
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (f.mul(u[i], su[j]) != f.mul(u[j], su[i])) return false;
    }
  }
  return true;
}

}  // namespace fcensus
