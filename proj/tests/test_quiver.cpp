#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "fcensus/census.hpp"
#include "fcensus/quiver.hpp"

using namespace fcensus;

namespace {

// Brute-force isomorphism classes: every r x r multiplicity matrix with n
// edges, balanced, no isolated vertex; classes keyed by the minimum
// flattening over all relabelings.
std::size_t brute_bal_count(unsigned n) {
  std::set<std::pair<std::size_t, std::vector<unsigned>>> classes;
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t cells = r * r;
    std::vector<unsigned> m(cells, 0);
    auto record = [&] {
      for (std::size_t i = 0; i < r; ++i) {
        unsigned out = 0, in = 0;
        for (std::size_t j = 0; j < r; ++j) {
          out += m[i * r + j];
          in += m[j * r + i];
        }
        if (out != in || out == 0) return;
      }
      std::vector<std::size_t> perm(r);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<unsigned> best;
      do {
        std::vector<unsigned> flat(cells);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) flat[i * r + j] = m[perm[i] * r + perm[j]];
        if (best.empty() || flat < best) best = flat;
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.emplace(r, best);
    };
    // Every way to drop n edges into the cells.
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t cell, unsigned left) {
      if (cell + 1 == cells) {
        m[cell] = left;
        record();
        m[cell] = 0;
        return;
      }
      for (unsigned k = 0; k <= left; ++k) {
        m[cell] = k;
        fill(cell + 1, left - k);
      }
      m[cell] = 0;
    };
    fill(0, n);
  }
  return classes.size();
}

Quiver random_quiver(std::mt19937_64& rng) {
  const std::size_t r = 1 + rng() % 6;
  std::vector<unsigned> m(r * r);
  for (auto& v : m) v = rng() % 3;
  return Quiver(r, std::move(m));
}

}  // namespace

TEST_CASE("balanced quivers with few edges") {
  const auto one = enumerate_bal(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Quiver(1, {1}));

  const auto two = enumerate_bal(2);
  CHECK(two.size() == 3);
  std::set<Quiver> got(two.begin(), two.end());
  CHECK(got.count(canonicalize(Quiver(1, {2}))));
  CHECK(got.count(canonicalize(Quiver({{1, 0}, {0, 1}}))));
  CHECK(got.count(canonicalize(Quiver({{0, 1}, {1, 0}}))));

  for (unsigned n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const auto all = enumerate_bal(n);
    CHECK(all.size() == brute_bal_count(n));
    for (const auto& q : all) {
      CHECK(is_balanced(q));
      CHECK(edge_count(q) == n);
      CHECK_FALSE(q.has_isolated_vertex());
      CHECK(canonicalize(q) == q);
    }
  }
}

TEST_CASE("canonical forms are constant on relabeling orbits") {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 100; ++t) {
    const Quiver q = random_quiver(rng);
    std::vector<std::size_t> perm(q.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonicalize(permuted(q, perm)) == canonicalize(q));
  }
  const Quiver db = dumbbell();
  CHECK(canonicalize(permuted(db, {1, 0})) == canonicalize(db));
  CHECK_FALSE(canonicalize(Quiver({{1, 0}, {0, 1}})) == canonicalize(Quiver({{0, 1}, {1, 0}})));
  CHECK_THROWS_AS(canonicalize(Quiver(9, std::vector<unsigned>(81, 0))), Error);
}

TEST_CASE("dimension is additive under disjoint union") {
  for (unsigned a = 1; a <= 3; ++a) {
    for (unsigned b = 1; b <= 3; ++b) {
      for (const auto& qa : enumerate_bal(a)) {
        for (const auto& qb : enumerate_bal(b)) {
          CHECK(dim_X_diag(disjoint_union(qa, qb)) == dim_X_diag(qa) + dim_X_diag(qb));
        }
      }
    }
  }
  CHECK_THROWS_AS(dim_X_diag(Quiver({{0, 1}, {0, 0}})), Error);
}

TEST_CASE("maximizers") {
  const std::vector<std::size_t> class_counts{2, 1, 2, 1, 1, 1};
  for (unsigned n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const auto m = maximizers(n);
    CHECK(m.max_dim == static_cast<int>(n * n / 3 + 1));
    CHECK(dim_X_diag(octopus(n)) == m.max_dim);
    if (n >= 2) CHECK(m.classes.size() == class_counts[n - 2]);
  }
  const auto m2 = maximizers(2);
  CHECK(m2.max_dim == 2);
  const auto m4 = maximizers(4);
  CHECK(m4.max_dim == 6);
  CHECK(std::count(m4.classes.begin(), m4.classes.end(), canonicalize(dumbbell())) == 1);
  const auto m5 = maximizers(5);
  CHECK(m5.max_dim == 9);
  CHECK(m5.classes == std::vector<Quiver>{canonicalize(octopus(5))});
}

TEST_CASE("quiver of a semisimple matrix") {
  const Field f2 = make_field(2, 1);
  const Matrix d = Matrix::from_rows(f2, {{0, 0}, {0, 1}});
  CHECK(canonicalize(quiver_of_matrix(d, eigen_data(d))) == canonicalize(Quiver({{1, 0}, {0, 1}})));
  const Matrix c = Matrix::from_rows(f2, {{0, 1}, {1, 1}});
  CHECK(canonicalize(quiver_of_matrix(c, eigen_data(c))) == canonicalize(Quiver({{0, 1}, {1, 0}})));
  const Matrix s = Matrix::scalar(f2, 2, 1);
  CHECK(quiver_of_matrix(s, eigen_data(s)) == Quiver(1, {2}));
  const Matrix j = Matrix::from_rows(f2, {{0, 1}, {0, 0}});
  CHECK_THROWS_AS(quiver_of_matrix(j, eigen_data(j)), Error);
}

TEST_CASE("edge count detects membership in X for semisimple matrices") {
  for (const auto& [p, e, n] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 2, 2}, {3, 2, 2}, {2, 3, 2}}) {
    const Field f = make_field(p, e);
    std::uint64_t total = 1;
    for (unsigned t = 0; t < n * n; ++t) total *= f->q();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const Matrix m = matrix_from_index(f, n, idx);
      if (!is_semisimple(m)) continue;
      const Quiver q = quiver_of_matrix(m, eigen_data(m));
      if (commutes(m, mat_frobenius(m))) {
        REQUIRE(edge_count(q) == n);
        REQUIRE(is_balanced(q));
      } else {
        REQUIRE(edge_count(q) < n);
      }
    }
  }
}
