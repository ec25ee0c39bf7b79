#pragma once

#include <utility>
#include <vector>

namespace fcensus {

template <class Visit>
void for_each_subspace(const Field& f, std::size_t m, std::size_t k, Visit&& visit) {
  if (k > m) return;
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<bool> is_pivot(m, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = pivots[i] + 1; c < m; ++c) {
        if (!is_pivot[c]) free_cells.emplace_back(i, c);
      }
    }
    Matrix basis(f, k, m);
    for (std::size_t i = 0; i < k; ++i) basis(i, pivots[i]) = 1;
    std::vector<Code> digits(free_cells.size(), 0);
    while (true) {
      for (std::size_t t = 0; t < free_cells.size(); ++t) basis(free_cells[t].first, free_cells[t].second) = digits[t];
      visit(static_cast<const Matrix&>(basis));
      std::size_t t = 0;
      for (; t < digits.size(); ++t) {
        if (++digits[t] < f->q()) break;
        digits[t] = 0;
      }
      if (t == digits.size()) break;
    }
    // Next k-combination of pivot columns.
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

}  // namespace fcensus
