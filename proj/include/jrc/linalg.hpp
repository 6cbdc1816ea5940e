#pragma once

// Fraction-free exact rank.  Bareiss elimination keeps every intermediate
// entry a minor of the input matrix, so growth stays polynomial and every
// division is exact.

#include <cstddef>
#include <utility>
#include <vector>

#include "jrc/exact.hpp"

namespace jrc {

/// Rank of an integer matrix by fraction-free elimination with full
/// pivoting.  Consumes the matrix.
inline int bareiss_rank(std::vector<std::vector<Int>> m) {
  if (m.empty() || m.front().empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();

  int rank = 0;
  Int prev = 1;
  for (std::size_t step = 0; step < rows && step < cols; ++step) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = step; i < rows && pr == rows; ++i)
      for (std::size_t j = step; j < cols; ++j)
        if (m[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;  // remaining block is zero
    std::swap(m[step], m[pr]);
    if (pc != step)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][step], m[i][pc]);

    for (std::size_t i = step + 1; i < rows; ++i) {
      for (std::size_t j = step + 1; j < cols; ++j)
        m[i][j] = (m[step][step] * m[i][j] - m[i][step] * m[step][j]) / prev;
      m[i][step] = 0;
    }
    prev = m[step][step];
    ++rank;
  }
  return rank;
}

/// Rank of a rational matrix: rows are scaled to integers first (row
/// scaling does not change rank).
inline int rank_rational(const std::vector<std::vector<Rat>>& m) {
  std::vector<std::vector<Int>> cleared;
  cleared.reserve(m.size());
  for (const auto& row : m) {
    Int scale = 1;
    for (const Rat& x : row) scale = lcm(scale, denominator(x));
    std::vector<Int> out;
    out.reserve(row.size());
    for (const Rat& x : row) out.push_back(numerator(x) * (scale / denominator(x)));
    cleared.push_back(std::move(out));
  }
  return bareiss_rank(std::move(cleared));
}

}  // namespace jrc
