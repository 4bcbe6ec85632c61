#include "tvar/linalg.hpp"

#include <utility>

namespace tvar {

// Bareiss elimination: after step k every entry is an exact minor of the
// original matrix, so divisions are exact and entries stay bounded by the
// Hadamard bound instead of exploding.
int rank_int_matrix(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  Int prev(1);
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && sign(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t r = rank + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

Int det_int_matrix(std::vector<std::vector<Int>> m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Int prev(1);
  int swaps = 0;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && sign(m[pivot][k]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) { std::swap(m[k], m[pivot]); ++swaps; }
    for (size_t r = k + 1; r < n; ++r) {
      for (size_t c = k + 1; c < n; ++c)
        m[r][c] = (m[k][k] * m[r][c] - m[r][k] * m[k][c]) / prev;
      m[r][k] = 0;
    }
    prev = m[k][k];
  }
  Int d = m[n - 1][n - 1];
  return (swaps % 2 == 0) ? d : Int(-d);
}

}  // namespace tvar
