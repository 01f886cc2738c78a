#pragma once

#include <vector>

#include "asf/rational.hpp"

namespace asf {

// Dense exact-rational linear algebra, used by the randomized verdict path
// and the lattice oracle.
using QMatrix = std::vector<std::vector<Rational>>;

inline Rational det_q(QMatrix m) {
  size_t d = m.size();
  for (auto& row : m)
    if (row.size() != d) throw std::invalid_argument("det_q: not square");
  Rational det = 1;
  for (size_t k = 0; k < d; ++k) {
    size_t piv = k;
    while (piv < d && m[piv][k] == 0) ++piv;
    if (piv == d) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < d; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (size_t j = k; j < d; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

// Rank by Gaussian elimination; `m` is rows x cols, not necessarily square.
inline int rank_q(QMatrix m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (size_t i = row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / m[row][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace asf
