#include "qcldpc/bit_matrix.hpp"

#include <algorithm>
#include <bit>

namespace qcldpc {

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BitMatrix::xor_row(int dst, int src) {
  uint64_t* d = row_words(dst);
  const uint64_t* s = row_words(src);
  for (int w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  uint64_t* ra = row_words(a);
  uint64_t* rb = row_words(b);
  for (int w = 0; w < words_per_row_; ++w) std::swap(ra[w], rb[w]);
}

int BitMatrix::row_weight(int r) const {
  const uint64_t* w = row_words(r);
  int count = 0;
  for (int i = 0; i < words_per_row_; ++i) count += std::popcount(w[i]);
  return count;
}

bool BitMatrix::row_is_zero(int r) const {
  const uint64_t* w = row_words(r);
  for (int i = 0; i < words_per_row_; ++i)
    if (w[i]) return false;
  return true;
}

std::vector<int> gf2_rref(BitMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    // first non-zero row at or below `row` in this column
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m.get(r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.swap_rows(row, pivot);
    for (int r = 0; r < m.rows(); ++r) {
      if (r != row && m.get(r, col)) m.xor_row(r, row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int gf2_rank(BitMatrix m) {
  return static_cast<int>(gf2_rref(m).size());
}

BitMatrix nullspace_basis(const BitMatrix& m) {
  BitMatrix r = m;
  std::vector<int> pivots = gf2_rref(r);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  BitMatrix basis(static_cast<int>(free_cols.size()), n);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis.set(static_cast<int>(k), f, true);
    // pivot row i reads: x[pivots[i]] + sum over free cols in that row = 0
    for (size_t i = 0; i < pivots.size(); ++i) {
      if (r.get(static_cast<int>(i), f))
        basis.set(static_cast<int>(k), pivots[i], true);
    }
  }
  return basis;
}

}  // namespace qcldpc
