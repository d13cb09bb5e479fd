#pragma once

#include <cstdint>
#include <vector>

namespace qcldpc {

// Dense GF(2) matrix, row-major, bits packed into 64-bit words.
// Bits past `cols` in the last word of each row stay zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
        bits_(static_cast<size_t>(rows) * words_per_row_, 0) {}

  static BitMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return words_per_row_; }

  bool get(int r, int c) const {
    return (bits_[idx(r, c)] >> (c & 63)) & 1u;
  }
  void set(int r, int c, bool v) {
    if (v)
      bits_[idx(r, c)] |= uint64_t{1} << (c & 63);
    else
      bits_[idx(r, c)] &= ~(uint64_t{1} << (c & 63));
  }

  uint64_t* row_words(int r) { return bits_.data() + static_cast<size_t>(r) * words_per_row_; }
  const uint64_t* row_words(int r) const {
    return bits_.data() + static_cast<size_t>(r) * words_per_row_;
  }

  // dst ^= src, over whole rows
  void xor_row(int dst, int src);
  void swap_rows(int a, int b);
  int row_weight(int r) const;
  bool row_is_zero(int r) const;

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
  }

 private:
  size_t idx(int r, int c) const {
    return static_cast<size_t>(r) * words_per_row_ + (c >> 6);
  }

  int rows_ = 0;
  int cols_ = 0;
  int words_per_row_ = 0;
  std::vector<uint64_t> bits_;
};

// Rank over GF(2). Takes a copy; the argument is not modified.
int gf2_rank(BitMatrix m);

// Row-reduce in place to reduced row echelon form; returns pivot columns.
std::vector<int> gf2_rref(BitMatrix& m);

// Basis of {v : m v = 0}, one vector per row; rows() == cols(m) - rank(m).
// Each basis row has a 1 in exactly one non-pivot (free) column, so the
// basis doubles as a systematic generator matrix.
BitMatrix nullspace_basis(const BitMatrix& m);

}  // namespace qcldpc
