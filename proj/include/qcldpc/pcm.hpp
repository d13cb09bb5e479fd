#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qcldpc/bit_matrix.hpp"
#include "qcldpc/difference_array.hpp"

namespace qcldpc {

// z x z circulant permutation matrix P^shift: row r has its single 1 at
// column (r - shift) mod z. Shift 0 is the identity.
struct CirculantDescriptor {
  int size = 0;
  int shift = 0;
};

BitMatrix expand_cpm(const CirculantDescriptor& c);

enum class BlockKind { Zero, Circulant, RowBlock };

struct BlockEntry {
  BlockKind kind = BlockKind::Zero;
  int value = 0;  // circulant shift, or v for the all-ones row of R_v
  bool operator==(const BlockEntry&) const = default;
};

// K x L grid of z x z blocks
struct BlockGrid {
  int z = 0;
  int band_rows = 0;  // K
  int band_cols = 0;  // L
  std::vector<BlockEntry> cells;  // row-major K*L

  BlockEntry& at(int i, int j) { return cells[static_cast<size_t>(i) * band_cols + j]; }
  const BlockEntry& at(int i, int j) const {
    return cells[static_cast<size_t>(i) * band_cols + j];
  }
  bool operator==(const BlockGrid&) const = default;
};

enum class MatrixForm { Construction1, Construction2, QuasiCyclic, Imported };

struct MatrixOrigin {
  MatrixForm form = MatrixForm::Imported;
  int a = 0;
  std::optional<int> alpha;
  std::optional<int> r0;
  // built from one of the two built-in difference-array families
  bool builtin_family = false;
};

// The four rows supporting a column, tagged by band: x in V-1, y in V0,
// z in V1, t in V2.
struct ColumnSupport {
  int b = 0;
  int x = 0, y = 0, z = 0, t = 0;
};

// Sparse binary matrix held as mutually consistent column and row supports.
class ParityCheckMatrix {
 public:
  ParityCheckMatrix() = default;

  // Builds row supports from the given column supports (each sorted).
  ParityCheckMatrix(int rows, int cols, std::vector<std::vector<int>> col_support,
                    MatrixOrigin origin = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long ones() const { return ones_; }

  std::span<const int> col(int b) const { return col_support_[b]; }
  std::span<const int> row(int r) const { return row_support_[r]; }
  const std::vector<std::vector<int>>& col_supports() const { return col_support_; }
  const std::vector<std::vector<int>>& row_supports() const { return row_support_; }

  int max_col_weight() const;
  int max_row_weight() const;

  const MatrixOrigin& origin() const { return origin_; }

  // Band boundaries: band k spans rows [band_start(k), band_start(k+1)).
  // Present only for constructed matrices (4 bands).
  bool has_sections() const { return !band_start_.empty(); }
  int band_start(int k) const { return band_start_[k]; }
  void set_sections(std::array<int, 5> starts) {
    band_start_.assign(starts.begin(), starts.end());
  }
  // band of a row: 0..3 standing for V-1, V0, V1, V2
  int band_of(int r) const;

  bool has_blocks() const { return blocks_.has_value(); }
  const BlockGrid& blocks() const { return *blocks_; }
  void set_blocks(BlockGrid g) { blocks_ = std::move(g); }

  BitMatrix to_dense() const;

  bool same_pattern(const ParityCheckMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && col_support_ == o.col_support_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  long long ones_ = 0;
  std::vector<std::vector<int>> col_support_;
  std::vector<std::vector<int>> row_support_;
  std::vector<int> band_start_;
  std::optional<BlockGrid> blocks_;
  MatrixOrigin origin_;
};

// Construction 1: 4a x a^2, bands R_v / I / P^v / P^{D(v,2)} per block
// column v. Input must be a valid DM.
ParityCheckMatrix build_h(const DifferenceArray& dm);

// Construction 2: (4a-1) x (a^2-a); block column r0 and the all-zero row r0
// of the R band are removed. Input must be a valid DCA and r0 a row with
// D(r0,2)-D(r0,1) = a/2 (mod a).
ParityCheckMatrix build_h_bar(const DifferenceArray& dca, int r0);

// The four supporting rows of column b, tagged by band.
ColumnSupport column_support(const ParityCheckMatrix& h, int b);

// Closed form of the Construction-1 support of column b = v*a + q.
ColumnSupport column_support_closed_form(const DifferenceArray& dm, int b);

// Row/column permutations taking Construction-1 H (alpha family) to the
// quasi-cyclic form: columns p*a+q -> ((q-p) mod a)*a + p; V1 row locals
// scaled by 2^-1, V2 row locals by (alpha+1)^-1. The block grid of the
// result is recovered from the permuted supports and verified circulant.
ParityCheckMatrix qc_transform(const ParityCheckMatrix& h, int alpha);

// Direct construction of the quasi-cyclic form: bands I / P^j / P^{j*2^-1}
// / P^{j*(alpha+1)^-1} for block column j.
ParityCheckMatrix build_h_star(int a, int alpha);

// Expand a block grid into a matrix (z x z blocks).
ParityCheckMatrix expand_block_grid(const BlockGrid& g, MatrixOrigin origin = {});

}  // namespace qcldpc
