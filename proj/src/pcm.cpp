#include "qcldpc/pcm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qcldpc {

BitMatrix expand_cpm(const CirculantDescriptor& c) {
  if (c.shift < 0 || c.shift >= c.size)
    throw std::invalid_argument("expand_cpm: shift " + std::to_string(c.shift) +
                                " out of range for size " + std::to_string(c.size));
  BitMatrix m(c.size, c.size);
  for (int r = 0; r < c.size; ++r) m.set(r, mod_a(r - c.shift, c.size), true);
  return m;
}

ParityCheckMatrix::ParityCheckMatrix(int rows, int cols,
                                     std::vector<std::vector<int>> col_support,
                                     MatrixOrigin origin)
    : rows_(rows), cols_(cols), col_support_(std::move(col_support)), origin_(origin) {
  if (static_cast<int>(col_support_.size()) != cols)
    throw std::invalid_argument("ParityCheckMatrix: column support count mismatch");
  row_support_.resize(rows);
  for (int b = 0; b < cols; ++b) {
    int prev = -1;
    for (int r : col_support_[b]) {
      if (r < 0 || r >= rows)
        throw std::invalid_argument("ParityCheckMatrix: row index " + std::to_string(r) +
                                    " out of range in column " + std::to_string(b));
      if (r <= prev)
        throw std::invalid_argument("ParityCheckMatrix: column " + std::to_string(b) +
                                    " support not strictly increasing");
      prev = r;
      row_support_[r].push_back(b);
      ++ones_;
    }
  }
}

int ParityCheckMatrix::max_col_weight() const {
  size_t w = 0;
  for (const auto& c : col_support_) w = std::max(w, c.size());
  return static_cast<int>(w);
}

int ParityCheckMatrix::max_row_weight() const {
  size_t w = 0;
  for (const auto& r : row_support_) w = std::max(w, r.size());
  return static_cast<int>(w);
}

int ParityCheckMatrix::band_of(int r) const {
  for (int k = 0; k < 4; ++k)
    if (r < band_start_[k + 1]) return k;
  throw std::out_of_range("band_of: row " + std::to_string(r));
}

BitMatrix ParityCheckMatrix::to_dense() const {
  BitMatrix m(rows_, cols_);
  for (int b = 0; b < cols_; ++b)
    for (int r : col_support_[b]) m.set(r, b, true);
  return m;
}

namespace {

void require_valid(const DifferenceArray& d, ArrayKind kind, const char* who) {
  if (d.kind != kind)
    throw std::invalid_argument(std::string(who) + ": wrong array kind");
  ValidationReport rep = validate(d);
  if (!rep.ok())
    throw std::invalid_argument(std::string(who) + ": invalid difference array: " +
                                rep.violations.front());
}

}  // namespace

ParityCheckMatrix build_h(const DifferenceArray& dm) {
  require_valid(dm, ArrayKind::DM, "build_h");
  const int a = dm.a;
  std::vector<std::vector<int>> cols(static_cast<size_t>(a) * a);
  for (int v = 0; v < a; ++v) {
    for (int q = 0; q < a; ++q) {
      // Eq-style support: {v, q+a, (q+D(v,1))+2a, (q+D(v,2))+3a}
      cols[static_cast<size_t>(v) * a + q] = {
          v,
          a + q,
          2 * a + mod_a(q + dm.entry(v, 1), a),
          3 * a + mod_a(q + dm.entry(v, 2), a),
      };
    }
  }
  MatrixOrigin origin{MatrixForm::Construction1, a, dm.alpha, std::nullopt, dm.builtin_family};
  ParityCheckMatrix h(4 * a, a * a, std::move(cols), origin);
  h.set_sections({0, a, 2 * a, 3 * a, 4 * a});

  BlockGrid g;
  g.z = a;
  g.band_rows = 4;
  g.band_cols = a;
  g.cells.resize(4 * static_cast<size_t>(a));
  for (int v = 0; v < a; ++v) {
    g.at(0, v) = {BlockKind::RowBlock, v};
    g.at(1, v) = {BlockKind::Circulant, 0};
    g.at(2, v) = {BlockKind::Circulant, dm.entry(v, 1)};
    g.at(3, v) = {BlockKind::Circulant, dm.entry(v, 2)};
  }
  h.set_blocks(std::move(g));
  return h;
}

ParityCheckMatrix build_h_bar(const DifferenceArray& dca, int r0) {
  require_valid(dca, ArrayKind::DCA, "build_h_bar");
  const int a = dca.a;
  if (mod_a(dca.entry(r0, 2) - dca.entry(r0, 1), a) != dca.half())
    throw std::invalid_argument("build_h_bar: r0=" + std::to_string(r0) +
                                " does not satisfy D(r0,2)-D(r0,1) = a/2");
  std::vector<std::vector<int>> cols(static_cast<size_t>(a) * (a - 1));
  int j = 0;  // renumbered block column
  for (int v = 0; v < a; ++v) {
    if (v == r0) continue;
    for (int q = 0; q < a; ++q) {
      cols[static_cast<size_t>(j) * a + q] = {
          j,  // R-band row v, renumbered past the deleted row r0
          (a - 1) + q,
          (2 * a - 1) + mod_a(q + dca.entry(v, 1), a),
          (3 * a - 1) + mod_a(q + dca.entry(v, 2), a),
      };
    }
    ++j;
  }
  MatrixOrigin origin{MatrixForm::Construction2, a, std::nullopt, r0, dca.builtin_family};
  ParityCheckMatrix h(4 * a - 1, a * (a - 1), std::move(cols), origin);
  h.set_sections({0, a - 1, 2 * a - 1, 3 * a - 1, 4 * a - 1});
  return h;
}

ColumnSupport column_support(const ParityCheckMatrix& h, int b) {
  if (b < 0 || b >= h.cols())
    throw std::invalid_argument("column_support: column " + std::to_string(b) + " out of range");
  if (!h.has_sections())
    throw std::invalid_argument("column_support: matrix has no band sections");
  auto rows = h.col(b);
  if (rows.size() != 4)
    throw std::invalid_argument("column_support: column " + std::to_string(b) +
                                " has weight " + std::to_string(rows.size()) + ", expected 4");
  ColumnSupport s;
  s.b = b;
  s.x = rows[0];
  s.y = rows[1];
  s.z = rows[2];
  s.t = rows[3];
  for (int k = 0; k < 4; ++k) {
    if (h.band_of(rows[k]) != k)
      throw std::invalid_argument("column_support: column " + std::to_string(b) +
                                  " does not meet every band exactly once");
  }
  return s;
}

ColumnSupport column_support_closed_form(const DifferenceArray& dm, int b) {
  const int a = dm.a;
  const int v = b / a, q = b % a;
  return ColumnSupport{b, v, a + q, 2 * a + mod_a(q + dm.entry(v, 1), a),
                       3 * a + mod_a(q + dm.entry(v, 2), a)};
}

namespace {

// Recover the block descriptor of a matrix laid out as 4 bands of z rows by
// L blocks of z columns; every block must be zero or a single circulant.
BlockGrid recover_circulant_grid(const ParityCheckMatrix& h, int z) {
  const int bands = 4, block_cols = h.cols() / z;
  BlockGrid g;
  g.z = z;
  g.band_rows = bands;
  g.band_cols = block_cols;
  g.cells.assign(static_cast<size_t>(bands) * block_cols, BlockEntry{BlockKind::Zero, 0});
  // shift of block (band k, block j) from the supports of its first column;
  // then verify every column against it
  for (int k = 0; k < bands; ++k) {
    for (int j = 0; j < block_cols; ++j) {
      int shift = -1;
      for (int q = 0; q < z; ++q) {
        int count = 0, local = -1;
        for (int r : h.col(j * z + q)) {
          if (r >= k * z && r < (k + 1) * z) {
            ++count;
            local = r - k * z;
          }
        }
        if (count != 1)
          throw std::invalid_argument("qc_transform: block (" + std::to_string(k) + "," +
                                      std::to_string(j) + ") is not a circulant permutation");
        // P^s: column local q supports row local (q+s) mod z
        int s = mod_a(local - q, z);
        if (q == 0)
          shift = s;
        else if (s != shift)
          throw std::invalid_argument("qc_transform: block (" + std::to_string(k) + "," +
                                      std::to_string(j) + ") is not a circulant permutation");
      }
      g.at(k, j) = {BlockKind::Circulant, shift};
    }
  }
  return g;
}

}  // namespace

ParityCheckMatrix qc_transform(const ParityCheckMatrix& h, int alpha) {
  if (h.origin().form != MatrixForm::Construction1)
    throw std::invalid_argument("qc_transform: input must come from Construction 1");
  const int a = h.origin().a;
  if (a % 2 == 0) throw std::invalid_argument("qc_transform: a must be odd");
  const int inv2 = mod_inverse(2, a);
  const int inv_ap1 = mod_inverse(mod_a(alpha + 1, a), a);  // throws when absent

  std::vector<std::vector<int>> cols(static_cast<size_t>(h.cols()));
  for (int b = 0; b < h.cols(); ++b) {
    const int p = b / a, q = b % a;
    const int nb = mod_a(q - p, a) * a + p;  // f(pa+q) = ((q-p) mod a)a + p
    std::vector<int> rows;
    rows.reserve(4);
    for (int r : h.col(b)) {
      int nr;
      if (r < 2 * a)
        nr = r;
      else if (r < 3 * a)
        nr = 2 * a + mod_a(static_cast<long long>(r - 2 * a) * inv2, a);
      else
        nr = 3 * a + mod_a(static_cast<long long>(r - 3 * a) * inv_ap1, a);
      rows.push_back(nr);
    }
    std::sort(rows.begin(), rows.end());
    cols[nb] = std::move(rows);
  }
  MatrixOrigin origin{MatrixForm::QuasiCyclic, a, alpha, std::nullopt, h.origin().builtin_family};
  ParityCheckMatrix out(h.rows(), h.cols(), std::move(cols), origin);
  out.set_sections({0, a, 2 * a, 3 * a, 4 * a});
  out.set_blocks(recover_circulant_grid(out, a));
  return out;
}

ParityCheckMatrix build_h_star(int a, int alpha) {
  if (a < 3 || a % 2 == 0) throw std::invalid_argument("build_h_star: a must be odd and >= 3");
  alpha = mod_a(alpha, a);
  const int inv2 = mod_inverse(2, a);
  const int inv_ap1 = mod_inverse(mod_a(alpha + 1, a), a);
  BlockGrid g;
  g.z = a;
  g.band_rows = 4;
  g.band_cols = a;
  g.cells.resize(4 * static_cast<size_t>(a));
  for (int j = 0; j < a; ++j) {
    g.at(0, j) = {BlockKind::Circulant, 0};
    g.at(1, j) = {BlockKind::Circulant, j};
    g.at(2, j) = {BlockKind::Circulant, mod_a(static_cast<long long>(j) * inv2, a)};
    g.at(3, j) = {BlockKind::Circulant, mod_a(static_cast<long long>(j) * inv_ap1, a)};
  }
  return expand_block_grid(g, MatrixOrigin{MatrixForm::QuasiCyclic, a, alpha, std::nullopt, true});
}

ParityCheckMatrix expand_block_grid(const BlockGrid& g, MatrixOrigin origin) {
  const int z = g.z;
  std::vector<std::vector<int>> cols(static_cast<size_t>(g.band_cols) * z);
  for (int j = 0; j < g.band_cols; ++j) {
    for (int q = 0; q < z; ++q) {
      std::vector<int>& col = cols[static_cast<size_t>(j) * z + q];
      for (int k = 0; k < g.band_rows; ++k) {
        const BlockEntry& e = g.at(k, j);
        switch (e.kind) {
          case BlockKind::Zero:
            break;
          case BlockKind::Circulant:
            col.push_back(k * z + mod_a(q + e.value, z));
            break;
          case BlockKind::RowBlock:
            col.push_back(k * z + e.value);
            break;
        }
      }
    }
  }
  ParityCheckMatrix h(g.band_rows * z, g.band_cols * z, std::move(cols), origin);
  if (g.band_rows == 4) h.set_sections({0, z, 2 * z, 3 * z, 4 * z});
  h.set_blocks(g);
  return h;
}

}  // namespace qcldpc
