#include "qcldpc/linear_code.hpp"

#include <stdexcept>
#include <string>

namespace qcldpc {

LinearEncoder systematic_encoder(const ParityCheckMatrix& h) {
  LinearEncoder e;
  e.m = h.cols();
  BitMatrix dense = h.to_dense();
  std::vector<int> pivots = gf2_rref(dense);
  e.dim = h.cols() - static_cast<int>(pivots.size());

  std::vector<bool> is_pivot(h.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  for (int c = 0; c < h.cols(); ++c)
    if (!is_pivot[c]) e.info_positions.push_back(c);

  e.generator = BitMatrix(e.dim, e.m);
  for (int k = 0; k < e.dim; ++k) {
    int f = e.info_positions[k];
    e.generator.set(k, f, true);
    for (size_t i = 0; i < pivots.size(); ++i) {
      if (dense.get(static_cast<int>(i), f)) e.generator.set(k, pivots[i], true);
    }
  }
  return e;
}

std::vector<uint8_t> encode(const LinearEncoder& e, std::span<const uint8_t> msg) {
  if (static_cast<int>(msg.size()) != e.dim)
    throw std::invalid_argument("encode: message length " + std::to_string(msg.size()) +
                                " != dim " + std::to_string(e.dim));
  std::vector<uint64_t> acc(e.generator.words_per_row(), 0);
  for (int k = 0; k < e.dim; ++k) {
    if (msg[k] & 1) {
      const uint64_t* row = e.generator.row_words(k);
      for (int w = 0; w < e.generator.words_per_row(); ++w) acc[w] ^= row[w];
    }
  }
  std::vector<uint8_t> out(e.m);
  for (int c = 0; c < e.m; ++c) out[c] = (acc[c >> 6] >> (c & 63)) & 1;
  return out;
}

std::vector<uint8_t> syndrome(const ParityCheckMatrix& h, std::span<const uint8_t> v) {
  if (static_cast<int>(v.size()) != h.cols())
    throw std::invalid_argument("syndrome: vector length " + std::to_string(v.size()) +
                                " != cols " + std::to_string(h.cols()));
  std::vector<uint8_t> s(h.rows(), 0);
  for (int r = 0; r < h.rows(); ++r) {
    unsigned acc = 0;
    for (int b : h.row(r)) acc ^= v[b];
    s[r] = acc & 1;
  }
  return s;
}

int syndrome_weight(const ParityCheckMatrix& h, std::span<const uint8_t> v) {
  int w = 0;
  for (uint8_t s : syndrome(h, v)) w += s;
  return w;
}

}  // namespace qcldpc
