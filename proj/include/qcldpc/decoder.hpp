#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcldpc/pcm.hpp"

namespace qcldpc {

// LLR sign convention: positive means bit 0. Erasures are exact zeros.
inline constexpr double kLlrMax = 30.0;

struct DecodeResult {
  std::vector<uint8_t> bits;  // hard decisions; an exactly-zero posterior decides 0
  bool success = false;       // zero syndrome and no unresolved (zero) posteriors
  int iterations = 0;
  int final_syndrome_weight = 0;
  int unresolved = 0;  // posteriors exactly zero at exit
};

// llr_j = 2 y_j / sigma^2 under the mapping bit 0 -> +1, bit 1 -> -1
std::vector<double> llr_awgn(std::span<const double> received, double sigma);

enum class BecSymbol : uint8_t { Zero, One, Erased };

// zero -> +kLlrMax, one -> -kLlrMax, erased -> 0
std::vector<double> llr_bec(std::span<const BecSymbol> symbols);

// Flooding-schedule belief propagation. An instance owns per-codeword
// scratch buffers: share the matrix across threads, not the decoder.
class BpDecoder {
 public:
  explicit BpDecoder(const ParityCheckMatrix& h);

  // Sum-product check update (tanh rule).
  DecodeResult decode_spa(std::span<const double> llr, int max_iter);
  // Min-sum check update scaled by `factor`.
  DecodeResult decode_nms(std::span<const double> llr, int max_iter, double factor);

  // The flooding schedule makes check processing order irrelevant; this
  // entry point exists to make that property testable.
  DecodeResult decode_spa_ordered(std::span<const double> llr, int max_iter,
                                  std::span<const int> check_order);

 private:
  template <bool kMinSum>
  DecodeResult run(std::span<const double> llr, int max_iter, double factor,
                   std::span<const int> check_order);

  const ParityCheckMatrix& h_;
  // edges grouped by check; per-variable edge lists index into the pool
  std::vector<int> check_edge_start_;  // size rows+1
  std::vector<int> edge_var_;          // variable of each edge
  std::vector<std::vector<int>> var_edges_;
  std::vector<double> v2c_, c2v_, posterior_, fwd_, bwd_;
};

// One-shot conveniences matching the class methods.
DecodeResult decode_spa(const ParityCheckMatrix& h, std::span<const double> llr, int max_iter);
DecodeResult decode_nms(const ParityCheckMatrix& h, std::span<const double> llr, int max_iter,
                        double factor);

}  // namespace qcldpc
