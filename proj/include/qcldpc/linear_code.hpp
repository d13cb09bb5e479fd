#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcldpc/bit_matrix.hpp"
#include "qcldpc/pcm.hpp"

namespace qcldpc {

// Systematic encoder for the null space of a parity-check matrix. Each
// generator row has a single 1 among the info positions, so messages pass
// through unchanged at those columns.
struct LinearEncoder {
  int m = 0;    // code length
  int dim = 0;  // kappa
  BitMatrix generator;             // dim x m
  std::vector<int> info_positions; // the dim columns carrying message bits
};

LinearEncoder systematic_encoder(const ParityCheckMatrix& h);

// codeword = msg * generator over GF(2); msg.size() must equal dim
std::vector<uint8_t> encode(const LinearEncoder& e, std::span<const uint8_t> msg);

// S(i) = sum_j H(i,j) v(j) mod 2
std::vector<uint8_t> syndrome(const ParityCheckMatrix& h, std::span<const uint8_t> v);

int syndrome_weight(const ParityCheckMatrix& h, std::span<const uint8_t> v);

}  // namespace qcldpc
