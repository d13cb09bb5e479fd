#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qcldpc/pcm.hpp"

namespace qcldpc {

enum class Channel { Awgn, Bec };
enum class DecoderKind { Spa, Nms };

struct SimConfig {
  Channel channel = Channel::Awgn;
  std::vector<double> grid;  // Eb/No in dB, or erasure probabilities; strictly increasing
  DecoderKind decoder = DecoderKind::Spa;
  double nms_factor = 0.75;
  int max_iterations = 100;
  int target_frame_errors = 50;
  long long max_frames = 10'000'000;
  uint64_t seed = 0;
  int workers = 1;
};

struct SimPoint {
  double channel_param = 0.0;
  long long frames = 0;
  long long bit_errors = 0;
  long long frame_errors = 0;
  double ber = 0.0;
  double fer = 0.0;
  bool low_confidence = false;  // max_frames reached before target_frame_errors
};

// sigma = sqrt(1 / (2 * rate * 10^(ebno_db/10))) for unit-energy BPSK
double ebno_to_sigma(double ebno_db, double rate);

// Transmits the all-zero codeword per frame, corrupts it per channel,
// decodes, and tallies bit/frame errors until target_frame_errors or
// max_frames. Each frame's noise is a pure function of (seed, point index,
// frame index), so tallies are bit-identical for any worker count.
std::vector<SimPoint> simulate(const ParityCheckMatrix& h, const SimConfig& cfg);

// header "param,frames,bit_errors,frame_errors,ber,fer", then one row per
// point, decimals with 6 significant digits
void emit_csv(std::span<const SimPoint> points, std::ostream& out);

}  // namespace qcldpc
