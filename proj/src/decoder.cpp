#include "qcldpc/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcldpc {

std::vector<double> llr_awgn(std::span<const double> received, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("llr_awgn: sigma must be > 0");
  std::vector<double> llr(received.size());
  const double scale = 2.0 / (sigma * sigma);
  for (size_t j = 0; j < received.size(); ++j) llr[j] = scale * received[j];
  return llr;
}

std::vector<double> llr_bec(std::span<const BecSymbol> symbols) {
  std::vector<double> llr(symbols.size());
  for (size_t j = 0; j < symbols.size(); ++j) {
    switch (symbols[j]) {
      case BecSymbol::Zero: llr[j] = kLlrMax; break;
      case BecSymbol::One: llr[j] = -kLlrMax; break;
      case BecSymbol::Erased: llr[j] = 0.0; break;
    }
  }
  return llr;
}

BpDecoder::BpDecoder(const ParityCheckMatrix& h) : h_(h) {
  const int x = h.rows();
  check_edge_start_.assign(x + 1, 0);
  for (int r = 0; r < x; ++r)
    check_edge_start_[r + 1] = check_edge_start_[r] + static_cast<int>(h.row(r).size());
  const int edges = check_edge_start_[x];
  edge_var_.resize(edges);
  var_edges_.resize(h.cols());
  int e = 0;
  for (int r = 0; r < x; ++r) {
    for (int b : h.row(r)) {
      edge_var_[e] = b;
      var_edges_[b].push_back(e);
      ++e;
    }
  }
  v2c_.resize(edges);
  c2v_.resize(edges);
  posterior_.resize(h.cols());
  const int max_deg = h.max_row_weight();
  fwd_.resize(std::max(1, max_deg));
  bwd_.resize(std::max(1, max_deg));
}

namespace {

inline double clamp_llr(double v) { return std::clamp(v, -kLlrMax, kLlrMax); }

}  // namespace

template <bool kMinSum>
DecodeResult BpDecoder::run(std::span<const double> llr, int max_iter, double factor,
                            std::span<const int> check_order) {
  if (static_cast<int>(llr.size()) != h_.cols())
    throw std::invalid_argument("decode: llr length " + std::to_string(llr.size()) +
                                " != cols " + std::to_string(h_.cols()));
  if (max_iter < 1) throw std::invalid_argument("decode: max_iter must be >= 1");
  if (!check_order.empty() && static_cast<int>(check_order.size()) != h_.rows())
    throw std::invalid_argument("decode: check_order must list every check once");

  const int m = h_.cols(), x = h_.rows();
  DecodeResult res;
  res.bits.assign(m, 0);

  for (int j = 0; j < m; ++j) {
    const double chan = clamp_llr(llr[j]);
    posterior_[j] = chan;
    for (int e : var_edges_[j]) v2c_[e] = chan;
  }

  for (int it = 1; it <= max_iter; ++it) {
    // check-node update; all inputs are the previous half-iteration's
    // messages, so the processing order cannot matter
    for (int ci = 0; ci < x; ++ci) {
      const int c = check_order.empty() ? ci : check_order[ci];
      const int begin = check_edge_start_[c], end = check_edge_start_[c + 1];
      const int deg = end - begin;
      if (deg == 0) continue;
      if (deg == 1) {
        c2v_[begin] = kMinSum ? factor * kLlrMax : kLlrMax;
        continue;
      }
      if constexpr (kMinSum) {
        int negatives = 0;
        double min1 = kLlrMax + 1, min2 = kLlrMax + 1;
        int argmin = begin;
        for (int e = begin; e < end; ++e) {
          const double v = v2c_[e];
          if (v < 0) ++negatives;
          const double mag = std::fabs(v);
          if (mag < min1) {
            min2 = min1;
            min1 = mag;
            argmin = e;
          } else if (mag < min2) {
            min2 = mag;
          }
        }
        for (int e = begin; e < end; ++e) {
          const int neg_excl = negatives - (v2c_[e] < 0 ? 1 : 0);
          const double mag = (e == argmin) ? min2 : min1;
          c2v_[e] = factor * ((neg_excl & 1) ? -mag : mag);
        }
      } else {
        // forward/backward running products of tanh(v/2); exact zeros
        // (erasures) propagate as exact zeros
        for (int k = 0; k < deg; ++k) fwd_[k] = std::tanh(0.5 * v2c_[begin + k]);
        bwd_[deg - 1] = fwd_[deg - 1];
        for (int k = deg - 2; k >= 0; --k) bwd_[k] = fwd_[k] * bwd_[k + 1];
        double prefix = 1.0;
        for (int k = 0; k < deg; ++k) {
          const double excl = (k + 1 < deg) ? prefix * bwd_[k + 1] : prefix;
          prefix *= fwd_[k];
          const double clamped = std::clamp(excl, -1.0 + 1e-15, 1.0 - 1e-15);
          c2v_[begin + k] = clamp_llr(2.0 * std::atanh(clamped));
        }
      }
    }

    // variable-node update
    for (int j = 0; j < m; ++j) {
      double sum = clamp_llr(llr[j]);
      for (int e : var_edges_[j]) sum += c2v_[e];
      posterior_[j] = sum;
      for (int e : var_edges_[j]) v2c_[e] = clamp_llr(sum - c2v_[e]);
    }

    int unresolved = 0;
    for (int j = 0; j < m; ++j) {
      res.bits[j] = posterior_[j] < 0.0 ? 1 : 0;
      if (posterior_[j] == 0.0) ++unresolved;
    }
    int synd = 0;
    for (int c = 0; c < x; ++c) {
      unsigned acc = 0;
      for (int e = check_edge_start_[c]; e < check_edge_start_[c + 1]; ++e)
        acc ^= res.bits[edge_var_[e]];
      synd += acc & 1;
    }
    res.iterations = it;
    res.final_syndrome_weight = synd;
    res.unresolved = unresolved;
    if (synd == 0 && unresolved == 0) {
      res.success = true;
      return res;
    }
  }
  res.success = false;
  return res;
}

DecodeResult BpDecoder::decode_spa(std::span<const double> llr, int max_iter) {
  return run<false>(llr, max_iter, 1.0, {});
}

DecodeResult BpDecoder::decode_nms(std::span<const double> llr, int max_iter, double factor) {
  if (!(factor > 0.0) || factor > 1.0)
    throw std::invalid_argument("decode_nms: factor must be in (0,1]");
  return run<true>(llr, max_iter, factor, {});
}

DecodeResult BpDecoder::decode_spa_ordered(std::span<const double> llr, int max_iter,
                                           std::span<const int> check_order) {
  return run<false>(llr, max_iter, 1.0, check_order);
}

DecodeResult decode_spa(const ParityCheckMatrix& h, std::span<const double> llr, int max_iter) {
  BpDecoder d(h);
  return d.decode_spa(llr, max_iter);
}

DecodeResult decode_nms(const ParityCheckMatrix& h, std::span<const double> llr, int max_iter,
                        double factor) {
  BpDecoder d(h);
  return d.decode_nms(llr, max_iter, factor);
}

}  // namespace qcldpc
