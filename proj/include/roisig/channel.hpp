#pragma once

#include <vector>

#include "roisig/bitframe.hpp"
#include "roisig/rng.hpp"

namespace roisig {

// AWGN channel with normalized antipodal amplitudes. snr_db is Es/N0;
// sigma is the per-dimension noise standard deviation.
struct ChannelParams {
    double snr_db = 0.0;
    double sigma = 0.0;

    static ChannelParams from_snr_db(double snr_db);
};

// Per-position log-likelihood ratios; positive means bit 0 is more likely.
struct SoftFrame {
    std::vector<double> llr;

    std::size_t size() const { return llr.size(); }
};

// On/off intensity abstracted to antipodal levels: bit 1 -> +1, bit 0 -> -1.
std::vector<double> modulate(const BitFrame& word);

std::vector<double> add_awgn(const std::vector<double>& signal,
                             const ChannelParams& params, Rng& rng);

// Soft front end: llr_i = -2 y_i / sigma^2.
SoftFrame llr_soft(const std::vector<double>& received, const ChannelParams& params);

// Hard front end: detect each sample at 0, then assign the fixed-magnitude
// LLR log((1-p)/p) with crossover p = Q(1/sigma). p is clamped into
// [1e-12, 0.5] so extreme SNRs stay finite.
SoftFrame llr_hard(const std::vector<double>& received, const ChannelParams& params);

// Gaussian tail probability P(N(0,1) > x).
double q_function(double x);

}  // namespace roisig
