#pragma once

#include <cstddef>
#include <span>

#include "plcsim/noise_models.hpp"
#include "plcsim/types.hpp"

namespace plcsim {

/// Signal-to-noise summary for one scenario.
struct SnrReport {
    double snr_db = 0.0;                ///< 10 log10(E_b / (sigma_i2 + sigma_g2))
    double impulse_to_background = 0.0; ///< sigma_i2 / sigma_g2
};

/// Result of the post-DFT Gaussianity check. Real and imaginary parts of the
/// pooled bins are tested separately and jointly; all three must stay below
/// the threshold for the test to pass.
struct GaussianizationResult {
    double excess_kurtosis = 0.0;  ///< max |kurtosis| over {real, imag, joint}
    double kurtosis_real = 0.0;
    double kurtosis_imag = 0.0;
    double kurtosis_joint = 0.0;
    std::size_t sample_count = 0;  ///< pooled bin count
    double threshold = 0.0;
    bool passed = false;
};

/// Population excess kurtosis m4/m2^2 - 3 about the sample mean.
double excess_kurtosis(std::span<const double> xs);

/// Impulse rate estimate: mean pulse duration over mean inter-arrival gap
/// (pulse end to next pulse start), clamped to <= 1. Requires >= 2 events.
double estimate_A(const ImpulseTrain& train);

/// Mean pulse duration expressed in channel symbols, rounded to nearest.
int burst_length_symbols(double mean_duration, double sample_duration);

/// Average per-sample impulse power over whole frames: mean over frames of
/// (frame impulse energy / frame_length). Under the unitary DFT this equals
/// the average per-bin impulse variance, so it is directly comparable with
/// frequency-domain noise measurements. Trailing samples short of a full
/// frame are ignored.
double frame_impulse_variance(const rvec& waveform, std::size_t frame_length);

/// Excess-kurtosis test of pooled DFT output bins against the hypothesis
/// that the transform spread the time-domain noise into Gaussian per-bin
/// noise. Requires >= 10^4 pooled bins.
GaussianizationResult gaussianization_test(const std::vector<cvec>& frame_bins,
                                           double threshold = 0.1);

/// snr_db = 10 log10(eb / (sigma_i2 + sigma_g2)); ratio = sigma_i2 / sigma_g2.
SnrReport snr_report(double eb, double sigma_g2, double sigma_i2);

}  // namespace plcsim
