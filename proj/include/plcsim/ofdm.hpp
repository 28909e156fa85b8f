#pragma once

#include <string>

#include "plcsim/random.hpp"
#include "plcsim/types.hpp"

namespace plcsim {

enum class Band { cenelec, fcc };

Band band_from_string(const std::string& name);
std::string band_name(Band band);

/// Transmission parameters of one frequency plan.
///
/// Both plans use a 256-point transform with 72 active carriers and a
/// 22-sample cyclic prefix (the prefix is what reconciles the frame duration
/// with fft_size * sample_duration: 278 * 2.5 us = 695 us for CENELEC).
/// The CENELEC carrier placement is wider than the nominal band edges allow
/// at 1.5625 kHz bin spacing — 72 contiguous bins simply do not fit between
/// 35.2 and 91.4 kHz — so the default range starts at the lower edge and
/// runs upward; override carrier_low/carrier_high for other placements.
struct BandConfig {
    std::string name;
    std::size_t fft_size = 0;
    std::size_t used_carriers = 0;
    std::size_t carrier_low = 0;   ///< first active bin (inclusive)
    std::size_t carrier_high = 0;  ///< last active bin (inclusive)
    double sample_duration = 0.0;  ///< s
    double frame_duration = 0.0;   ///< s, including cyclic prefix
    double sampling_frequency = 0.0;  ///< Hz
    std::size_t cyclic_prefix_len = 0;
    double nominal_max_bitrate = 0.0;  ///< bit/s, from the band plan
    double band_low_hz = 0.0;
    double band_high_hz = 0.0;

    std::size_t frame_samples() const { return fft_size + cyclic_prefix_len; }
    double band_width_hz() const { return band_high_hz - band_low_hz; }
    void validate() const;
};

/// Band constants; validated before return.
BandConfig band_config(Band band);

/// One transmitted frame: frequency-domain symbols (zero on unused bins) and
/// the time-domain samples with the cyclic prefix prepended.
struct OfdmFrame {
    cvec freq_symbols;  ///< length fft_size
    cvec time_samples;  ///< length fft_size + cyclic_prefix_len
};

/// Map used_carriers unit-average-power symbols onto the active bins, apply
/// the inverse transform, and prepend the cyclic prefix.
OfdmFrame modulate(const cvec& symbols, const BandConfig& cfg);

/// Strip the prefix, apply the forward transform, extract the active bins.
/// `received` must have exactly fft_size + cyclic_prefix_len samples.
cvec demodulate(const cvec& received, const BandConfig& cfg);

/// Transmitter-side sample randomization: a stream-determined cyclic
/// position shift followed by an independent random quarter-turn phase
/// rotation per sample. Quarter turns (multiples of 90 degrees) keep the
/// operation bit-exactly invertible and magnitude-preserving while still
/// decorrelating any periodic structure in added noise once the receiver
/// undoes the randomization.
cvec randomize(const cvec& samples, RandomStream stream);

/// Exact inverse of randomize for the same stream.
cvec derandomize(const cvec& samples, RandomStream stream);

/// used_carriers * bits_per_carrier / frame_duration.
double raw_bitrate(const BandConfig& cfg, int bits_per_carrier);

}  // namespace plcsim
