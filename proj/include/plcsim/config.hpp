#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plcsim/mitigation.hpp"
#include "plcsim/noise_models.hpp"
#include "plcsim/ofdm.hpp"
#include "plcsim/types.hpp"

namespace plcsim {

enum class NoiseKind { mixed_gaussian, middleton_a, impulse_train, periodic };

std::string noise_kind_name(NoiseKind kind);

/// Exactly one of the four parameter blocks is active, selected by `kind`.
struct NoiseSpec {
    NoiseKind kind = NoiseKind::mixed_gaussian;
    MixedGaussianParams mixed;
    MiddletonAParams middleton;
    ImpulseTrainParams train;
    /// Optional Gaussian floor composed on top of an impulse train.
    double train_background_sigma_g2 = 0.0;
    PeriodicNoiseParams periodic;
};

struct SignalSpec {
    std::optional<double> eb_j;    ///< per-carrier symbol energy (J)
    std::optional<double> snr_db;  ///< per-carrier SNR, overrides eb_j
    std::vector<double> snr_sweep_db;
    int bits_per_carrier = 1;  ///< 1 = BPSK, 2 = QPSK
};

struct RandomizerSpec {
    bool enabled = false;
    std::uint64_t stream_seed = 0;
};

struct MitigationSpec {
    MitigationMethod method = MitigationMethod::passthrough;
    /// Detection threshold as a multiple of the impulse-free received RMS.
    double threshold_scale = 3.0;
    /// Threshold multiples evaluated by the mitigate subcommand.
    std::vector<double> sweep_scales;
};

struct CapacitySpec {
    std::optional<double> bandwidth_hz;  ///< defaults to the band-plan width
    std::vector<double> sweep_A;
};

/// One runnable scenario: band, noise model, signal level, optional
/// mitigation and randomizer, frame count and master seed.
struct ExperimentConfig {
    Band band = Band::cenelec;
    std::uint64_t seed = 0;
    int frames = 1;
    NoiseSpec noise;
    SignalSpec signal;
    std::optional<MitigationSpec> mitigation;
    RandomizerSpec randomizer;
    CapacitySpec capacity;
};

/// Parse and validate a config file. Throws ConfigError with a message
/// naming the offending field on any schema or invariant violation.
ExperimentConfig load_config(const std::string& path);

/// Same, from an in-memory JSON document.
ExperimentConfig parse_config(const std::string& json_text);

}  // namespace plcsim
