#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plcsim/capacity.hpp"
#include "plcsim/config.hpp"
#include "plcsim/csv.hpp"
#include "plcsim/impulse_stats.hpp"
#include "plcsim/mitigation.hpp"
#include "plcsim/ofdm.hpp"
#include "plcsim/types.hpp"

namespace plcsim {

/// One frame of channel noise: complex per-sample amplitudes plus the true
/// impulse mask (1 where an impulse state or pulse was active).
struct FrameNoise {
    cvec samples;
    std::vector<std::uint8_t> mask;
};

/// Per-frame noise generator bound to one experiment run.
///
/// Variances are scaled once at construction so the mean per-sample complex
/// noise power equals `target_total_variance` (when given); frame f then
/// draws from stream (seed, f), so frames are independent and reproducible.
/// Impulse-train noise keeps one continuous train across the whole run.
class NoiseSource {
   public:
    NoiseSource(const NoiseSpec& spec, const BandConfig& band,
                std::optional<double> target_total_variance, std::uint64_t seed,
                std::size_t total_frames);

    FrameNoise frame(std::size_t frame_index) const;

    /// Mean per-sample complex noise power after scaling.
    double total_variance() const { return total_variance_; }
    /// Gaussian floor after scaling (impulse contributions excluded).
    double background_variance() const { return background_variance_; }

   private:
    NoiseSpec spec_;
    BandConfig band_;
    std::uint64_t seed_ = 0;
    double scale_ = 1.0;
    double total_variance_ = 0.0;
    double background_variance_ = 0.0;
    std::vector<std::uint8_t> train_mask_;  // per-sample pulse membership, whole run
    std::vector<double> middleton_cdf_;
    std::vector<double> middleton_sd_;  // per-term deviation of each quadrature part
};

/// Long-run fraction of time covered by pulses for the given renewal
/// parameters (used for variance bookkeeping and threshold calibration).
double expected_duty_cycle(const ImpulseTrainParams& p);

// ---------------------------------------------------------------------------
// capacity driver

std::vector<CapacityReport> run_capacity(const ExperimentConfig& cfg);
CsvTable capacity_table(const ExperimentConfig& cfg,
                        const std::vector<CapacityReport>& reports);

// ---------------------------------------------------------------------------
// Monte Carlo BER driver

struct BerRow {
    double snr_db = 0.0;
    std::string method;  ///< none / null / clip
    double ber = 0.0;
    long long errors = 0;
    long long bits = 0;
    long long frames = 0;
    bool low_confidence = false;  ///< fewer than 100 observed errors
};

std::vector<BerRow> run_ber(const ExperimentConfig& cfg);
CsvTable ber_table(const std::vector<BerRow>& rows);

// ---------------------------------------------------------------------------
// periodic-noise spectrum driver

struct PeriodicSpectrum {
    rvec mean_energy;           ///< per bin, averaged over frames
    double comb_energy_share = 0.0;
    double max_bin_share = 0.0;
};

struct PeriodicResult {
    PeriodicSpectrum raw;
    std::optional<PeriodicSpectrum> randomized;
    std::vector<std::uint8_t> comb_bins;  ///< 1 on the nearest comb positions
    bool integer_period = false;          ///< period divides the transform length
};

PeriodicResult run_periodic(const ExperimentConfig& cfg);
CsvTable periodic_table(const PeriodicResult& result);

/// One frame's frequency-domain symbols as (bin, real, imag) rows.
CsvTable frame_spectrum_table(const OfdmFrame& frame);

// ---------------------------------------------------------------------------
// mitigation threshold sweep

struct SweepRow {
    std::string method;
    double threshold = 0.0;  ///< absolute amplitude (0 for passthrough)
    double snr_db_post = 0.0;
    double ber = 0.0;
    long long frames = 0;
    long long bits = 0;
};

/// Evaluate nulling and clipping across the configured threshold multiples
/// at the configured SNR point, plus a passthrough baseline, with paired
/// noise seeds across rows.
std::vector<SweepRow> threshold_sweep(const ExperimentConfig& cfg);
CsvTable sweep_table(const std::vector<SweepRow>& rows);

// ---------------------------------------------------------------------------
// focused experiments reused by the verification suites

/// Genie-aided nulling of a two-state noise channel: the receiver nulls the
/// exact impulse positions and the residual error variance per carrier,
/// averaged across the whole transform block, is compared against the
/// A * E_b,sample prediction (E_b,sample is the average transmitted signal
/// power per time sample). On the used bins alone the nulling additionally
/// appears as a coherent (1 - A) attenuation of the symbols, which an
/// equalizer would absorb; the spread component is what this measures.
struct GenieNullingResult {
    double measured_residual = 0.0;  ///< background-corrected per-carrier variance
    double predicted = 0.0;          ///< A * eb_sample
    double eb_sample = 0.0;
    std::size_t frames = 0;
};

GenieNullingResult genie_nulling_experiment(Band band, double A,
                                            double background_to_signal_ratio,
                                            std::size_t frames, std::uint64_t seed);

/// Feed memoryless two-state noise through the receiver transform and pool
/// the output bins: kurtosis test plus the per-bin vs time-domain variance
/// comparison.
struct GaussianizationExperiment {
    GaussianizationResult result;
    double per_bin_variance = 0.0;     ///< pooled empirical E|bin|^2
    double time_domain_variance = 0.0; ///< model total variance
};

GaussianizationExperiment gaussianization_experiment(Band band,
                                                     const MixedGaussianParams& params,
                                                     std::size_t frames,
                                                     std::uint64_t seed,
                                                     double threshold = 0.1);

}  // namespace plcsim
