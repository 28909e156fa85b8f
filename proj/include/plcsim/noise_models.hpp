#pragma once

#include <cstdint>
#include <vector>

#include "plcsim/random.hpp"
#include "plcsim/types.hpp"

namespace plcsim {

/// Two-state memoryless noise: background Gaussian with probability 1 - A,
/// impulse state with probability A and variance sigma_g2 + sigma_i2 / A.
/// The mean power across states is sigma_g2 + sigma_i2.
struct MixedGaussianParams {
    double A = 0.0;         ///< impulse probability, in [0, 1]
    double sigma_g2 = 0.0;  ///< background-noise variance (J)
    double sigma_i2 = 0.0;  ///< impulse-noise variance contribution (J)

    void validate() const;
    /// sigma_g2 + sigma_i2 / A; only defined for A > 0.
    double impulse_state_variance() const;
    double total_variance() const { return sigma_g2 + sigma_i2; }
};

/// Poisson-weighted Gaussian mixture with impulse index A and
/// Gaussian-to-impulsive power ratio gamma = sigma_g2 / sigma_i2.
/// Term m has weight e^-A A^m / m! (renormalized over m = 0..truncation_m)
/// and variance sigma2 * (m / A + gamma) / (1 + gamma).
struct MiddletonAParams {
    double A = 0.0;       ///< impulse index, > 0
    double gamma = 0.0;   ///< background-to-impulsive power ratio, > 0
    double sigma2 = 0.0;  ///< total noise variance (J), > 0
    int truncation_m = 20;

    void validate() const;
    std::vector<double> weights() const;
    double term_variance(int m) const;
    /// sum_m w_m sigma_m^2 of the truncated, renormalized mixture.
    double mixture_variance() const;
};

enum class IntervalDistribution : std::uint8_t { exponential, constant };

/// Convention for the inter-arrival draw of the impulse-train renewal
/// process: `gap` measures from pulse end to next pulse start (duty cycle
/// duration/(duration+interarrival)), `start_to_start` from start to start
/// (pulses are clipped if a draw would overlap the next start).
enum class InterarrivalConvention : std::uint8_t { gap, start_to_start };

struct ImpulseTrainParams {
    double mean_duration = 0.0;               ///< mean pulse duration (s)
    double mean_interarrival = 0.0;           ///< mean inter-arrival time (s)
    double impulse_variance_per_sample = 0.0; ///< per-sample power inside a pulse (J)
    IntervalDistribution duration_distribution = IntervalDistribution::exponential;
    IntervalDistribution interarrival_distribution = IntervalDistribution::exponential;
    InterarrivalConvention convention = InterarrivalConvention::gap;

    void validate() const;
};

struct ImpulseEvent {
    double start = 0.0;     ///< s
    double duration = 0.0;  ///< s
};

/// Burst-structured impulse noise: the event list carries the memory, the
/// waveform holds the sampled amplitudes. Samples outside every event are
/// exactly zero; background noise is composed separately.
struct ImpulseTrain {
    std::vector<ImpulseEvent> events;
    rvec waveform;
    double sample_rate = 0.0;  ///< Hz
};

/// Deterministic periodic pulse train.
struct PeriodicNoiseParams {
    double period = 0.0;        ///< s
    double pulse_width = 0.0;   ///< s, in (0, period]
    double amplitude = 0.0;
    double phase_offset = 0.0;  ///< s, in [0, period)

    void validate() const;
};

struct LabeledSamples {
    rvec samples;
    std::vector<std::uint8_t> impulse;  ///< 1 where the impulse state was active
};

/// Draw n samples of the two-state model; the labels record the true state
/// per sample for channel-state-information experiments.
LabeledSamples sample_mixed_gaussian(const MixedGaussianParams& p, std::size_t n,
                                     RandomStream stream);

/// Density (1-A) N(x; 0, sigma_g2) + A N(x; 0, sigma_g2 + sigma_i2/A).
double pdf_mixed_gaussian(const MixedGaussianParams& p, double x);

/// Truncated, renormalized Poisson-weighted Gaussian mixture density.
double pdf_middleton_a(const MiddletonAParams& p, double x);

struct MiddletonSamples {
    rvec samples;
    std::vector<int> term;  ///< mixture index m drawn per sample
};

MiddletonSamples sample_middleton_a(const MiddletonAParams& p, std::size_t n,
                                    RandomStream stream);

/// Renewal-process impulse train over [0, duration): alternately draw an
/// inter-arrival interval and a pulse duration, fill each pulse with
/// zero-mean Gaussian samples of the configured per-sample variance, and
/// truncate the last event at the trace end. Every event covers at least one
/// sample at the given rate.
ImpulseTrain sample_impulse_train(const ImpulseTrainParams& p, double duration,
                                  double sample_rate, RandomStream stream);

/// Deterministic train: `amplitude` during each pulse window
/// [phase_offset + k*period, + pulse_width), zero otherwise. Rejects pulses
/// narrower than one sample. `start_index` offsets the sampling grid so
/// consecutive frames can be cut from one continuous train.
rvec sample_periodic_train(const PeriodicNoiseParams& p, std::size_t n, double sample_rate,
                           std::uint64_t start_index = 0);

}  // namespace plcsim
