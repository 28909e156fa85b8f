#include "plcsim/noise_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace plcsim {

namespace {

double gauss_pdf(double x, double variance) {
    return std::exp(-x * x / (2.0 * variance)) /
           std::sqrt(2.0 * std::numbers::pi * variance);
}

double draw_interval(StreamRng& rng, double mean, IntervalDistribution dist) {
    if (dist == IntervalDistribution::constant) return mean;
    double u = rng.uniform();
    while (u == 0.0) u = rng.uniform();
    return -mean * std::log(u);
}

}  // namespace

void MixedGaussianParams::validate() const {
    if (!(A >= 0.0 && A <= 1.0))
        throw std::invalid_argument("MixedGaussianParams.A: must be in [0, 1], got " +
                                    std::to_string(A));
    if (!(sigma_g2 > 0.0))
        throw std::invalid_argument("MixedGaussianParams.sigma_g2: must be > 0");
    if (!(sigma_i2 >= 0.0))
        throw std::invalid_argument("MixedGaussianParams.sigma_i2: must be >= 0");
}

double MixedGaussianParams::impulse_state_variance() const {
    if (A <= 0.0)
        throw std::invalid_argument(
            "MixedGaussianParams.impulse_state_variance: undefined for A == 0");
    return sigma_g2 + sigma_i2 / A;
}

void MiddletonAParams::validate() const {
    if (!(A > 0.0)) throw std::invalid_argument("MiddletonAParams.A: must be > 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("MiddletonAParams.gamma: must be > 0");
    if (!(sigma2 > 0.0)) throw std::invalid_argument("MiddletonAParams.sigma2: must be > 0");
    if (truncation_m < 0)
        throw std::invalid_argument("MiddletonAParams.truncation_m: must be >= 0");
}

std::vector<double> MiddletonAParams::weights() const {
    validate();
    // Poisson weights built up in log space; A can be large (e.g. 100).
    std::vector<double> w(static_cast<std::size_t>(truncation_m) + 1);
    double log_term = -A;  // log of e^-A A^0 / 0!
    double max_log = log_term;
    w[0] = log_term;
    for (int m = 1; m <= truncation_m; ++m) {
        log_term += std::log(A) - std::log(static_cast<double>(m));
        w[static_cast<std::size_t>(m)] = log_term;
        max_log = std::max(max_log, log_term);
    }
    double sum = 0.0;
    for (auto& v : w) {
        v = std::exp(v - max_log);
        sum += v;
    }
    for (auto& v : w) v /= sum;
    return w;
}

double MiddletonAParams::term_variance(int m) const {
    return sigma2 * (static_cast<double>(m) / A + gamma) / (1.0 + gamma);
}

double MiddletonAParams::mixture_variance() const {
    const auto w = weights();
    double var = 0.0;
    for (std::size_t m = 0; m < w.size(); ++m)
        var += w[m] * term_variance(static_cast<int>(m));
    return var;
}

void ImpulseTrainParams::validate() const {
    if (!(mean_duration > 0.0))
        throw std::invalid_argument("ImpulseTrainParams.mean_duration: must be > 0");
    if (!(mean_interarrival > 0.0))
        throw std::invalid_argument("ImpulseTrainParams.mean_interarrival: must be > 0");
    if (!(impulse_variance_per_sample >= 0.0))
        throw std::invalid_argument(
            "ImpulseTrainParams.impulse_variance_per_sample: must be >= 0");
}

void PeriodicNoiseParams::validate() const {
    if (!(period > 0.0)) throw std::invalid_argument("PeriodicNoiseParams.period: must be > 0");
    if (!(pulse_width > 0.0 && pulse_width <= period))
        throw std::invalid_argument(
            "PeriodicNoiseParams.pulse_width: must be in (0, period]");
    if (!(phase_offset >= 0.0 && phase_offset < period))
        throw std::invalid_argument(
            "PeriodicNoiseParams.phase_offset: must be in [0, period)");
}

LabeledSamples sample_mixed_gaussian(const MixedGaussianParams& p, std::size_t n,
                                     RandomStream stream) {
    p.validate();
    if (n == 0) throw std::invalid_argument("sample_mixed_gaussian: n must be >= 1");
    LabeledSamples out;
    out.samples.resize(n);
    out.impulse.resize(n);
    StreamRng rng(stream);
    const double sd_g = std::sqrt(p.sigma_g2);
    const double sd_i = p.A > 0.0 ? std::sqrt(p.impulse_state_variance()) : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool impulse = rng.uniform() < p.A;
        out.impulse[i] = impulse ? 1 : 0;
        out.samples[i] = (impulse ? sd_i : sd_g) * rng.gaussian();
    }
    return out;
}

double pdf_mixed_gaussian(const MixedGaussianParams& p, double x) {
    p.validate();
    double d = (1.0 - p.A) * gauss_pdf(x, p.sigma_g2);
    if (p.A > 0.0) d += p.A * gauss_pdf(x, p.impulse_state_variance());
    return d;
}

double pdf_middleton_a(const MiddletonAParams& p, double x) {
    const auto w = p.weights();
    double d = 0.0;
    for (std::size_t m = 0; m < w.size(); ++m)
        d += w[m] * gauss_pdf(x, p.term_variance(static_cast<int>(m)));
    return d;
}

MiddletonSamples sample_middleton_a(const MiddletonAParams& p, std::size_t n,
                                    RandomStream stream) {
    if (n == 0) throw std::invalid_argument("sample_middleton_a: n must be >= 1");
    const auto w = p.weights();
    std::vector<double> cdf(w.size());
    double acc = 0.0;
    for (std::size_t m = 0; m < w.size(); ++m) {
        acc += w[m];
        cdf[m] = acc;
    }
    cdf.back() = 1.0;
    std::vector<double> sd(w.size());
    for (std::size_t m = 0; m < w.size(); ++m)
        sd[m] = std::sqrt(p.term_variance(static_cast<int>(m)));

    MiddletonSamples out;
    out.samples.resize(n);
    out.term.resize(n);
    StreamRng rng(stream);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform();
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        const auto m = static_cast<std::size_t>(it - cdf.begin());
        out.term[i] = static_cast<int>(m);
        out.samples[i] = sd[m] * rng.gaussian();
    }
    return out;
}

ImpulseTrain sample_impulse_train(const ImpulseTrainParams& p, double duration,
                                  double sample_rate, RandomStream stream) {
    p.validate();
    if (!(sample_rate > 0.0))
        throw std::invalid_argument("sample_impulse_train: sample_rate must be > 0");
    if (!(duration >= p.mean_interarrival))
        throw std::invalid_argument(
            "sample_impulse_train: duration must cover at least one expected "
            "inter-arrival interval");

    const double min_pulse = 1.0 / sample_rate;
    ImpulseTrain train;
    train.sample_rate = sample_rate;
    const auto n_samples = static_cast<std::size_t>(std::llround(duration * sample_rate));
    train.waveform.assign(n_samples, 0.0);

    StreamRng rng(stream);
    const double sd = std::sqrt(p.impulse_variance_per_sample);

    double start = draw_interval(rng, p.mean_interarrival, p.interarrival_distribution);
    while (start < duration) {
        double d = std::max(draw_interval(rng, p.mean_duration, p.duration_distribution),
                            min_pulse);
        const double iat =
            draw_interval(rng, p.mean_interarrival, p.interarrival_distribution);
        double next_start;
        if (p.convention == InterarrivalConvention::gap) {
            next_start = start + d + iat;
        } else {
            // start-to-start spacing: clip the pulse so it never reaches the
            // next start
            const double step = std::max(iat, min_pulse);
            d = std::min(d, step);
            next_start = start + step;
        }
        d = std::min(d, duration - start);  // truncate at the trace end
        // emit only events that cover at least one sample instant
        const auto first = static_cast<std::size_t>(std::ceil(start * sample_rate - 1e-9));
        const double end_limit = (start + d) * sample_rate - 1e-9;
        if (d >= min_pulse * (1.0 - 1e-9) && static_cast<double>(first) < end_limit) {
            train.events.push_back({start, d});
            for (std::size_t i = first;
                 i < n_samples && static_cast<double>(i) < end_limit; ++i)
                train.waveform[i] = sd == 0.0 ? 0.0 : sd * rng.gaussian();
        }
        start = next_start;
    }
    return train;
}

rvec sample_periodic_train(const PeriodicNoiseParams& p, std::size_t n, double sample_rate,
                           std::uint64_t start_index) {
    p.validate();
    if (!(sample_rate > 0.0))
        throw std::invalid_argument("sample_periodic_train: sample_rate must be > 0");
    if (n == 0) throw std::invalid_argument("sample_periodic_train: n must be >= 1");
    // Work in sample units; tol absorbs fmod rounding at pulse boundaries.
    const double period_s = p.period * sample_rate;
    const double width_s = p.pulse_width * sample_rate;
    const double offset_s = p.phase_offset * sample_rate;
    const double tol = 1e-6;
    if (width_s < 1.0 - tol)
        throw std::invalid_argument(
            "sample_periodic_train: pulse_width narrower than one sample");
    if (period_s < 1.0 - tol)
        throw std::invalid_argument(
            "sample_periodic_train: period must cover at least one sample");
    rvec out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double u = std::fmod(static_cast<double>(start_index + i) - offset_s, period_s);
        if (u < 0.0) u += period_s;
        if (u >= period_s - tol) u = 0.0;
        if (u < width_s - tol) out[i] = p.amplitude;
    }
    return out;
}

}  // namespace plcsim
