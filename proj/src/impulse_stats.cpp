#include "plcsim/impulse_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plcsim {

double excess_kurtosis(std::span<const double> xs) {
    if (xs.size() < 4) throw std::invalid_argument("excess_kurtosis: need >= 4 samples");
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double m2 = 0.0;
    double m4 = 0.0;
    for (double x : xs) {
        const double d = x - mean;
        const double d2 = d * d;
        m2 += d2;
        m4 += d2 * d2;
    }
    m2 /= static_cast<double>(xs.size());
    m4 /= static_cast<double>(xs.size());
    if (m2 == 0.0) throw std::invalid_argument("excess_kurtosis: degenerate sample");
    return m4 / (m2 * m2) - 3.0;
}

double estimate_A(const ImpulseTrain& train) {
    if (train.events.size() < 2)
        throw std::invalid_argument("estimate_A: need at least 2 events");
    double sum_duration = 0.0;
    for (const auto& e : train.events) sum_duration += e.duration;
    const double mean_duration = sum_duration / static_cast<double>(train.events.size());
    double sum_gap = 0.0;
    for (std::size_t i = 1; i < train.events.size(); ++i) {
        const auto& prev = train.events[i - 1];
        sum_gap += train.events[i].start - (prev.start + prev.duration);
    }
    const double mean_gap = sum_gap / static_cast<double>(train.events.size() - 1);
    if (mean_gap <= 0.0) return 1.0;
    return std::min(mean_duration / mean_gap, 1.0);
}

int burst_length_symbols(double mean_duration, double sample_duration) {
    if (!(mean_duration > 0.0))
        throw std::invalid_argument("burst_length_symbols: mean_duration must be > 0");
    if (!(sample_duration > 0.0))
        throw std::invalid_argument("burst_length_symbols: sample_duration must be > 0");
    return static_cast<int>(std::llround(mean_duration / sample_duration));
}

double frame_impulse_variance(const rvec& waveform, std::size_t frame_length) {
    if (frame_length == 0)
        throw std::invalid_argument("frame_impulse_variance: frame_length must be >= 1");
    if (waveform.size() < frame_length)
        throw std::invalid_argument(
            "frame_impulse_variance: waveform shorter than one frame");
    const std::size_t frames = waveform.size() / frame_length;
    double acc = 0.0;
    for (std::size_t f = 0; f < frames; ++f) {
        double energy = 0.0;
        for (std::size_t i = 0; i < frame_length; ++i) {
            const double v = waveform[f * frame_length + i];
            energy += v * v;
        }
        acc += energy / static_cast<double>(frame_length);
    }
    return acc / static_cast<double>(frames);
}

GaussianizationResult gaussianization_test(const std::vector<cvec>& frame_bins,
                                           double threshold) {
    std::size_t total = 0;
    for (const auto& f : frame_bins) total += f.size();
    if (total < 10000)
        throw std::invalid_argument(
            "gaussianization_test: need at least 10^4 pooled bins");
    rvec re;
    rvec im;
    rvec joint;
    re.reserve(total);
    im.reserve(total);
    joint.reserve(2 * total);
    for (const auto& f : frame_bins) {
        for (const auto& b : f) {
            re.push_back(b.real());
            im.push_back(b.imag());
            joint.push_back(b.real());
            joint.push_back(b.imag());
        }
    }
    GaussianizationResult r;
    r.kurtosis_real = excess_kurtosis(re);
    r.kurtosis_imag = excess_kurtosis(im);
    r.kurtosis_joint = excess_kurtosis(joint);
    r.excess_kurtosis = std::max({std::abs(r.kurtosis_real), std::abs(r.kurtosis_imag),
                                  std::abs(r.kurtosis_joint)});
    r.sample_count = total;
    r.threshold = threshold;
    r.passed = r.excess_kurtosis < threshold;
    return r;
}

SnrReport snr_report(double eb, double sigma_g2, double sigma_i2) {
    if (!(eb >= 0.0)) throw std::invalid_argument("snr_report: eb must be >= 0");
    if (!(sigma_g2 > 0.0)) throw std::invalid_argument("snr_report: sigma_g2 must be > 0");
    if (!(sigma_i2 >= 0.0)) throw std::invalid_argument("snr_report: sigma_i2 must be >= 0");
    SnrReport r;
    r.snr_db = 10.0 * std::log10(eb / (sigma_i2 + sigma_g2));
    r.impulse_to_background = sigma_i2 / sigma_g2;
    return r;
}

}  // namespace plcsim
