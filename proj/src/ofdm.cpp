#include "plcsim/ofdm.hpp"

#include <cmath>
#include <stdexcept>

#include "plcsim/dft.hpp"

namespace plcsim {

Band band_from_string(const std::string& name) {
    if (name == "CENELEC" || name == "cenelec") return Band::cenelec;
    if (name == "FCC" || name == "fcc") return Band::fcc;
    throw std::invalid_argument("band: unknown band '" + name +
                                "' (expected CENELEC or FCC)");
}

std::string band_name(Band band) {
    return band == Band::cenelec ? "CENELEC" : "FCC";
}

void BandConfig::validate() const {
    if (fft_size == 0) throw std::invalid_argument("BandConfig.fft_size: must be >= 1");
    if (used_carriers == 0 || used_carriers > fft_size)
        throw std::invalid_argument("BandConfig.used_carriers: must be in [1, fft_size]");
    if (carrier_high >= fft_size || carrier_low > carrier_high ||
        carrier_high - carrier_low + 1 != used_carriers)
        throw std::invalid_argument(
            "BandConfig.carrier range: must span exactly used_carriers bins inside "
            "the transform");
    if (!(sample_duration > 0.0))
        throw std::invalid_argument("BandConfig.sample_duration: must be > 0");
    const double rebuilt =
        static_cast<double>(fft_size + cyclic_prefix_len) * sample_duration;
    if (std::abs(rebuilt - frame_duration) > sample_duration)
        throw std::invalid_argument(
            "BandConfig.frame_duration: inconsistent with fft_size, prefix and "
            "sample_duration");
    if (std::abs(sampling_frequency * sample_duration - 1.0) > 1e-3)
        throw std::invalid_argument(
            "BandConfig.sampling_frequency: must equal 1/sample_duration within 0.1%");
}

BandConfig band_config(Band band) {
    BandConfig cfg;
    cfg.fft_size = 256;
    cfg.used_carriers = 72;
    cfg.cyclic_prefix_len = 22;
    if (band == Band::cenelec) {
        cfg.name = "CENELEC";
        cfg.sample_duration = 2.5e-6;
        cfg.frame_duration = 695e-6;
        cfg.sampling_frequency = 400e3;
        cfg.nominal_max_bitrate = 33.4e3;
        cfg.band_low_hz = 35.2e3;
        cfg.band_high_hz = 91.4e3;
        cfg.carrier_low = 23;  // 35.9 kHz at 1.5625 kHz spacing; see header note
        cfg.carrier_high = 94;
    } else {
        cfg.name = "FCC";
        cfg.sample_duration = 0.833e-6;
        cfg.frame_duration = 231.7e-6;
        cfg.sampling_frequency = 1.2e6;
        cfg.nominal_max_bitrate = 303e3;
        cfg.band_low_hz = 152.3e3;
        cfg.band_high_hz = 489.8e3;
        cfg.carrier_low = 33;  // 154.7..487.5 kHz at 4.6875 kHz spacing
        cfg.carrier_high = 104;
    }
    cfg.validate();
    return cfg;
}

OfdmFrame modulate(const cvec& symbols, const BandConfig& cfg) {
    if (symbols.size() != cfg.used_carriers)
        throw std::invalid_argument("modulate: expected exactly " +
                                    std::to_string(cfg.used_carriers) + " symbols, got " +
                                    std::to_string(symbols.size()));
    OfdmFrame frame;
    frame.freq_symbols.assign(cfg.fft_size, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < symbols.size(); ++i)
        frame.freq_symbols[cfg.carrier_low + i] = symbols[i];
    const cvec body = idft(frame.freq_symbols);
    frame.time_samples.reserve(cfg.frame_samples());
    frame.time_samples.assign(body.end() - static_cast<long>(cfg.cyclic_prefix_len),
                              body.end());
    frame.time_samples.insert(frame.time_samples.end(), body.begin(), body.end());
    return frame;
}

cvec demodulate(const cvec& received, const BandConfig& cfg) {
    if (received.size() != cfg.frame_samples())
        throw std::invalid_argument("demodulate: expected " +
                                    std::to_string(cfg.frame_samples()) +
                                    " samples, got " + std::to_string(received.size()));
    const cvec body(received.begin() + static_cast<long>(cfg.cyclic_prefix_len),
                    received.end());
    const cvec bins = dft(body);
    return cvec(bins.begin() + static_cast<long>(cfg.carrier_low),
                bins.begin() + static_cast<long>(cfg.carrier_high) + 1);
}

namespace {

// Multiply by j^q without rounding: component swaps and negations only.
cplx quarter_rotate(cplx v, unsigned q) {
    switch (q & 3u) {
        case 0: return v;
        case 1: return cplx(-v.imag(), v.real());
        case 2: return cplx(-v.real(), -v.imag());
        default: return cplx(v.imag(), -v.real());
    }
}

struct RandomizerPlan {
    std::size_t shift;
    std::vector<unsigned> quarters;
};

RandomizerPlan randomizer_plan(std::size_t n, RandomStream stream) {
    StreamRng rng(stream);
    RandomizerPlan plan;
    plan.shift = rng.uniform_below(n);
    plan.quarters.resize(n);
    for (auto& q : plan.quarters) q = static_cast<unsigned>(rng.next_u64() & 3u);
    return plan;
}

}  // namespace

cvec randomize(const cvec& samples, RandomStream stream) {
    if (samples.empty()) throw std::invalid_argument("randomize: input must be non-empty");
    const std::size_t n = samples.size();
    const auto plan = randomizer_plan(n, stream);
    cvec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = (i + n - plan.shift) % n;
        out[i] = quarter_rotate(samples[src], plan.quarters[i]);
    }
    return out;
}

cvec derandomize(const cvec& samples, RandomStream stream) {
    if (samples.empty())
        throw std::invalid_argument("derandomize: input must be non-empty");
    const std::size_t n = samples.size();
    const auto plan = randomizer_plan(n, stream);
    cvec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = (i + n - plan.shift) % n;
        out[src] = quarter_rotate(samples[i], 4u - (plan.quarters[i] & 3u));
    }
    return out;
}

double raw_bitrate(const BandConfig& cfg, int bits_per_carrier) {
    if (bits_per_carrier < 1)
        throw std::invalid_argument("raw_bitrate: bits_per_carrier must be >= 1");
    return static_cast<double>(cfg.used_carriers) *
           static_cast<double>(bits_per_carrier) / cfg.frame_duration;
}

}  // namespace plcsim
