#include "plcsim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "plcsim/dft.hpp"

namespace plcsim {

namespace {

// substream tags separating the independent random uses within a frame
constexpr std::uint64_t kBitsTag = 1;
constexpr std::uint64_t kNoiseTag = 2;
constexpr std::uint64_t kTrainTag = 3;
constexpr std::uint64_t kRandomizerTag = 4;

double signal_power_per_sample(const BandConfig& band) {
    return static_cast<double>(band.used_carriers) /
           static_cast<double>(band.fft_size);
}

double expected_min_interval(double mean_a, IntervalDistribution da, double mean_b,
                             IntervalDistribution db) {
    const bool ea = da == IntervalDistribution::exponential;
    const bool eb = db == IntervalDistribution::exponential;
    if (ea && eb) return 1.0 / (1.0 / mean_a + 1.0 / mean_b);
    if (!ea && !eb) return std::min(mean_a, mean_b);
    // one constant (c), one exponential (mu): E[min] = mu (1 - exp(-c/mu))
    const double c = ea ? mean_b : mean_a;
    const double mu = ea ? mean_a : mean_b;
    return mu * (1.0 - std::exp(-c / mu));
}

double model_total_variance(const NoiseSpec& spec) {
    switch (spec.kind) {
        case NoiseKind::mixed_gaussian: return spec.mixed.total_variance();
        case NoiseKind::middleton_a: return spec.middleton.mixture_variance();
        case NoiseKind::impulse_train:
            return expected_duty_cycle(spec.train) *
                       spec.train.impulse_variance_per_sample +
                   spec.train_background_sigma_g2;
        default:
            return spec.periodic.amplitude * spec.periodic.amplitude *
                   (spec.periodic.pulse_width / spec.periodic.period);
    }
}

double model_background_variance(const NoiseSpec& spec) {
    switch (spec.kind) {
        case NoiseKind::mixed_gaussian: return spec.mixed.sigma_g2;
        case NoiseKind::middleton_a: return spec.middleton.term_variance(0);
        case NoiseKind::impulse_train: return spec.train_background_sigma_g2;
        default: return 0.0;
    }
}

}  // namespace

double expected_duty_cycle(const ImpulseTrainParams& p) {
    p.validate();
    if (p.convention == InterarrivalConvention::gap)
        return p.mean_duration / (p.mean_duration + p.mean_interarrival);
    return expected_min_interval(p.mean_duration, p.duration_distribution,
                                 p.mean_interarrival, p.interarrival_distribution) /
           p.mean_interarrival;
}

NoiseSource::NoiseSource(const NoiseSpec& spec, const BandConfig& band,
                         std::optional<double> target_total_variance,
                         std::uint64_t seed, std::size_t total_frames)
    : spec_(spec), band_(band), seed_(seed) {
    const double raw_total = model_total_variance(spec_);
    const double raw_background = model_background_variance(spec_);
    if (target_total_variance) {
        if (!(raw_total > 0.0))
            throw std::invalid_argument(
                "noise: cannot scale a zero-power model to a target variance");
        scale_ = *target_total_variance / raw_total;
    }
    total_variance_ = raw_total * scale_;
    background_variance_ = raw_background * scale_;

    if (spec_.kind == NoiseKind::middleton_a) {
        const auto w = spec_.middleton.weights();
        double acc = 0.0;
        for (std::size_t m = 0; m < w.size(); ++m) {
            acc += w[m];
            middleton_cdf_.push_back(acc);
            middleton_sd_.push_back(std::sqrt(
                spec_.middleton.term_variance(static_cast<int>(m)) * scale_ / 2.0));
        }
        middleton_cdf_.back() = 1.0;
    }

    if (spec_.kind == NoiseKind::impulse_train) {
        const std::size_t n = band_.frame_samples() * total_frames;
        const double fs = band_.sampling_frequency;
        const double run_duration = static_cast<double>(n) / fs;
        ImpulseTrainParams events_only = spec_.train;
        events_only.impulse_variance_per_sample = 0.0;
        const ImpulseTrain train =
            sample_impulse_train(events_only, run_duration, fs,
                                 RandomStream{seed_, 0}.substream(kTrainTag));
        train_mask_.assign(n, 0);
        for (const auto& e : train.events) {
            const auto first =
                static_cast<std::size_t>(std::ceil(e.start * fs - 1e-9));
            const double end_limit = (e.start + e.duration) * fs - 1e-9;
            for (std::size_t i = first;
                 i < n && static_cast<double>(i) < end_limit; ++i)
                train_mask_[i] = 1;
        }
    }
}

FrameNoise NoiseSource::frame(std::size_t frame_index) const {
    const std::size_t n = band_.frame_samples();
    FrameNoise out;
    out.samples.resize(n);
    out.mask.assign(n, 0);
    const RandomStream stream =
        RandomStream{seed_, frame_index}.substream(kNoiseTag);

    switch (spec_.kind) {
        case NoiseKind::mixed_gaussian: {
            StreamRng rng(stream);
            const double sd_g = std::sqrt(spec_.mixed.sigma_g2 * scale_ / 2.0);
            const double sd_i =
                spec_.mixed.A > 0.0
                    ? std::sqrt(spec_.mixed.impulse_state_variance() * scale_ / 2.0)
                    : 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const bool impulse = rng.uniform() < spec_.mixed.A;
                const double sd = impulse ? sd_i : sd_g;
                out.samples[i] = cplx(sd * rng.gaussian(), sd * rng.gaussian());
                out.mask[i] = impulse ? 1 : 0;
            }
            break;
        }
        case NoiseKind::middleton_a: {
            // one mixture state per complex sample, shared by both parts
            StreamRng rng(stream);
            for (std::size_t i = 0; i < n; ++i) {
                const double u = rng.uniform();
                const auto it =
                    std::lower_bound(middleton_cdf_.begin(), middleton_cdf_.end(), u);
                const auto m = static_cast<std::size_t>(it - middleton_cdf_.begin());
                const double sd = middleton_sd_[m];
                out.samples[i] = cplx(sd * rng.gaussian(), sd * rng.gaussian());
                out.mask[i] = m > 0 ? 1 : 0;
            }
            break;
        }
        case NoiseKind::impulse_train: {
            const std::size_t offset = frame_index * n;
            if (offset + n > train_mask_.size())
                throw std::out_of_range("NoiseSource: frame index beyond the run");
            StreamRng rng(stream);
            const double sd_bg =
                std::sqrt(spec_.train_background_sigma_g2 * scale_ / 2.0);
            const double sd_imp =
                std::sqrt(spec_.train.impulse_variance_per_sample * scale_ / 2.0);
            for (std::size_t i = 0; i < n; ++i) {
                cplx v(0.0, 0.0);
                if (sd_bg > 0.0) v = cplx(sd_bg * rng.gaussian(), sd_bg * rng.gaussian());
                if (train_mask_[offset + i]) {
                    out.mask[i] = 1;
                    v += cplx(sd_imp * rng.gaussian(), sd_imp * rng.gaussian());
                }
                out.samples[i] = v;
            }
            break;
        }
        case NoiseKind::periodic: {
            const rvec w = sample_periodic_train(
                spec_.periodic, n, band_.sampling_frequency,
                static_cast<std::uint64_t>(frame_index) * n);
            const double amp_scale = std::sqrt(scale_);
            for (std::size_t i = 0; i < n; ++i) {
                out.samples[i] = cplx(w[i] * amp_scale, 0.0);
                out.mask[i] = w[i] != 0.0 ? 1 : 0;
            }
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// capacity

std::vector<CapacityReport> run_capacity(const ExperimentConfig& cfg) {
    if (cfg.noise.kind != NoiseKind::mixed_gaussian)
        throw ConfigError(
            "capacity: requires a mixed_gaussian noise block (A, sigma_g2_j, "
            "sigma_i2_j)");
    if (!cfg.signal.eb_j)
        throw ConfigError("signal.eb_j: required for capacity runs");
    const BandConfig band = band_config(cfg.band);
    const double bandwidth = cfg.capacity.bandwidth_hz.value_or(band.band_width_hz());

    std::vector<double> sweep = cfg.capacity.sweep_A;
    if (sweep.empty()) sweep.push_back(cfg.noise.mixed.A);

    std::vector<CapacityReport> out;
    out.reserve(sweep.size());
    for (const double a : sweep) {
        CapacityInputs in;
        in.bandwidth_hz = bandwidth;
        in.A = a;
        in.eb = *cfg.signal.eb_j;
        in.sigma_g2 = cfg.noise.mixed.sigma_g2;
        in.sigma_i2 = cfg.noise.mixed.sigma_i2;
        out.push_back(capacity_report(in));
    }
    return out;
}

CsvTable capacity_table(const ExperimentConfig& cfg,
                        const std::vector<CapacityReport>& reports) {
    CsvTable t;
    t.header = {"band",         "B_hz",       "A",
                "eb_j",         "sigma_g2_j", "sigma_i2_j",
                "c1_bps",       "c2_bps",     "c3_bps",
                "c3_first_term_bps"};
    for (const auto& r : reports) {
        t.rows.push_back({band_name(cfg.band), format_csv_number(r.in.bandwidth_hz),
                          format_csv_number(r.in.A), format_csv_number(r.in.eb),
                          format_csv_number(r.in.sigma_g2),
                          format_csv_number(r.in.sigma_i2), format_csv_number(r.c1),
                          format_csv_number(r.c2), format_csv_number(r.c3),
                          format_csv_number(r.c3_first_term)});
    }
    return t;
}

// ---------------------------------------------------------------------------
// shared frame chain

namespace {

struct FrameData {
    std::vector<std::uint8_t> bits;
    cvec symbols;
};

FrameData draw_frame_bits(RandomStream stream, std::size_t carriers, int bpc) {
    StreamRng rng(stream);
    FrameData fd;
    fd.bits.resize(carriers * static_cast<std::size_t>(bpc));
    fd.symbols.resize(carriers);
    for (std::size_t c = 0; c < carriers; ++c) {
        if (bpc == 1) {
            const auto b = static_cast<std::uint8_t>(rng.next_u64() & 1u);
            fd.bits[c] = b;
            fd.symbols[c] = cplx(b ? -1.0 : 1.0, 0.0);
        } else {
            const auto b0 = static_cast<std::uint8_t>(rng.next_u64() & 1u);
            const auto b1 = static_cast<std::uint8_t>(rng.next_u64() & 1u);
            fd.bits[2 * c] = b0;
            fd.bits[2 * c + 1] = b1;
            fd.symbols[c] = cplx(b0 ? -std::numbers::sqrt2 / 2.0 : std::numbers::sqrt2 / 2.0,
                                 b1 ? -std::numbers::sqrt2 / 2.0 : std::numbers::sqrt2 / 2.0);
        }
    }
    return fd;
}

long long count_bit_errors(const FrameData& fd, const cvec& got, int bpc) {
    long long errors = 0;
    for (std::size_t c = 0; c < got.size(); ++c) {
        if (bpc == 1) {
            const std::uint8_t decided = got[c].real() < 0.0 ? 1 : 0;
            errors += decided != fd.bits[c];
        } else {
            const std::uint8_t d0 = got[c].real() < 0.0 ? 1 : 0;
            const std::uint8_t d1 = got[c].imag() < 0.0 ? 1 : 0;
            errors += d0 != fd.bits[2 * c];
            errors += d1 != fd.bits[2 * c + 1];
        }
    }
    return errors;
}

struct PointStats {
    long long errors = 0;
    long long bits = 0;
    double error_energy = 0.0;
    long long error_samples = 0;

    double ber() const {
        return bits > 0 ? static_cast<double>(errors) / static_cast<double>(bits) : 0.0;
    }
    double post_snr_db() const {
        const double var = error_energy / static_cast<double>(error_samples);
        return 10.0 * std::log10(1.0 / var);
    }
};

PointStats simulate_point(const ExperimentConfig& cfg, const BandConfig& band,
                          const NoiseSource& noise, MitigationMethod method,
                          double abs_threshold) {
    PointStats st;
    MitigationConfig mit;
    mit.method = method;
    mit.threshold = abs_threshold;
    const int bpc = cfg.signal.bits_per_carrier;
    for (std::size_t f = 0; f < static_cast<std::size_t>(cfg.frames); ++f) {
        const FrameData fd =
            draw_frame_bits(RandomStream{cfg.seed, f}.substream(kBitsTag),
                            band.used_carriers, bpc);
        const OfdmFrame frame = modulate(fd.symbols, band);
        cvec tx = frame.time_samples;
        const RandomStream rnd =
            RandomStream{cfg.randomizer.stream_seed, f}.substream(kRandomizerTag);
        if (cfg.randomizer.enabled) tx = randomize(tx, rnd);
        const FrameNoise fn = noise.frame(f);
        cvec rx(tx.size());
        for (std::size_t i = 0; i < rx.size(); ++i) rx[i] = tx[i] + fn.samples[i];
        if (method != MitigationMethod::passthrough) rx = mitigate(rx, mit).samples;
        if (cfg.randomizer.enabled) rx = derandomize(rx, rnd);
        const cvec got = demodulate(rx, band);
        st.errors += count_bit_errors(fd, got, bpc);
        st.bits += static_cast<long long>(band.used_carriers) * bpc;
        for (std::size_t c = 0; c < got.size(); ++c)
            st.error_energy += std::norm(got[c] - fd.symbols[c]);
        st.error_samples += static_cast<long long>(got.size());
    }
    return st;
}

void require_frames(const ExperimentConfig& cfg) {
    if (cfg.frames < 1)
        throw ConfigError("frames: must be >= 1, got " + std::to_string(cfg.frames));
}

std::vector<double> resolve_snr_points(const ExperimentConfig& cfg) {
    if (!cfg.signal.snr_sweep_db.empty()) return cfg.signal.snr_sweep_db;
    if (cfg.signal.snr_db) return {*cfg.signal.snr_db};
    if (cfg.signal.eb_j) {
        const double total = model_total_variance(cfg.noise);
        if (!(total > 0.0))
            throw ConfigError("signal: zero-power noise model, cannot derive SNR");
        return {10.0 * std::log10(*cfg.signal.eb_j / total)};
    }
    throw ConfigError(
        "signal: one of snr_db, snr_sweep_db or eb_j is required for Monte Carlo "
        "runs");
}

}  // namespace

// ---------------------------------------------------------------------------
// BER

std::vector<BerRow> run_ber(const ExperimentConfig& cfg) {
    require_frames(cfg);
    const BandConfig band = band_config(cfg.band);
    const std::vector<double> points = resolve_snr_points(cfg);

    std::vector<MitigationMethod> methods = {MitigationMethod::passthrough};
    if (cfg.mitigation && cfg.mitigation->method != MitigationMethod::passthrough)
        methods.push_back(cfg.mitigation->method);

    std::vector<BerRow> rows;
    for (const double snr_db : points) {
        const double target = std::pow(10.0, -snr_db / 10.0);
        const NoiseSource noise(cfg.noise, band, target, cfg.seed,
                                static_cast<std::size_t>(cfg.frames));
        const double rms =
            std::sqrt(signal_power_per_sample(band) + noise.background_variance());
        for (const auto method : methods) {
            const double thr =
                cfg.mitigation ? cfg.mitigation->threshold_scale * rms : 0.0;
            const PointStats st = simulate_point(cfg, band, noise, method, thr);
            BerRow row;
            row.snr_db = snr_db;
            row.method = method == MitigationMethod::passthrough
                             ? "none"
                             : mitigation_method_name(method);
            row.ber = st.ber();
            row.errors = st.errors;
            row.bits = st.bits;
            row.frames = cfg.frames;
            row.low_confidence = st.errors < 100;
            rows.push_back(row);
        }
    }
    return rows;
}

CsvTable ber_table(const std::vector<BerRow>& rows) {
    CsvTable t;
    t.header = {"snr_db", "method", "ber", "errors", "bits", "frames", "low_confidence"};
    for (const auto& r : rows) {
        t.rows.push_back({format_csv_number(r.snr_db), r.method,
                          format_csv_number(r.ber), format_csv_int(r.errors),
                          format_csv_int(r.bits), format_csv_int(r.frames),
                          r.low_confidence ? "1" : "0"});
    }
    return t;
}

// ---------------------------------------------------------------------------
// periodic

PeriodicResult run_periodic(const ExperimentConfig& cfg) {
    require_frames(cfg);
    if (cfg.noise.kind != NoiseKind::periodic)
        throw ConfigError("periodic: config must use a periodic noise block");
    const BandConfig band = band_config(cfg.band);
    const std::size_t n_bins = band.fft_size;
    const std::size_t step = band.frame_samples();
    const double fs = band.sampling_frequency;
    const auto frames = static_cast<std::size_t>(cfg.frames);

    rvec acc_raw(n_bins, 0.0);
    rvec acc_rand(n_bins, 0.0);
    for (std::size_t f = 0; f < frames; ++f) {
        const rvec w = sample_periodic_train(cfg.noise.periodic, n_bins, fs,
                                             f * step + band.cyclic_prefix_len);
        cvec x(n_bins);
        for (std::size_t i = 0; i < n_bins; ++i) x[i] = cplx(w[i], 0.0);
        const cvec bins = dft(x);
        for (std::size_t k = 0; k < n_bins; ++k) acc_raw[k] += std::norm(bins[k]);

        if (cfg.randomizer.enabled) {
            const rvec wf =
                sample_periodic_train(cfg.noise.periodic, step, fs, f * step);
            cvec full(step);
            for (std::size_t i = 0; i < step; ++i) full[i] = cplx(wf[i], 0.0);
            const cvec de = derandomize(
                full,
                RandomStream{cfg.randomizer.stream_seed, f}.substream(kRandomizerTag));
            const cvec body(de.begin() + static_cast<long>(band.cyclic_prefix_len),
                            de.end());
            const cvec rbins = dft(body);
            for (std::size_t k = 0; k < n_bins; ++k) acc_rand[k] += std::norm(rbins[k]);
        }
    }

    PeriodicResult result;
    const double period_samples = cfg.noise.periodic.period * fs;
    const auto rounded = std::llround(period_samples);
    result.integer_period = std::abs(period_samples - static_cast<double>(rounded)) <
                                1e-6 &&
                            rounded > 0 && n_bins % static_cast<std::size_t>(rounded) == 0;
    result.comb_bins.assign(n_bins, 0);
    const auto lines = std::max<long long>(1, std::llround(period_samples));
    for (long long m = 0; m < lines; ++m) {
        const auto bin = static_cast<std::size_t>(
            std::llround(static_cast<double>(m) * static_cast<double>(n_bins) /
                         period_samples)) %
            n_bins;
        result.comb_bins[bin] = 1;
    }

    const auto summarize = [&](const rvec& acc) {
        PeriodicSpectrum s;
        s.mean_energy.resize(n_bins);
        double total = 0.0;
        for (double e : acc) total += e;
        double comb = 0.0;
        double peak = 0.0;
        for (std::size_t k = 0; k < n_bins; ++k) {
            s.mean_energy[k] = acc[k] / static_cast<double>(frames);
            const double share = total > 0.0 ? acc[k] / total : 0.0;
            peak = std::max(peak, share);
            if (result.comb_bins[k]) comb += share;
        }
        s.comb_energy_share = comb;
        s.max_bin_share = peak;
        return s;
    };

    result.raw = summarize(acc_raw);
    if (cfg.randomizer.enabled) result.randomized = summarize(acc_rand);
    return result;
}

CsvTable periodic_table(const PeriodicResult& result) {
    CsvTable t;
    t.header = {"mode",        "bin",
                "mean_energy", "energy_share",
                "is_comb_bin", "comb_energy_share",
                "max_bin_share"};
    const auto emit = [&t, &result](const std::string& mode, const PeriodicSpectrum& s) {
        double total = 0.0;
        for (double e : s.mean_energy) total += e;
        for (std::size_t k = 0; k < s.mean_energy.size(); ++k) {
            t.rows.push_back({mode, format_csv_int(static_cast<long long>(k)),
                              format_csv_number(s.mean_energy[k]),
                              format_csv_number(total > 0.0 ? s.mean_energy[k] / total
                                                            : 0.0),
                              result.comb_bins[k] ? "1" : "0",
                              format_csv_number(s.comb_energy_share),
                              format_csv_number(s.max_bin_share)});
        }
    };
    emit("raw", result.raw);
    if (result.randomized) emit("randomized", *result.randomized);
    return t;
}

CsvTable frame_spectrum_table(const OfdmFrame& frame) {
    CsvTable t;
    t.header = {"bin", "real", "imag"};
    for (std::size_t k = 0; k < frame.freq_symbols.size(); ++k) {
        t.rows.push_back({format_csv_int(static_cast<long long>(k)),
                          format_csv_number(frame.freq_symbols[k].real()),
                          format_csv_number(frame.freq_symbols[k].imag())});
    }
    return t;
}

// ---------------------------------------------------------------------------
// threshold sweep

std::vector<SweepRow> threshold_sweep(const ExperimentConfig& cfg) {
    require_frames(cfg);
    if (!cfg.mitigation)
        throw ConfigError("mitigation: block required for threshold sweeps");
    const BandConfig band = band_config(cfg.band);
    const std::vector<double> points = resolve_snr_points(cfg);
    const double snr_db = points.front();
    const double target = std::pow(10.0, -snr_db / 10.0);
    const NoiseSource noise(cfg.noise, band, target, cfg.seed,
                            static_cast<std::size_t>(cfg.frames));
    const double rms =
        std::sqrt(signal_power_per_sample(band) + noise.background_variance());

    std::vector<double> scales = cfg.mitigation->sweep_scales;
    if (scales.empty()) scales.push_back(cfg.mitigation->threshold_scale);

    const auto row_for = [&](MitigationMethod method, double thr) {
        const PointStats st = simulate_point(cfg, band, noise, method, thr);
        SweepRow row;
        row.method = mitigation_method_name(method);
        row.threshold = thr;
        row.snr_db_post = st.post_snr_db();
        row.ber = st.ber();
        row.frames = cfg.frames;
        row.bits = st.bits;
        return row;
    };

    std::vector<SweepRow> rows;
    rows.push_back(row_for(MitigationMethod::passthrough, 0.0));
    for (const auto method : {MitigationMethod::nulling, MitigationMethod::clipping})
        for (const double s : scales) rows.push_back(row_for(method, s * rms));
    return rows;
}

CsvTable sweep_table(const std::vector<SweepRow>& rows) {
    CsvTable t;
    t.header = {"method", "threshold", "snr_db_post", "ber", "frames", "bits"};
    for (const auto& r : rows) {
        t.rows.push_back({r.method, format_csv_number(r.threshold),
                          format_csv_number(r.snr_db_post), format_csv_number(r.ber),
                          format_csv_int(r.frames), format_csv_int(r.bits)});
    }
    return t;
}

// ---------------------------------------------------------------------------
// focused experiments

GenieNullingResult genie_nulling_experiment(Band band_tag, double A,
                                            double background_to_signal_ratio,
                                            std::size_t frames, std::uint64_t seed) {
    if (!(A > 0.0 && A <= 1.0))
        throw std::invalid_argument("genie_nulling_experiment: A must be in (0, 1]");
    const BandConfig band = band_config(band_tag);
    const double es = signal_power_per_sample(band);

    NoiseSpec spec;
    spec.kind = NoiseKind::mixed_gaussian;
    spec.mixed.A = A;
    spec.mixed.sigma_g2 = background_to_signal_ratio * es;
    spec.mixed.sigma_i2 = 20.0 * es;  // strength is irrelevant once nulled
    spec.mixed.validate();
    const NoiseSource noise(spec, band, std::nullopt, seed, frames);

    double error_energy = 0.0;
    long long error_samples = 0;
    for (std::size_t f = 0; f < frames; ++f) {
        const FrameData fd = draw_frame_bits(RandomStream{seed, f}.substream(kBitsTag),
                                             band.used_carriers, 1);
        const OfdmFrame frame = modulate(fd.symbols, band);
        const FrameNoise fn = noise.frame(f);
        cvec rx(frame.time_samples.size());
        for (std::size_t i = 0; i < rx.size(); ++i)
            rx[i] = frame.time_samples[i] + fn.samples[i];
        MitigationConfig mit;
        mit.method = MitigationMethod::nulling;
        mit.oracle_mask = fn.mask;
        rx = null_samples(rx, mit).samples;
        // residual variance averaged across the whole transform block: the
        // nulled signal energy spreads over all carriers, while on the used
        // bins alone it also shows up coherently as an attenuation of the
        // symbols themselves
        const cvec body(rx.begin() + static_cast<long>(band.cyclic_prefix_len),
                        rx.end());
        const cvec bins = dft(body);
        for (std::size_t k = 0; k < bins.size(); ++k)
            error_energy += std::norm(bins[k] - frame.freq_symbols[k]);
        error_samples += static_cast<long long>(bins.size());
    }

    GenieNullingResult r;
    r.eb_sample = es;
    r.predicted = residual_variance_prediction(A, es);
    const double raw = error_energy / static_cast<double>(error_samples);
    r.measured_residual = raw - (1.0 - A) * spec.mixed.sigma_g2;
    r.frames = frames;
    return r;
}

GaussianizationExperiment gaussianization_experiment(Band band_tag,
                                                     const MixedGaussianParams& params,
                                                     std::size_t frames,
                                                     std::uint64_t seed,
                                                     double threshold) {
    const BandConfig band = band_config(band_tag);
    NoiseSpec spec;
    spec.kind = NoiseKind::mixed_gaussian;
    spec.mixed = params;
    const NoiseSource noise(spec, band, std::nullopt, seed, frames);

    std::vector<cvec> pooled;
    pooled.reserve(frames);
    double bin_energy = 0.0;
    for (std::size_t f = 0; f < frames; ++f) {
        const FrameNoise fn = noise.frame(f);
        const cvec body(fn.samples.begin() + static_cast<long>(band.cyclic_prefix_len),
                        fn.samples.end());
        cvec bins = dft(body);
        for (const auto& b : bins) bin_energy += std::norm(b);
        pooled.push_back(std::move(bins));
    }

    GaussianizationExperiment out;
    out.per_bin_variance =
        bin_energy / static_cast<double>(frames * band.fft_size);
    out.time_domain_variance = params.total_variance();
    out.result = gaussianization_test(pooled, threshold);
    return out;
}

}  // namespace plcsim
