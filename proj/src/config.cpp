#include "plcsim/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace plcsim {

using nlohmann::json;

std::string noise_kind_name(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::mixed_gaussian: return "mixed_gaussian";
        case NoiseKind::middleton_a: return "middleton_a";
        case NoiseKind::impulse_train: return "impulse_train";
        default: return "periodic";
    }
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

void check_keys(const json& obj, const std::string& path,
                const std::set<std::string>& allowed) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key)) fail(path + "." + key, "unknown field");
    }
}

const json* find(const json& obj, const char* key) {
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double get_double(const json& obj, const char* key, const std::string& path) {
    const json* v = find(obj, key);
    if (!v) fail(path + "." + key, "required field missing");
    if (!v->is_number()) fail(path + "." + key, "expected a number");
    return v->get<double>();
}

double get_double_or(const json& obj, const char* key, const std::string& path,
                     double fallback) {
    const json* v = find(obj, key);
    if (!v) return fallback;
    if (!v->is_number()) fail(path + "." + key, "expected a number");
    return v->get<double>();
}

std::string get_string(const json& obj, const char* key, const std::string& path) {
    const json* v = find(obj, key);
    if (!v) fail(path + "." + key, "required field missing");
    if (!v->is_string()) fail(path + "." + key, "expected a string");
    return v->get<std::string>();
}

std::vector<double> get_double_list(const json& obj, const char* key,
                                    const std::string& path) {
    const json* v = find(obj, key);
    if (!v) return {};
    if (!v->is_array()) fail(path + "." + key, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : *v) {
        if (!e.is_number()) fail(path + "." + key, "expected an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

IntervalDistribution parse_distribution(const std::string& name,
                                        const std::string& path) {
    if (name == "exponential") return IntervalDistribution::exponential;
    if (name == "constant") return IntervalDistribution::constant;
    fail(path, "unknown distribution '" + name + "' (expected exponential or constant)");
}

NoiseSpec parse_noise(const json& block) {
    if (!block.is_object()) fail("noise", "expected an object");
    static const std::set<std::string> kinds = {"mixed_gaussian", "middleton_a",
                                                "impulse_train", "periodic"};
    std::vector<std::string> present;
    for (const auto& [key, _] : block.items()) {
        if (!kinds.contains(key)) fail("noise." + key, "unknown noise model");
        present.push_back(key);
    }
    if (present.size() != 1)
        fail("noise", "exactly one of {mixed_gaussian, middleton_a, impulse_train, "
                      "periodic} must be present (found " +
                          std::to_string(present.size()) + ")");

    NoiseSpec spec;
    const std::string& kind = present.front();
    const json& p = block.at(kind);
    const std::string path = "noise." + kind;
    if (!p.is_object()) fail(path, "expected an object");

    try {
        if (kind == "mixed_gaussian") {
            spec.kind = NoiseKind::mixed_gaussian;
            check_keys(p, path, {"A", "sigma_g2_j", "sigma_i2_j"});
            spec.mixed.A = get_double(p, "A", path);
            spec.mixed.sigma_g2 = get_double(p, "sigma_g2_j", path);
            spec.mixed.sigma_i2 = get_double(p, "sigma_i2_j", path);
            spec.mixed.validate();
        } else if (kind == "middleton_a") {
            spec.kind = NoiseKind::middleton_a;
            check_keys(p, path, {"A", "gamma", "sigma2_j", "truncation_m"});
            spec.middleton.A = get_double(p, "A", path);
            spec.middleton.gamma = get_double(p, "gamma", path);
            spec.middleton.sigma2 = get_double(p, "sigma2_j", path);
            spec.middleton.truncation_m =
                static_cast<int>(get_double_or(p, "truncation_m", path, 20));
            spec.middleton.validate();
        } else if (kind == "impulse_train") {
            spec.kind = NoiseKind::impulse_train;
            check_keys(p, path,
                       {"mean_duration_s", "mean_interarrival_s",
                        "impulse_variance_per_sample_j", "background_sigma_g2_j",
                        "duration_distribution", "interarrival_distribution",
                        "convention"});
            spec.train.mean_duration = get_double(p, "mean_duration_s", path);
            spec.train.mean_interarrival = get_double(p, "mean_interarrival_s", path);
            spec.train.impulse_variance_per_sample =
                get_double(p, "impulse_variance_per_sample_j", path);
            spec.train_background_sigma_g2 =
                get_double_or(p, "background_sigma_g2_j", path, 0.0);
            if (spec.train_background_sigma_g2 < 0.0)
                fail(path + ".background_sigma_g2_j", "must be >= 0");
            if (find(p, "duration_distribution"))
                spec.train.duration_distribution = parse_distribution(
                    get_string(p, "duration_distribution", path),
                    path + ".duration_distribution");
            if (find(p, "interarrival_distribution"))
                spec.train.interarrival_distribution = parse_distribution(
                    get_string(p, "interarrival_distribution", path),
                    path + ".interarrival_distribution");
            if (find(p, "convention")) {
                const std::string conv = get_string(p, "convention", path);
                if (conv == "gap")
                    spec.train.convention = InterarrivalConvention::gap;
                else if (conv == "start_to_start")
                    spec.train.convention = InterarrivalConvention::start_to_start;
                else
                    fail(path + ".convention",
                         "unknown convention '" + conv +
                             "' (expected gap or start_to_start)");
            }
            spec.train.validate();
        } else {
            spec.kind = NoiseKind::periodic;
            check_keys(p, path,
                       {"period_s", "pulse_width_s", "amplitude", "phase_offset_s"});
            spec.periodic.period = get_double(p, "period_s", path);
            spec.periodic.pulse_width = get_double(p, "pulse_width_s", path);
            spec.periodic.amplitude = get_double(p, "amplitude", path);
            spec.periodic.phase_offset = get_double_or(p, "phase_offset_s", path, 0.0);
            spec.periodic.validate();
        }
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
    return spec;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    check_keys(doc, "config",
               {"band", "seed", "frames", "noise", "signal", "mitigation", "randomizer",
                "capacity"});

    ExperimentConfig cfg;
    try {
        cfg.band = band_from_string(get_string(doc, "band", "config"));
    } catch (const std::invalid_argument& e) {
        fail("config.band", e.what());
    }

    if (const json* v = find(doc, "seed")) {
        if (!v->is_number_unsigned()) fail("config.seed", "expected a non-negative integer");
        cfg.seed = v->get<std::uint64_t>();
    }
    if (const json* v = find(doc, "frames")) {
        if (!v->is_number_integer()) fail("config.frames", "expected an integer");
        const auto frames = v->get<long long>();
        if (frames < 1) fail("config.frames", "must be >= 1, got " + std::to_string(frames));
        cfg.frames = static_cast<int>(frames);
    }

    const json* noise = find(doc, "noise");
    if (!noise) fail("config.noise", "required field missing");
    cfg.noise = parse_noise(*noise);

    if (const json* v = find(doc, "signal")) {
        if (!v->is_object()) fail("config.signal", "expected an object");
        check_keys(*v, "signal", {"eb_j", "snr_db", "snr_sweep_db", "bits_per_carrier"});
        if (find(*v, "eb_j")) {
            cfg.signal.eb_j = get_double(*v, "eb_j", "signal");
            if (!(*cfg.signal.eb_j > 0.0)) fail("signal.eb_j", "must be > 0");
        }
        if (find(*v, "snr_db")) cfg.signal.snr_db = get_double(*v, "snr_db", "signal");
        cfg.signal.snr_sweep_db = get_double_list(*v, "snr_sweep_db", "signal");
        const double bpc = get_double_or(*v, "bits_per_carrier", "signal", 1);
        if (bpc != 1 && bpc != 2)
            fail("signal.bits_per_carrier", "must be 1 (BPSK) or 2 (QPSK)");
        cfg.signal.bits_per_carrier = static_cast<int>(bpc);
    }

    if (const json* v = find(doc, "mitigation")) {
        if (!v->is_object()) fail("config.mitigation", "expected an object");
        check_keys(*v, "mitigation", {"method", "threshold_scale", "sweep_scales"});
        MitigationSpec m;
        try {
            m.method = mitigation_method_from_string(get_string(*v, "method", "mitigation"));
        } catch (const std::invalid_argument& e) {
            fail("config", e.what());
        }
        m.threshold_scale = get_double_or(*v, "threshold_scale", "mitigation", 3.0);
        if (m.method != MitigationMethod::passthrough && !(m.threshold_scale > 0.0))
            fail("mitigation.threshold_scale", "must be > 0");
        m.sweep_scales = get_double_list(*v, "sweep_scales", "mitigation");
        for (double s : m.sweep_scales)
            if (!(s > 0.0)) fail("mitigation.sweep_scales", "entries must be > 0");
        cfg.mitigation = m;
    }

    if (const json* v = find(doc, "randomizer")) {
        if (!v->is_object()) fail("config.randomizer", "expected an object");
        check_keys(*v, "randomizer", {"enabled", "stream_seed"});
        if (const json* e = find(*v, "enabled")) {
            if (!e->is_boolean()) fail("randomizer.enabled", "expected a boolean");
            cfg.randomizer.enabled = e->get<bool>();
        }
        if (const json* s = find(*v, "stream_seed")) {
            if (!s->is_number_unsigned())
                fail("randomizer.stream_seed", "expected a non-negative integer");
            cfg.randomizer.stream_seed = s->get<std::uint64_t>();
        }
    }

    if (const json* v = find(doc, "capacity")) {
        if (!v->is_object()) fail("config.capacity", "expected an object");
        check_keys(*v, "capacity", {"bandwidth_hz", "sweep_A"});
        if (find(*v, "bandwidth_hz")) {
            cfg.capacity.bandwidth_hz = get_double(*v, "bandwidth_hz", "capacity");
            if (!(*cfg.capacity.bandwidth_hz > 0.0))
                fail("capacity.bandwidth_hz", "must be > 0");
        }
        cfg.capacity.sweep_A = get_double_list(*v, "sweep_A", "capacity");
        for (double a : cfg.capacity.sweep_A)
            if (!(a >= 0.0 && a <= 1.0)) fail("capacity.sweep_A", "entries must be in [0, 1]");
    }

    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace plcsim
