#include "plcsim/mitigation.hpp"

#include <cmath>
#include <stdexcept>

namespace plcsim {

MitigationMethod mitigation_method_from_string(const std::string& name) {
    if (name == "null") return MitigationMethod::nulling;
    if (name == "clip") return MitigationMethod::clipping;
    if (name == "passthrough") return MitigationMethod::passthrough;
    throw std::invalid_argument("mitigation.method: unknown method '" + name +
                                "' (expected null, clip or passthrough)");
}

std::string mitigation_method_name(MitigationMethod m) {
    switch (m) {
        case MitigationMethod::nulling: return "null";
        case MitigationMethod::clipping: return "clip";
        default: return "passthrough";
    }
}

void MitigationConfig::validate(std::size_t frame_len) const {
    const bool needs_threshold =
        method == MitigationMethod::clipping ||
        (method == MitigationMethod::nulling && !oracle_mask);
    if (needs_threshold && !(threshold > 0.0))
        throw std::invalid_argument("MitigationConfig.threshold: must be > 0");
    if (oracle_mask && oracle_mask->size() != frame_len)
        throw std::invalid_argument(
            "MitigationConfig.oracle_mask: length must match the frame");
}

namespace {

std::vector<std::uint8_t> detection_mask(const cvec& received,
                                         const MitigationConfig& cfg) {
    cfg.validate(received.size());
    std::vector<std::uint8_t> mask(received.size(), 0);
    if (cfg.oracle_mask) {
        mask = *cfg.oracle_mask;
    } else {
        for (std::size_t i = 0; i < received.size(); ++i)
            mask[i] = std::abs(received[i]) > cfg.threshold ? 1 : 0;
    }
    return mask;
}

}  // namespace

MitigationOutcome null_samples(const cvec& received, const MitigationConfig& cfg) {
    if (cfg.method != MitigationMethod::nulling)
        throw std::invalid_argument("null_samples: config method must be null");
    MitigationOutcome out;
    out.mask = detection_mask(received, cfg);
    out.samples = received;
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        if (out.mask[i]) out.samples[i] = cplx(0.0, 0.0);
    return out;
}

MitigationOutcome clip_samples(const cvec& received, const MitigationConfig& cfg) {
    if (cfg.method != MitigationMethod::clipping)
        throw std::invalid_argument("clip_samples: config method must be clip");
    MitigationOutcome out;
    out.mask = detection_mask(received, cfg);
    out.samples = received;
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
        if (!out.mask[i]) continue;
        const double mag = std::abs(out.samples[i]);
        // clipping only ever reduces magnitude; an oracle-flagged sample
        // already inside the threshold is left alone
        if (mag > cfg.threshold) {
            out.samples[i] *= cfg.threshold / mag;
        } else {
            out.mask[i] = 0;
        }
    }
    return out;
}

MitigationOutcome mitigate(const cvec& received, const MitigationConfig& cfg) {
    switch (cfg.method) {
        case MitigationMethod::nulling: return null_samples(received, cfg);
        case MitigationMethod::clipping: return clip_samples(received, cfg);
        default:
            return MitigationOutcome{received,
                                     std::vector<std::uint8_t>(received.size(), 0)};
    }
}

double residual_variance_prediction(double A, double eb_sample) {
    if (!(A >= 0.0 && A <= 1.0))
        throw std::invalid_argument("residual_variance_prediction: A must be in [0, 1]");
    if (!(eb_sample >= 0.0))
        throw std::invalid_argument(
            "residual_variance_prediction: eb_sample must be >= 0");
    return A * eb_sample;
}

}  // namespace plcsim
