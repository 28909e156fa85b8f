#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plcsim/types.hpp"

namespace plcsim {

enum class MitigationMethod { passthrough, nulling, clipping };

MitigationMethod mitigation_method_from_string(const std::string& name);
std::string mitigation_method_name(MitigationMethod m);

/// Receiver-side nonlinear preprocessor configuration. Detection operates on
/// time-domain sample magnitudes before the transform. When an oracle mask
/// is present it replaces threshold detection (genie-aided experiments).
struct MitigationConfig {
    MitigationMethod method = MitigationMethod::passthrough;
    double threshold = 0.0;  ///< amplitude; required > 0 for nulling/clipping
    std::optional<std::vector<std::uint8_t>> oracle_mask;

    void validate(std::size_t frame_len) const;
};

struct MitigationOutcome {
    cvec samples;
    std::vector<std::uint8_t> mask;  ///< 1 where the sample was treated
};

/// Zero every sample whose magnitude exceeds the threshold (or every sample
/// flagged by the oracle mask). Returns the mask actually applied.
MitigationOutcome null_samples(const cvec& received, const MitigationConfig& cfg);

/// Rescale samples above the threshold to magnitude == threshold, phase
/// preserved. Oracle-flagged samples are clipped regardless of magnitude.
MitigationOutcome clip_samples(const cvec& received, const MitigationConfig& cfg);

/// Dispatch on cfg.method; passthrough returns the input unchanged with an
/// all-false mask.
MitigationOutcome mitigate(const cvec& received, const MitigationConfig& cfg);

/// Residual per-carrier variance after ideal detection: nulling a fraction A
/// of samples removes that fraction of signal energy, which reappears as
/// self-noise A * eb_sample per bin under the unitary transform.
double residual_variance_prediction(double A, double eb_sample);

}  // namespace plcsim
