#pragma once

#include "plcsim/types.hpp"

namespace plcsim {

/// Inputs shared by the three channel-capacity formulas. `eb` is the signal
/// energy parameter defined through P / 2B := E_b for average input power P
/// and bandwidth B; the formulas treat it as an opaque scalar.
struct CapacityInputs {
    double bandwidth_hz = 0.0;  ///< B > 0
    double A = 0.0;             ///< impulse probability in [0, 1]
    double eb = 0.0;            ///< E_b (J), >= 0
    double sigma_g2 = 0.0;      ///< background-noise variance (J), > 0
    double sigma_i2 = 0.0;      ///< impulse-noise variance (J), >= 0

    void validate() const;
};

/// All three capacities in bit/s plus the diagnostics the comparison needs.
/// c3 is the two-term expression as printed; c3_first_term is its
/// water-filling term alone. The two are reported side by side because they
/// differ materially whenever the impulse state is strong, and published
/// figures are sometimes quoted from the first term only.
struct CapacityReport {
    CapacityInputs in;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c3_first_term = 0.0;
    double c2_over_c1 = 0.0;
    double c3_over_c1 = 0.0;
    /// (sigma_i2 + sigma_g2) / sigma_g2 — the large-E_b gap between c1 and c2.
    double large_eb_gap = 0.0;
    /// Set when eb < sigma_i2: the time-domain water-filling expression is
    /// outside its "large enough power" regime. Advisory only.
    bool c3_low_power = false;
};

/// Fully randomized channel: C1 = B log2(1 + E_b / (sigma_g2 + sigma_i2)).
double capacity_c1(const CapacityInputs& in);

/// Receiver knows the state, transmitter does not:
/// C2 = (1-A) B log2(1 + E_b/sigma_g2) + A B log2(1 + E_b/(sigma_g2 + sigma_i2/A)).
/// A == 0 evaluates the single-state limit B log2(1 + E_b/sigma_g2).
double capacity_c2(const CapacityInputs& in);

/// Both sides know the state (time-domain water-filling upper bound):
/// C3 = B log2(1 + (E_b + sigma_i2)/sigma_g2)
///    + A B log2(sigma_g2 / (sigma_g2 + sigma_i2/A)).
/// A == 0 evaluates the limit where the second term vanishes.
double capacity_c3(const CapacityInputs& in);

/// First (water-filling) term of c3 alone.
double capacity_c3_first_term(const CapacityInputs& in);

CapacityReport capacity_report(const CapacityInputs& in);

}  // namespace plcsim
