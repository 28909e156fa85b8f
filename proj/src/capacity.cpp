#include "plcsim/capacity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace plcsim {

void CapacityInputs::validate() const {
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("CapacityInputs.bandwidth_hz: must be > 0");
    if (!(A >= 0.0 && A <= 1.0))
        throw std::invalid_argument("CapacityInputs.A: must be in [0, 1], got " +
                                    std::to_string(A));
    if (!(eb >= 0.0)) throw std::invalid_argument("CapacityInputs.eb: must be >= 0");
    if (!(sigma_g2 > 0.0))
        throw std::invalid_argument("CapacityInputs.sigma_g2: must be > 0");
    if (!(sigma_i2 >= 0.0))
        throw std::invalid_argument("CapacityInputs.sigma_i2: must be >= 0");
}

double capacity_c1(const CapacityInputs& in) {
    in.validate();
    return in.bandwidth_hz * std::log2(1.0 + in.eb / (in.sigma_g2 + in.sigma_i2));
}

double capacity_c2(const CapacityInputs& in) {
    in.validate();
    const double clean = in.bandwidth_hz * std::log2(1.0 + in.eb / in.sigma_g2);
    if (in.A == 0.0) return clean;
    const double impulse_var = in.sigma_g2 + in.sigma_i2 / in.A;
    return (1.0 - in.A) * clean +
           in.A * in.bandwidth_hz * std::log2(1.0 + in.eb / impulse_var);
}

double capacity_c3_first_term(const CapacityInputs& in) {
    in.validate();
    return in.bandwidth_hz * std::log2(1.0 + (in.eb + in.sigma_i2) / in.sigma_g2);
}

double capacity_c3(const CapacityInputs& in) {
    const double first = capacity_c3_first_term(in);
    if (in.A == 0.0) return first;  // A log2(...) -> 0 as A -> 0
    const double impulse_var = in.sigma_g2 + in.sigma_i2 / in.A;
    return first + in.A * in.bandwidth_hz * std::log2(in.sigma_g2 / impulse_var);
}

CapacityReport capacity_report(const CapacityInputs& in) {
    in.validate();
    CapacityReport r;
    r.in = in;
    r.c1 = capacity_c1(in);
    r.c2 = capacity_c2(in);
    r.c3 = capacity_c3(in);
    r.c3_first_term = capacity_c3_first_term(in);
    r.c2_over_c1 = r.c1 > 0.0 ? r.c2 / r.c1 : 0.0;
    r.c3_over_c1 = r.c1 > 0.0 ? r.c3 / r.c1 : 0.0;
    r.large_eb_gap = (in.sigma_i2 + in.sigma_g2) / in.sigma_g2;
    r.c3_low_power = in.eb < in.sigma_i2;
    return r;
}

}  // namespace plcsim
