#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace plcsim {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;
using rvec = std::vector<double>;

/// Raised when a configuration file is missing, malformed, or violates an
/// invariant. Messages name the offending field.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace plcsim
