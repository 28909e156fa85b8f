#pragma once

#include <cstdint>
#include <random>

#include "plcsim/types.hpp"

namespace plcsim {

/// Immutable descriptor of a reproducible random stream.
///
/// Identical (seed, stream_id) pairs always produce identical sample
/// sequences; distinct stream_ids produce statistically independent
/// sequences. Every stochastic operation in the library takes one of these
/// by value, so the operation stays a pure function of its arguments and
/// frames can be simulated independently and in parallel.
struct RandomStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    /// Derive an independent child stream (e.g. one per noise source within
    /// a frame) without consuming state from this one.
    [[nodiscard]] RandomStream substream(std::uint64_t tag) const;
};

/// Concrete generator instantiated from a RandomStream descriptor.
///
/// Gaussian variates use Box-Muller on top of mt19937_64 output bits, so the
/// produced sequence is identical on every platform (the distribution
/// adapters in <random> make no such guarantee).
class StreamRng {
   public:
    explicit StreamRng(RandomStream stream);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform();

    /// Uniform integer in [0, n), n >= 1.
    std::size_t uniform_below(std::size_t n);

    /// Standard normal variate.
    double gaussian();

   private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// i.i.d. zero-mean Gaussian samples with the given per-sample variance.
/// variance == 0 yields exact zeros. Throws std::invalid_argument on n == 0
/// or negative variance.
rvec gaussian_vector(RandomStream stream, std::size_t n, double variance);

}  // namespace plcsim
