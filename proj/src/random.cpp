#include "plcsim/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plcsim {

namespace {

// splitmix64 finalizer; used to turn (seed, stream_id) into well-separated
// engine seeds.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

RandomStream RandomStream::substream(std::uint64_t tag) const {
    return RandomStream{seed, mix64(stream_id ^ mix64(tag))};
}

StreamRng::StreamRng(RandomStream stream)
    : engine_(mix64(mix64(stream.seed) ^ mix64(stream.stream_id ^ 0xA5A5A5A5A5A5A5A5ull))) {}

double StreamRng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t StreamRng::uniform_below(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: n must be >= 1");
    // Lemire multiply-shift; bias is O(n / 2^64).
    using u128 = unsigned __int128;
    return static_cast<std::size_t>((static_cast<u128>(engine_()) * n) >> 64);
}

double StreamRng::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

rvec gaussian_vector(RandomStream stream, std::size_t n, double variance) {
    if (n == 0) throw std::invalid_argument("gaussian_vector: n must be >= 1");
    if (variance < 0.0) throw std::invalid_argument("gaussian_vector: variance must be >= 0");
    rvec out(n, 0.0);
    if (variance == 0.0) return out;
    StreamRng rng(stream);
    const double scale = std::sqrt(variance);
    for (auto& v : out) v = scale * rng.gaussian();
    return out;
}

}  // namespace plcsim
