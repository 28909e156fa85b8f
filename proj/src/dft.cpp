#include "plcsim/dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plcsim {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, sign = -1 forward / +1 inverse.
void fft_pow2(cvec& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

cvec direct_dft(const cvec& x, int sign) {
    const std::size_t n = x.size();
    cvec out(n);
    const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            // k*m mod n keeps the twiddle argument small for long inputs
            const double ang = step * static_cast<double>((k * m) % n);
            acc += x[m] * cplx(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    return out;
}

cvec transform(const cvec& x, int sign) {
    if (x.empty()) throw std::invalid_argument("dft: input must be non-empty");
    cvec out;
    if (is_pow2(x.size())) {
        out = x;
        fft_pow2(out, sign);
    } else {
        out = direct_dft(x, sign);
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(x.size()));
    for (auto& v : out) v *= scale;
    return out;
}

}  // namespace

cvec dft(const cvec& x) { return transform(x, -1); }

cvec idft(const cvec& x) { return transform(x, +1); }

}  // namespace plcsim
