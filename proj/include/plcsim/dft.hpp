#pragma once

#include "plcsim/types.hpp"

namespace plcsim {

/// Unitary discrete Fourier transform,
///   X_k = (1/sqrt(N)) * sum_n x_n * exp(-j 2 pi k n / N).
///
/// The 1/sqrt(N) convention in both directions makes Parseval factor-free:
/// time-domain and frequency-domain variances compare one-to-one, which the
/// noise bookkeeping throughout this library relies on.
///
/// Radix-2 in-place FFT for power-of-two lengths, direct O(N^2) evaluation
/// otherwise. Throws std::invalid_argument on empty input.
cvec dft(const cvec& x);

/// Unitary inverse transform, x_n = (1/sqrt(N)) * sum_k X_k * exp(+j 2 pi k n / N).
cvec idft(const cvec& x);

}  // namespace plcsim
