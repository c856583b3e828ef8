// FFT-backed linear convolution and periodic spectral multipliers (FFTW).
// Both are exact Toeplitz/circulant applications up to round-off and are
// validated against the naive loops in the test suite.

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fracto::fft {

/// Full linear convolution out[m] = sum_q ker[q] sig[m-q],
/// m = 0 .. ker.size()+sig.size()-2. Zero-padded FFT of power-of-two size.
std::vector<double> linear_convolve(std::span<const double> ker,
                                    std::span<const double> sig);

/// Reference O(n m) implementation of the same contract.
std::vector<double> linear_convolve_naive(std::span<const double> ker,
                                          std::span<const double> sig);

/// Treats u as one period of a periodic function with sample spacing h,
/// multiplies each discrete Fourier mode by mult(|k_m|), k_m = 2 pi m / (n h),
/// and inverse transforms. Works for any n (not just powers of two).
std::vector<double> apply_spectral_multiplier(
    std::span<const double> u, double h,
    const std::function<double(double)>& mult);

}  // namespace fracto::fft
