#include "fracto/fastconv.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <mutex>
#include <stdexcept>

namespace fracto::fft {

namespace {

// FFTW planning is not thread-safe; executions on distinct buffers are.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
};

// One r2c/c2r plan pair per transform size, created with FFTW_ESTIMATE so the
// chosen algorithm (and thus round-off) is reproducible across runs.
PlanPair plans_for(std::size_t n) {
    static std::unordered_map<std::size_t, PlanPair> cache;
    std::lock_guard<std::mutex> lock(plan_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<double> re(n, 0.0);
    std::vector<std::complex<double>> cx(n / 2 + 1);
    PlanPair p;
    p.fwd = fftw_plan_dft_r2c_1d(int(n), re.data(),
                                 reinterpret_cast<fftw_complex*>(cx.data()),
                                 FFTW_ESTIMATE);
    p.inv = fftw_plan_dft_c2r_1d(int(n), reinterpret_cast<fftw_complex*>(cx.data()),
                                 re.data(), FFTW_ESTIMATE);
    if (!p.fwd || !p.inv) throw std::runtime_error("fftw plan creation failed");
    cache.emplace(n, p);
    return p;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

std::vector<double> linear_convolve(std::span<const double> ker,
                                    std::span<const double> sig) {
    if (ker.empty() || sig.empty()) return {};
    const std::size_t nfull = ker.size() + sig.size() - 1;
    const std::size_t nfft = next_pow2(nfull);
    PlanPair p = plans_for(nfft);

    std::vector<double> a(nfft, 0.0), b(nfft, 0.0);
    std::memcpy(a.data(), ker.data(), ker.size() * sizeof(double));
    std::memcpy(b.data(), sig.data(), sig.size() * sizeof(double));
    std::vector<std::complex<double>> fa(nfft / 2 + 1), fb(nfft / 2 + 1);
    fftw_execute_dft_r2c(p.fwd, a.data(), reinterpret_cast<fftw_complex*>(fa.data()));
    fftw_execute_dft_r2c(p.fwd, b.data(), reinterpret_cast<fftw_complex*>(fb.data()));
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
    fftw_execute_dft_c2r(p.inv, reinterpret_cast<fftw_complex*>(fa.data()), a.data());
    std::vector<double> out(nfull);
    const double scale = 1.0 / double(nfft);
    for (std::size_t i = 0; i < nfull; ++i) out[i] = a[i] * scale;
    return out;
}

std::vector<double> linear_convolve_naive(std::span<const double> ker,
                                          std::span<const double> sig) {
    if (ker.empty() || sig.empty()) return {};
    std::vector<double> out(ker.size() + sig.size() - 1, 0.0);
    for (std::size_t i = 0; i < ker.size(); ++i) {
        for (std::size_t j = 0; j < sig.size(); ++j) out[i + j] += ker[i] * sig[j];
    }
    return out;
}

std::vector<double> apply_spectral_multiplier(
    std::span<const double> u, double h,
    const std::function<double(double)>& mult) {
    const std::size_t n = u.size();
    if (n == 0) return {};
    if (!(h > 0.0)) throw std::domain_error("apply_spectral_multiplier: h must be > 0");
    PlanPair p = plans_for(n);
    std::vector<double> re(u.begin(), u.end());
    std::vector<std::complex<double>> cx(n / 2 + 1);
    fftw_execute_dft_r2c(p.fwd, re.data(), reinterpret_cast<fftw_complex*>(cx.data()));
    const double dk = 2.0 * 3.14159265358979323846 / (double(n) * h);
    for (std::size_t m = 0; m < cx.size(); ++m) cx[m] *= mult(dk * double(m));
    fftw_execute_dft_c2r(p.inv, reinterpret_cast<fftw_complex*>(cx.data()), re.data());
    const double scale = 1.0 / double(n);
    for (auto& v : re) v *= scale;
    return re;
}

}  // namespace fracto::fft
