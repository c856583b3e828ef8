// Analytic spectra connecting a power-law coupled oscillator chain to its
// fractional continuum limit: the coupling spectrum J_alpha(k) (direct cosine
// sum and zeta-series form), the lattice transform symbol T_{alpha,dx}(k), its
// infrared limit T_alpha(k), the coefficient a_alpha and the crossover
// wavenumber k0 separating |k|^alpha from k^2 dispersion.
//
// All functions are pure; errors are reported as std::domain_error.

#pragma once

#include <stdexcept>
#include <string>

namespace fracto::kernel {

/// Interaction exponent alpha, 0 < alpha < 4. Integer values are representable
/// (the direct cosine sum is defined there) but operations built on Gamma(-alpha)
/// or the zeta series must call require_non_integer() first.
class FractionalOrder {
public:
    explicit FractionalOrder(double alpha);

    double value() const { return alpha_; }

    /// True when alpha is within `tol` of an integer.
    bool near_integer(double tol = 1e-9) const;

    /// Throws std::domain_error when alpha is within 1e-9 of an integer.
    void require_non_integer(const char* operation) const;

private:
    double alpha_;
};

/// One sample of a spectrum: wavenumber and value.
struct SpectrumSample {
    double k = 0.0;
    double value = 0.0;
};

/// Truncated direct cosine sum with its analytic tail bound.
struct CouplingSum {
    double value = 0.0;       // 2 * sum_{n=1..n_max} cos(k n dx) / n^(1+alpha)
    double tail_bound = 0.0;  // 2 * n_max^(-alpha) / alpha
};

/// Zeta-series evaluation of the coupling spectrum.
struct SeriesSum {
    double value = 0.0;
    bool tail_decreasing = true;  // term magnitudes decreasing at truncation
};

/// Gamma(x) for real x, poles at non-positive integers rejected (within 1e-12).
/// Negative non-integer arguments are lifted to the positive axis by the
/// recurrence Gamma(x) = Gamma(x+n) / (x (x+1) ... (x+n-1)).
double gamma_real(double x);

/// Riemann zeta for real s != 1 (|s-1| > 1e-9). Uses Borwein's alternating
/// series for s >= 0 and the functional equation for s < 0.
double riemann_zeta(double s);

/// a_alpha = 2 Gamma(-alpha) cos(pi alpha / 2); requires non-integer alpha.
double a_alpha(const FractionalOrder& order);

/// Truncated direct sum 2 sum_{n=1..n_max} cos(k n dx) / n^(1+alpha), with the
/// monotone tail bound 2 n_max^(-alpha)/alpha attached. Requires n_max >= 1000.
CouplingSum coupling_spectrum_direct(const FractionalOrder& order, double k,
                                     double dx, long n_max);

/// Direct sum plus the closed-form asymptotic tail of the oscillatory series
/// (Abel partial summation; Euler-Maclaurin at k dx = 0 mod 2pi). Converges
/// past the raw n_max^(-alpha) truncation floor; used wherever the direct sum
/// must meet the series representation below 1e-6.
double coupling_spectrum_direct_refined(const FractionalOrder& order, double k,
                                        double dx, long n_max);

/// Series form a_alpha |dx|^alpha |k|^alpha
///   + 2 sum_{n>=0} zeta(1+alpha-2n)/(2n)! dx^(2n) (-k^2)^n,
/// valid for |k dx| < 2 pi; requires non-integer alpha and n_terms <= 80.
/// Stops early once a term falls below 1e-14 of the running sum.
SeriesSum coupling_spectrum_series(const FractionalOrder& order, double k,
                                   double dx, int n_terms);

/// Lattice transform symbol:
///   a_alpha |k|^alpha - |dx|^(2-alpha) zeta(alpha-1) k^2   (0 < alpha < 2)
///   |dx|^(alpha-2) a_alpha |k|^alpha - zeta(alpha-1) k^2   (2 < alpha < 4)
/// alpha in {1, 2, 3} (within 1e-9) rejected.
double transform_symbol(const FractionalOrder& order, double k, double dx);

/// Infrared limit of the transform symbol:
///   a_alpha |k|^alpha        (0 < alpha < 2)
///   -zeta(alpha-1) k^2       (2 < alpha < 4)
double continuum_symbol(const FractionalOrder& order, double k);

/// Crossover wavenumber k0 = |a_alpha / zeta(alpha-1)|^(1/(2-alpha)) / |dx|.
double crossover_k0(const FractionalOrder& order, double dx);

}  // namespace fracto::kernel
