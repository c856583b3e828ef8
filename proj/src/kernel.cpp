#include "fracto/kernel.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace fracto::kernel {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Borwein (1995), algorithm 2: eta-accelerated alternating series. The
// Chebyshev-derived d_k give error ~ (3+sqrt(8))^-n, far below double
// precision at n = 50 for real s >= 0.
constexpr int kBorweinN = 50;

const std::array<double, kBorweinN + 1>& borwein_d() {
    static const std::array<double, kBorweinN + 1> d = [] {
        std::array<double, kBorweinN + 1> out{};
        double term = 1.0;  // (n+j-1)! 4^j / ((n-j)! (2j)!) at j=0 -> 1
        double acc = 1.0;
        out[0] = 1.0;
        for (int j = 1; j <= kBorweinN; ++j) {
            // ratio between consecutive inner terms
            term *= 4.0 * (kBorweinN + j - 1.0) * (kBorweinN - j + 1.0)
                    / ((2.0 * j) * (2.0 * j - 1.0));
            acc += term;
            out[j] = acc;
        }
        for (auto& v : out) v *= kBorweinN;
        return out;
    }();
    return d;
}

double zeta_borwein(double s) {
    const auto& d = borwein_d();
    double sum = 0.0;
    for (int k = 0; k < kBorweinN; ++k) {
        const double t = (d[k] - d[kBorweinN]) / std::pow(k + 1.0, s);
        sum += (k % 2 == 0) ? t : -t;
    }
    return -sum / (d[kBorweinN] * (1.0 - std::pow(2.0, 1.0 - s)));
}

}  // namespace

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 4.0)) {
        throw std::domain_error("FractionalOrder: alpha must lie in (0, 4), got " +
                                std::to_string(alpha));
    }
}

bool FractionalOrder::near_integer(double tol) const {
    return std::fabs(alpha_ - std::round(alpha_)) <= tol;
}

void FractionalOrder::require_non_integer(const char* operation) const {
    if (near_integer()) {
        throw std::domain_error(std::string(operation) +
                                ": alpha must not be an integer, got " +
                                std::to_string(alpha_));
    }
}

double gamma_real(double x) {
    if (x <= 0.0 && std::fabs(x - std::round(x)) <= 1e-12) {
        throw std::domain_error("gamma_real: pole at non-positive integer x = " +
                                std::to_string(x));
    }
    if (x > 0.0) return std::tgamma(x);
    // Lift to the positive axis: Gamma(x) = Gamma(x+n) / prod_{j=0..n-1} (x+j).
    double prod = 1.0;
    double y = x;
    while (y < 0.0) {
        prod *= y;
        y += 1.0;
    }
    if (y == 0.0) throw std::domain_error("gamma_real: pole at 0");
    return std::tgamma(y) / prod;
}

double riemann_zeta(double s) {
    if (std::fabs(s - 1.0) <= 1e-9) {
        throw std::domain_error("riemann_zeta: pole at s = 1");
    }
    if (s >= 0.0) return zeta_borwein(s);
    // trivial zeros at even negative integers
    if (s == std::round(s) && std::llround(s) % 2 == 0) return 0.0;
    // Functional equation: zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s).
    const double sin_term = std::sin(0.5 * kPi * s);
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * sin_term *
           std::tgamma(1.0 - s) * zeta_borwein(1.0 - s);
}

double a_alpha(const FractionalOrder& order) {
    order.require_non_integer("a_alpha");
    const double al = order.value();
    return 2.0 * gamma_real(-al) * std::cos(0.5 * kPi * al);
}

CouplingSum coupling_spectrum_direct(const FractionalOrder& order, double k,
                                     double dx, long n_max) {
    const double al = order.value();
    if (n_max < 1000) {
        throw std::domain_error("coupling_spectrum_direct: n_max must be >= 1000");
    }
    // Kahan summation: n_max ~ 1e6 terms must not erode the 1e-12 comparisons.
    double sum = 0.0, comp = 0.0;
    for (long n = 1; n <= n_max; ++n) {
        const double t = std::cos(k * n * dx) * std::pow(double(n), -(1.0 + al));
        const double y = t - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    CouplingSum out;
    out.value = 2.0 * sum;
    out.tail_bound = 2.0 * std::pow(double(n_max), -al) / al;
    return out;
}

double coupling_spectrum_direct_refined(const FractionalOrder& order, double k,
                                        double dx, long n_max) {
    const CouplingSum raw = coupling_spectrum_direct(order, k, dx, n_max);
    const double al = order.value();
    const double theta = k * dx;
    const double N1 = double(n_max) + 1.0;
    // Tail sum_{n>n_max} cos(theta n) n^-(1+alpha):
    //  - theta != 0 (mod 2pi): Abel summation, leading term
    //      Re[e^{i theta (N+1)} / (1 - e^{i theta})] (N+1)^-(1+alpha),
    //    remainder O(N^-(2+alpha)).
    //  - theta == 0 (mod 2pi): Euler-Maclaurin midpoint tail (N+1/2)^-alpha / alpha.
    const double half = std::sin(0.5 * theta);
    double tail;
    if (std::fabs(half) > 1e-12) {
        // Re[e^{i a} / (1 - e^{i t})] with a = theta (N+1)
        const double a = theta * N1;
        const double re = 1.0 - std::cos(theta);
        const double im = -std::sin(theta);
        const double den = re * re + im * im;
        const double re_q = (std::cos(a) * re - std::sin(a) * im) / den;
        tail = re_q * std::pow(N1, -(1.0 + al));
    } else {
        tail = std::pow(double(n_max) + 0.5, -al) / al;
    }
    return raw.value + 2.0 * tail;
}

SeriesSum coupling_spectrum_series(const FractionalOrder& order, double k,
                                   double dx, int n_terms) {
    order.require_non_integer("coupling_spectrum_series");
    const double al = order.value();
    if (std::fabs(k * dx) >= 2.0 * kPi) {
        throw std::domain_error(
            "coupling_spectrum_series: series requires |k dx| < 2 pi");
    }
    if (n_terms < 1 || n_terms > 80) {
        throw std::domain_error("coupling_spectrum_series: n_terms must be in [1, 80]");
    }
    SeriesSum out;
    double sum = riemann_zeta(1.0 + al);  // n = 0 term (before factor 2)
    double fact = 1.0;                    // (2n)!
    double powdx = 1.0;                   // dx^(2n)
    double powk = 1.0;                    // (-k^2)^n
    double prev_mag = std::numeric_limits<double>::infinity();
    bool decreasing = true;
    for (int n = 1; n < n_terms; ++n) {
        fact *= (2.0 * n - 1.0) * (2.0 * n);
        powdx *= dx * dx;
        powk *= -(k * k);
        const double term = riemann_zeta(1.0 + al - 2.0 * n) / fact * powdx * powk;
        sum += term;
        const double mag = std::fabs(term);
        if (mag < 1e-14 * std::fabs(sum)) {
            prev_mag = mag;
            break;
        }
        decreasing = mag < prev_mag;
        prev_mag = mag;
    }
    out.value = a_alpha(order) * std::pow(std::fabs(dx), al) * std::pow(std::fabs(k), al)
                + 2.0 * sum;
    out.tail_decreasing = decreasing;
    return out;
}

namespace {

// Shared branch guard for the transform symbols.
void require_branch_alpha(const FractionalOrder& order, const char* op) {
    order.require_non_integer(op);
    const double al = order.value();
    if (!(al > 0.0 && al < 4.0) || std::fabs(al - 2.0) <= 1e-9) {
        throw std::domain_error(std::string(op) +
                                ": alpha must lie in (0,2) or (2,4)");
    }
}

}  // namespace

double transform_symbol(const FractionalOrder& order, double k, double dx) {
    require_branch_alpha(order, "transform_symbol");
    const double al = order.value();
    const double aa = a_alpha(order);
    const double z = riemann_zeta(al - 1.0);
    const double kk = std::fabs(k);
    if (al < 2.0) {
        return aa * std::pow(kk, al) - std::pow(std::fabs(dx), 2.0 - al) * z * k * k;
    }
    return std::pow(std::fabs(dx), al - 2.0) * aa * std::pow(kk, al) - z * k * k;
}

double continuum_symbol(const FractionalOrder& order, double k) {
    require_branch_alpha(order, "continuum_symbol");
    const double al = order.value();
    if (al < 2.0) return a_alpha(order) * std::pow(std::fabs(k), al);
    return -riemann_zeta(al - 1.0) * k * k;
}

double crossover_k0(const FractionalOrder& order, double dx) {
    require_branch_alpha(order, "crossover_k0");
    if (!(dx > 0.0)) throw std::domain_error("crossover_k0: dx must be positive");
    const double al = order.value();
    const double ratio = std::fabs(a_alpha(order) / riemann_zeta(al - 1.0));
    return std::pow(ratio, 1.0 / (2.0 - al)) / dx;
}

}  // namespace fracto::kernel
