// Grid discretizations of the Riesz fractional derivative of order
// alpha in (0,2): Grunwald-Letnikov sums (plain and one-node shifted) built
// from the finite-interval left/right Riemann-Liouville derivatives, the
// truncated singular-integral form (composite midpoint rule), and a periodic
// spectral reference used as a test oracle.
//
// The finite-interval sums carry per-point term counts
//   K-(x) = floor((x+L)/h),  K+(x) = floor((L-x)/h);
// referenced samples that fall outside the stored grid are resolved by the
// configured edge policy.

#pragma once

#include <cstddef>
#include <vector>

#include "fracto/kernel.hpp"

namespace fracto::riesz {

/// Uniformly spaced samples: values[i] lives at x0 + i*h.
struct GridFunction {
    double x0 = 0.0;
    double h = 1.0;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double x(std::size_t i) const { return x0 + double(i) * h; }
};

enum class EdgePolicy {
    ZeroOutside,         // samples beyond the stored grid are 0
    PeriodicExtension,   // u(x + 2L) = u(x)
    KinkExtension,       // u(x + 2L) = u(x) + 2 pi
};

enum class Scheme {
    GL,             // plain Grunwald-Letnikov
    GLShifted,      // one-node shifted variant
    IntegralB,      // truncated singular integral, composite midpoint rule
    SpectralOracle, // periodic DFT multiplier -|k|^alpha (reference)
};

struct RieszOperatorConfig {
    double h = 1.0;            // operator grid spacing (== grid spacing of u)
    double half_length = 0.0;  // L of the finite interval (-L, L)
    Scheme scheme = Scheme::GL;
    EdgePolicy edge_policy = EdgePolicy::ZeroOutside;
    bool accelerate = true;    // FFT Toeplitz path (validated against the loops)
};

/// Grunwald-Letnikov weight table w_0..w_count built by the recursion
/// w_q = (1 - (alpha+1)/q) w_{q-1}, w_0 = 1, spot-validated against the
/// Gamma-ratio form at q in {1, 7, count}.
struct GlWeights {
    double alpha = 0.0;
    std::vector<double> w;
};

/// alpha must be non-integer, or exactly 2 (classical reduction, zero tail).
GlWeights gl_weights(const kernel::FractionalOrder& order, std::size_t count);

/// Gamma-ratio form w_q = Gamma(q - alpha) / (Gamma(1+q) Gamma(-alpha)).
double gl_weight_gamma_form(double alpha, long q);

/// Left / right finite-interval Riemann-Liouville sums
///   (rl_left u)(x)  = h^-alpha sum_{q=0..K-} w_q u(x - q h)
///   (rl_right u)(x) = h^-alpha sum_{q=0..K+} w_q u(x + q h)
/// The weight table must extend to max(K-, K+) (+1 when the shifted scheme
/// will consume the result).
GridFunction rl_left(const GridFunction& u, const RieszOperatorConfig& cfg,
                     const GlWeights& weights);
GridFunction rl_right(const GridFunction& u, const RieszOperatorConfig& cfg,
                      const GlWeights& weights);

/// Riesz derivative via the configured scheme. GL / GLShifted combine the
/// one-sided sums as -(2 cos(pi alpha/2))^-1 (left + right); IntegralB and
/// SpectralOracle dispatch to the forms below. alpha in (0,2], alpha != 1
/// (alpha = 2 supported as the classical second-derivative reduction).
GridFunction riesz_apply(const GridFunction& u, const RieszOperatorConfig& cfg,
                         const kernel::FractionalOrder& order);

/// Truncated singular-integral form
///   Gamma(1+alpha)/pi sin(alpha pi/2)
///     int_0^L [u(x+eta) - 2u(x) + u(x-eta)] / eta^(1+alpha) d eta
/// by the composite midpoint rule on eta_j = (j-1/2) h; samples at half-node
/// offsets are linearly interpolated, exterior samples follow the edge policy.
GridFunction riesz_integral_b(const GridFunction& u, const RieszOperatorConfig& cfg,
                              const kernel::FractionalOrder& order);

/// Periodic spectral reference: multiplies DFT modes by -|k|^alpha. Treats u
/// as one period; ignores the edge policy.
GridFunction spectral_oracle(const GridFunction& u,
                             const kernel::FractionalOrder& order);

/// Partial sum S_Q = sum_{q=0..Q} w_q; tends to 0 for alpha in (0,2) and
/// bounds the response of the one-sided sums to a constant field.
double gl_weight_partial_sum(const GlWeights& weights, std::size_t upto);

namespace detail {

/// Edge-policy sample resolver over lattice slots j (value at x0 + j*h for
/// any integer j). Periodic/Kink extensions require 2L to be an integer
/// number of lattice steps; positions inside the period but beyond the stored
/// span (the "gap" around +-L) are linearly interpolated across the seam.
class ExtendedField {
public:
    ExtendedField(const GridFunction& u, double half_length, EdgePolicy policy);
    double at(long j) const;

private:
    const GridFunction& u_;
    EdgePolicy policy_;
    long period_slots_ = 0;  // 2L / h
};

}  // namespace detail

}  // namespace fracto::riesz
