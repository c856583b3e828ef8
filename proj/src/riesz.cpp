#include "fracto/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracto/fastconv.hpp"

namespace fracto::riesz {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

long floor_slots(double x, double h) {
    // floor(x / h) robust to the representation noise of grid arithmetic
    return long(std::floor(x / h + 1e-9));
}

void check_weight_length(const GlWeights& w, std::size_t needed, const char* op) {
    if (w.w.size() < needed + 1) {
        throw std::invalid_argument(std::string(op) + ": weight table too short (" +
                                    std::to_string(w.w.size()) + " < " +
                                    std::to_string(needed + 1) + ")");
    }
}

}  // namespace

GlWeights gl_weights(const kernel::FractionalOrder& order, std::size_t count) {
    const double al = order.value();
    const bool classical = std::fabs(al - 2.0) <= 1e-9;
    if (!classical) order.require_non_integer("gl_weights");
    GlWeights out;
    out.alpha = al;
    out.w.resize(count + 1);
    out.w[0] = 1.0;
    for (std::size_t q = 1; q <= count; ++q) {
        out.w[q] = (1.0 - (al + 1.0) / double(q)) * out.w[q - 1];
    }
    if (!classical) {
        for (std::size_t q : {std::size_t(1), std::size_t(7), count}) {
            if (q == 0 || q > count) continue;
            const double ref = gl_weight_gamma_form(al, long(q));
            if (std::fabs(out.w[q] - ref) > 1e-10 * std::max(1.0, std::fabs(ref))) {
                throw std::logic_error("gl_weights: recursion disagrees with Gamma form");
            }
        }
    }
    return out;
}

double gl_weight_gamma_form(double alpha, long q) {
    if (q == 0) return 1.0;
    const double x = double(q) - alpha;
    if (x > 0.0) {
        // lgamma-based ratio keeps q ~ 1e3 well inside double range
        const double mag = std::exp(std::lgamma(x) - std::lgamma(double(q) + 1.0));
        return mag / kernel::gamma_real(-alpha);
    }
    return kernel::gamma_real(x) /
           (std::tgamma(double(q) + 1.0) * kernel::gamma_real(-alpha));
}

double gl_weight_partial_sum(const GlWeights& weights, std::size_t upto) {
    check_weight_length(weights, upto, "gl_weight_partial_sum");
    double s = 0.0;
    for (std::size_t q = 0; q <= upto; ++q) s += weights.w[q];
    return s;
}

namespace detail {

ExtendedField::ExtendedField(const GridFunction& u, double half_length,
                             EdgePolicy policy)
    : u_(u), policy_(policy) {
    if (policy != EdgePolicy::ZeroOutside) {
        const double slots = 2.0 * half_length / u.h;
        period_slots_ = long(std::llround(slots));
        if (period_slots_ < long(u.size()) ||
            std::fabs(slots - double(period_slots_)) > 1e-6) {
            throw std::invalid_argument(
                "ExtendedField: periodic/kink extension needs 2L to be an integer "
                "number of grid steps covering the stored span");
        }
    }
}

double ExtendedField::at(long j) const {
    const long n = long(u_.size());
    if (j >= 0 && j < n) return u_.values[std::size_t(j)];
    if (policy_ == EdgePolicy::ZeroOutside) return 0.0;
    const long P = period_slots_;
    long wraps = j / P;
    long jm = j - wraps * P;
    if (jm < 0) {
        jm += P;
        wraps -= 1;
    }
    const double offset =
        (policy_ == EdgePolicy::KinkExtension) ? kTwoPi * double(wraps) : 0.0;
    if (jm < n) return u_.values[std::size_t(jm)] + offset;
    // gap between the last stored slot and the next period's first slot
    const double f = double(jm - (n - 1)) / double(P - (n - 1));
    const double kink_step =
        (policy_ == EdgePolicy::KinkExtension) ? kTwoPi : 0.0;
    return (1.0 - f) * u_.values[std::size_t(n - 1)] +
           f * (u_.values[0] + kink_step) + offset;
}

}  // namespace detail

namespace {

// Shared core of the one-sided sums. `dir` = -1 for left (samples x - q h),
// +1 for right; `shift` = 1 applies the one-node shift u(x -/+ (q-1) h).
GridFunction one_sided_sum(const GridFunction& u, const RieszOperatorConfig& cfg,
                           const GlWeights& weights, int dir, int shift) {
    if (u.size() == 0) return u;
    if (std::fabs(cfg.h - u.h) > 1e-12 * std::max(1.0, std::fabs(u.h))) {
        throw std::invalid_argument("riesz: cfg.h must equal the grid spacing of u");
    }
    const long n = long(u.size());
    const double L = cfg.half_length;
    const long pad_left = floor_slots(u.x0 + L, u.h);
    const long pad_right = floor_slots(L - u.x(u.size() - 1), u.h);
    if (pad_left < 0 || pad_right < 0) {
        throw std::invalid_argument("riesz: grid extends beyond the interval (-L, L)");
    }
    const long pad = (dir < 0) ? pad_left : pad_right;
    const long kmax = n - 1 + pad;  // largest term count over the grid
    check_weight_length(weights, std::size_t(kmax + shift), "riesz one-sided sum");
    const detail::ExtendedField ext(u, L, cfg.edge_policy);
    const double scale = std::pow(u.h, -weights.alpha);

    GridFunction out;
    out.x0 = u.x0;
    out.h = u.h;
    out.values.assign(u.size(), 0.0);

    if (cfg.accelerate) {
        // The K-limited sum is a causal convolution over the policy-resolved
        // slots. The lowest slot any legal term references is shift - pad, so
        // starting E2 there lets the convolution's implicit zero padding
        // realize the K cut exactly (q <= pad + i).
        const long elo = shift - pad;
        const long ehi = n - 1 + shift;
        std::vector<double> e2(std::size_t(ehi - elo + 1));
        for (long j = elo; j <= ehi; ++j) {
            e2[std::size_t(j - elo)] = ext.at(dir < 0 ? j : (n - 1 - j));
        }
        std::vector<double> ker(weights.w.begin(),
                                weights.w.begin() + std::size_t(kmax + shift) + 1);
        const auto conv = fft::linear_convolve(ker, e2);
        for (long i = 0; i < n; ++i) {
            const double v = conv[std::size_t(i + pad)];
            out.values[std::size_t(dir < 0 ? i : (n - 1 - i))] = v * scale;
        }
        return out;
    }

    for (long i = 0; i < n; ++i) {
        const double x = u.x(std::size_t(i));
        const long K = (dir < 0) ? floor_slots(x + L, u.h) : floor_slots(L - x, u.h);
        double s = 0.0;
        for (long q = 0; q <= K; ++q) {
            s += weights.w[std::size_t(q)] * ext.at(i + dir * (q - shift));
        }
        out.values[std::size_t(i)] = s * scale;
    }
    return out;
}

GridFunction gl_combined(const GridFunction& u, const RieszOperatorConfig& cfg,
                         const kernel::FractionalOrder& order, int shift) {
    const double al = order.value();
    const long n = long(u.size());
    const long pad_left = floor_slots(u.x0 + cfg.half_length, u.h);
    const long pad_right = floor_slots(cfg.half_length - (u.x0 + double(n - 1) * u.h), u.h);
    const std::size_t kmax =
        std::size_t(n - 1 + std::max(pad_left, pad_right) + shift);
    const GlWeights w = gl_weights(order, kmax);
    GridFunction left = one_sided_sum(u, cfg, w, -1, shift);
    const GridFunction right = one_sided_sum(u, cfg, w, +1, shift);
    const double pref = -1.0 / (2.0 * std::cos(0.5 * kPi * al));
    for (std::size_t i = 0; i < left.size(); ++i) {
        left.values[i] = pref * (left.values[i] + right.values[i]);
    }
    return left;
}

}  // namespace

GridFunction rl_left(const GridFunction& u, const RieszOperatorConfig& cfg,
                     const GlWeights& weights) {
    return one_sided_sum(u, cfg, weights, -1, 0);
}

GridFunction rl_right(const GridFunction& u, const RieszOperatorConfig& cfg,
                      const GlWeights& weights) {
    return one_sided_sum(u, cfg, weights, +1, 0);
}

GridFunction riesz_apply(const GridFunction& u, const RieszOperatorConfig& cfg,
                         const kernel::FractionalOrder& order) {
    const double al = order.value();
    const bool classical = std::fabs(al - 2.0) <= 1e-9;
    if (!classical) {
        if (al >= 2.0) {
            throw std::domain_error("riesz_apply: requires alpha in (0,2] ");
        }
        if (std::fabs(al - 1.0) <= 1e-9) {
            throw std::domain_error("riesz_apply: alpha = 1 (cos(pi alpha/2) = 0)");
        }
    }
    switch (cfg.scheme) {
        case Scheme::GL:
            return gl_combined(u, cfg, order, 0);
        case Scheme::GLShifted:
            return gl_combined(u, cfg, order, 1);
        case Scheme::IntegralB:
            return riesz_integral_b(u, cfg, order);
        case Scheme::SpectralOracle:
            return spectral_oracle(u, order);
    }
    throw std::logic_error("riesz_apply: unknown scheme");
}

GridFunction riesz_integral_b(const GridFunction& u, const RieszOperatorConfig& cfg,
                              const kernel::FractionalOrder& order) {
    const double al = order.value();
    if (!(al > 0.0 && al < 2.0) || std::fabs(al - 1.0) <= 1e-9) {
        throw std::domain_error("riesz_integral_b: requires alpha in (0,2), alpha != 1");
    }
    if (u.size() == 0) return u;
    const long n = long(u.size());
    const double L = cfg.half_length;
    const double h = u.h;
    // midpoint nodes eta_j = (j - 1/2) h, eta_j <= L
    const long jmax = long(std::floor(L / h + 0.5 - 1e-9));
    if (jmax < 1) throw std::invalid_argument("riesz_integral_b: L < h/2");
    const double pref =
        kernel::gamma_real(1.0 + al) / kPi * std::sin(0.5 * kPi * al);
    std::vector<double> c(std::size_t(jmax) + 1, 0.0);  // c[j] = h / eta_j^(1+alpha)
    for (long j = 1; j <= jmax; ++j) {
        c[std::size_t(j)] = h * std::pow((double(j) - 0.5) * h, -(1.0 + al));
    }
    const detail::ExtendedField ext(u, L, cfg.edge_policy);

    GridFunction out;
    out.x0 = u.x0;
    out.h = u.h;
    out.values.assign(u.size(), 0.0);

    if (cfg.accelerate) {
        // Half-offset samples interpolate onto neighbouring slots, so the whole
        // quadrature collapses to one symmetric kernel of reach jmax.
        std::vector<double> ker(std::size_t(2 * jmax + 1), 0.0);
        double csum = 0.0;
        for (long j = 1; j <= jmax; ++j) {
            const double cj = c[std::size_t(j)];
            csum += cj;
            ker[std::size_t(jmax + j)] += 0.5 * cj;
            ker[std::size_t(jmax + j - 1)] += 0.5 * cj;
            ker[std::size_t(jmax - j)] += 0.5 * cj;
            ker[std::size_t(jmax - j + 1)] += 0.5 * cj;
        }
        ker[std::size_t(jmax)] -= 2.0 * csum;
        std::vector<double> e(std::size_t(n + 2 * jmax));
        for (long j = -jmax; j < n + jmax; ++j) {
            e[std::size_t(j + jmax)] = ext.at(j);
        }
        const auto conv = fft::linear_convolve(ker, e);
        for (long i = 0; i < n; ++i) {
            out.values[std::size_t(i)] = pref * conv[std::size_t(i + 2 * jmax)];
        }
        return out;
    }

    for (long i = 0; i < n; ++i) {
        const double u_i = u.values[std::size_t(i)];
        double s = 0.0;
        for (long j = 1; j <= jmax; ++j) {
            const double up = 0.5 * (ext.at(i + j - 1) + ext.at(i + j));
            const double um = 0.5 * (ext.at(i - j + 1) + ext.at(i - j));
            s += c[std::size_t(j)] * (up - 2.0 * u_i + um);
        }
        out.values[std::size_t(i)] = pref * s;
    }
    return out;
}

GridFunction spectral_oracle(const GridFunction& u,
                             const kernel::FractionalOrder& order) {
    const double al = order.value();
    GridFunction out;
    out.x0 = u.x0;
    out.h = u.h;
    out.values = fft::apply_spectral_multiplier(
        u.values, u.h, [al](double k) { return -std::pow(k, al); });
    return out;
}

}  // namespace fracto::riesz
