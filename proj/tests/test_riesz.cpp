#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fracto/riesz.hpp"
#include "oracle_constants.hpp"

using namespace fracto;
using namespace fracto::riesz;

namespace {

constexpr double kPi = 3.14159265358979323846;

GridFunction make_grid(std::size_t n, double h, double center = 0.0) {
    GridFunction g;
    g.h = h;
    g.x0 = center - double(n - 1) / 2.0 * h;
    g.values.assign(n, 0.0);
    return g;
}

GridFunction cosine_grid(std::size_t n, double h, double k) {
    GridFunction g = make_grid(n, h);
    for (std::size_t i = 0; i < n; ++i) g.values[i] = std::cos(k * g.x(i));
    return g;
}

RieszOperatorConfig config_for(const GridFunction& g, double L, Scheme s,
                               EdgePolicy p, bool accel = true) {
    RieszOperatorConfig cfg;
    cfg.h = g.h;
    cfg.half_length = L;
    cfg.scheme = s;
    cfg.edge_policy = p;
    cfg.accelerate = accel;
    return cfg;
}

}  // namespace

TEST_CASE("gl_weights: recursion, signs, spot values") {
    const auto w = gl_weights(kernel::FractionalOrder(0.5), 1000);
    CHECK(w.w[0] == 1.0);
    CHECK(w.w[1] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(w.w[2] == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(w.w[3] == doctest::Approx(-0.0625).epsilon(1e-15));
    CHECK(w.w[7] == doctest::Approx(-0.01611328125).epsilon(1e-14));
    // alpha in (0,1): negative for q >= 1
    for (std::size_t q = 1; q <= 20; ++q) CHECK(w.w[q] < 0.0);

    const auto w2 = gl_weights(kernel::FractionalOrder(1.21), 100);
    CHECK(w2.w[1] == doctest::Approx(-1.21).epsilon(1e-15));  // w1 = -alpha
    CHECK(w2.w[1] < 0.0);
    CHECK(w2.w[2] > 0.0);  // alpha in (1,2) sign pattern

    // alpha = 2 reduction: (1, -2, 1, 0, 0, ...)
    const auto wc = gl_weights(kernel::FractionalOrder(2.0), 10);
    CHECK(wc.w[0] == 1.0);
    CHECK(wc.w[1] == -2.0);
    CHECK(wc.w[2] == 1.0);
    for (std::size_t q = 3; q <= 10; ++q) CHECK(wc.w[q] == 0.0);

    CHECK_THROWS_AS(gl_weights(kernel::FractionalOrder(3.0), 4), std::domain_error);
}

TEST_CASE("gl_weights: recursion equals Gamma form to 1e-12 relative") {
    for (double alpha : {0.5, 1.21, 1.51, 1.91}) {
        const auto w = gl_weights(kernel::FractionalOrder(alpha), 1000);
        for (long q : {1L, 2L, 5L, 17L, 100L, 500L, 1000L}) {
            const double ref = gl_weight_gamma_form(alpha, q);
            CHECK(std::fabs(w.w[std::size_t(q)] - ref) <=
                  1e-12 * std::max(std::fabs(ref), 1e-300));
        }
    }
}

TEST_CASE("gl_weights: partial sums tend to zero, monotone in magnitude") {
    for (double alpha : {0.5, 1.21, 1.91}) {
        const auto w = gl_weights(kernel::FractionalOrder(alpha), 4000);
        double prev = std::fabs(gl_weight_partial_sum(w, 4));
        for (std::size_t q : {16u, 64u, 256u, 1024u, 4000u}) {
            const double s = std::fabs(gl_weight_partial_sum(w, q));
            CHECK(s < prev);
            prev = s;
        }
        CHECK(prev < 1e-2);
    }
}

TEST_CASE("rl_left / rl_right: zero field and constant-field bound") {
    const std::size_t n = 201;
    GridFunction g = make_grid(n, 0.1);
    const double L = 12.0;
    const auto w = gl_weights(kernel::FractionalOrder(1.21), 400);
    auto cfg = config_for(g, L, Scheme::GL, EdgePolicy::ZeroOutside);

    auto left = rl_left(g, cfg, w);
    auto right = rl_right(g, cfg, w);
    for (double v : left.values) CHECK(v == 0.0);
    for (double v : right.values) CHECK(v == 0.0);

    // constant c with the constant periodic continuation: the left sum is
    // exactly c h^-alpha S_K with S_K the runtime partial sum of the weights
    const double c = 3.7;
    for (auto& v : g.values) v = c;
    auto cfg_per = config_for(g, L, Scheme::GL, EdgePolicy::PeriodicExtension);
    left = rl_left(g, cfg_per, w);
    const double scale = std::pow(g.h, -1.21);
    for (std::size_t i = 0; i < n; ++i) {
        const long K = long(std::floor((g.x(i) + L) / g.h + 1e-9));
        const double bound =
            c * scale * std::fabs(gl_weight_partial_sum(w, std::size_t(K)));
        CHECK(std::fabs(left.values[i]) <= bound * (1.0 + 1e-9) + 1e-12);
        CHECK(std::fabs(left.values[i]) ==
              doctest::Approx(bound).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("fast Toeplitz path equals the direct loops") {
    std::mt19937 rng(11);
    std::normal_distribution<double> dist;
    for (double alpha : {0.5, 1.21, 1.91}) {
        for (auto policy : {EdgePolicy::ZeroOutside, EdgePolicy::PeriodicExtension,
                            EdgePolicy::KinkExtension}) {
            // grid mimicking the continuum solver: n = 2N+1 points spacing h,
            // 2L = (2N+2) h
            const std::size_t n = 81;
            const double h = 0.25;
            const double L = double(n + 1) / 2.0 * h;
            GridFunction g = make_grid(n, h);
            for (auto& v : g.values) v = dist(rng);
            for (auto scheme : {Scheme::GL, Scheme::GLShifted, Scheme::IntegralB}) {
                auto fast = config_for(g, L, scheme, policy, true);
                auto slow = config_for(g, L, scheme, policy, false);
                const auto a = riesz_apply(g, fast, kernel::FractionalOrder(alpha));
                const auto b = riesz_apply(g, slow, kernel::FractionalOrder(alpha));
                double scale = 0.0;
                for (double v : b.values) scale = std::max(scale, std::fabs(v));
                for (std::size_t i = 0; i < n; ++i) {
                    CHECK(std::fabs(a.values[i] - b.values[i]) <= 1e-12 * scale);
                }
            }
        }
    }
}

TEST_CASE("riesz_apply: alpha = 2 shifted scheme is the 3-point second difference") {
    std::mt19937 rng(3);
    std::normal_distribution<double> dist;
    const std::size_t n = 64;
    const double h = 0.2;
    GridFunction g = make_grid(n, h);
    for (auto& v : g.values) v = dist(rng);
    const double L = double(n + 1) / 2.0 * h;
    auto cfg = config_for(g, L, Scheme::GLShifted, EdgePolicy::ZeroOutside);
    const auto out = riesz_apply(g, cfg, kernel::FractionalOrder(2.0));
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double stencil =
            (g.values[i + 1] - 2.0 * g.values[i] + g.values[i - 1]) / (h * h);
        CHECK(out.values[i] == doctest::Approx(stencil).epsilon(1e-12));
    }
}

TEST_CASE("riesz_apply: symbol accuracy on cos(kx), alpha = 1.5") {
    // center-region relative error <= 2% at h = 0.05, k = 0.2 for both GL
    // variants, first-order decay under h halving
    const double alpha = 1.5;
    const double k = 0.2;
    const double L = 51.2;
    for (auto scheme : {Scheme::GL, Scheme::GLShifted}) {
        double prev_err = 0.0;
        for (double h : {0.2, 0.1, 0.05}) {
            const std::size_t n = std::size_t(std::llround(2.0 * L / h)) - 1;
            GridFunction g = cosine_grid(n, h, k);
            auto cfg = config_for(g, L, scheme, EdgePolicy::PeriodicExtension);
            const auto out = riesz_apply(g, cfg, kernel::FractionalOrder(alpha));
            const double sym = std::pow(k, alpha);
            double err = 0.0;
            for (std::size_t i = n / 2 - n / 8; i <= n / 2 + n / 8; ++i) {
                err = std::max(err, std::fabs(out.values[i] + sym * std::cos(k * g.x(i))));
            }
            err /= sym;
            if (h == 0.05) CHECK(err <= 0.02);
            if (prev_err > 0.0) {
                CHECK(prev_err / err > 1.5);
                CHECK(prev_err / err < 2.5);
            }
            prev_err = err;
        }
    }
}

TEST_CASE("riesz_integral_b: constant annihilated exactly, evenness") {
    const std::size_t n = 301;
    const double h = 0.25;
    const double L = double(n + 1) / 2.0 * h;
    GridFunction g = make_grid(n, h);
    for (auto& v : g.values) v = 2.5;
    auto cfg = config_for(g, L, Scheme::IntegralB, EdgePolicy::PeriodicExtension);
    const auto out = riesz_integral_b(g, cfg, kernel::FractionalOrder(1.21));
    for (double v : out.values) CHECK(std::fabs(v) < 1e-12);

    // even input -> even output
    for (std::size_t i = 0; i < n; ++i) {
        g.values[i] = std::exp(-0.05 * g.x(i) * g.x(i));
    }
    const auto e = riesz_integral_b(g, cfg, kernel::FractionalOrder(1.21));
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::fabs(e.values[i] - e.values[n - 1 - i]) < 1e-10);
    }
}

TEST_CASE("GL operator symmetry on even data") {
    const std::size_t n = 201;
    const double h = 0.2;
    const double L = double(n + 1) / 2.0 * h;
    GridFunction g = make_grid(n, h);
    for (std::size_t i = 0; i < n; ++i) {
        g.values[i] = 1.0 / std::cosh(0.3 * g.x(i));
    }
    for (auto scheme : {Scheme::GL, Scheme::GLShifted}) {
        auto cfg = config_for(g, L, scheme, EdgePolicy::PeriodicExtension);
        const auto out = riesz_apply(g, cfg, kernel::FractionalOrder(1.51));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::fabs(out.values[i] - out.values[n - 1 - i]) < 1e-10);
        }
    }
}

TEST_CASE("spectral_oracle: single mode, constant, linearity") {
    const std::size_t n = 128;
    const double h = 0.3;
    const double period = double(n) * h;
    const double k = 2.0 * kPi * 5.0 / period;
    GridFunction g = cosine_grid(n, h, k);
    // grid covering exactly one period: x0 arbitrary for the DFT
    const auto out = spectral_oracle(g, kernel::FractionalOrder(1.21));
    const double sym = std::pow(k, 1.21);
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(out.values[i] ==
              doctest::Approx(-sym * g.values[i]).epsilon(1e-10).scale(sym));
    }

    GridFunction c = make_grid(n, h);
    for (auto& v : c.values) v = 4.2;
    const auto oc = spectral_oracle(c, kernel::FractionalOrder(1.21));
    for (double v : oc.values) CHECK(std::fabs(v) < 1e-11);

    std::mt19937 rng(5);
    std::normal_distribution<double> dist;
    GridFunction u = make_grid(n, h), w = make_grid(n, h);
    for (std::size_t i = 0; i < n; ++i) {
        u.values[i] = dist(rng);
        w.values[i] = dist(rng);
    }
    GridFunction lin = make_grid(n, h);
    for (std::size_t i = 0; i < n; ++i) {
        lin.values[i] = 2.0 * u.values[i] - 3.0 * w.values[i];
    }
    const auto ou = spectral_oracle(u, kernel::FractionalOrder(1.21));
    const auto ow = spectral_oracle(w, kernel::FractionalOrder(1.21));
    const auto ol = spectral_oracle(lin, kernel::FractionalOrder(1.21));
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(ol.values[i] ==
              doctest::Approx(2.0 * ou.values[i] - 3.0 * ow.values[i]).epsilon(1e-11));
    }
}

TEST_CASE("GL symbol convergence vs spectral oracle (first order, both schemes)") {
    // commensurate mode on a fixed periodic domain; max-norm error vs the
    // oracle halves with h (ratio within 2 +- 0.3)
    const double alpha = 1.21;
    const double L = 51.2;
    const double k = 2.0 * kPi * 3.0 / (2.0 * L);  // ~0.368
    for (auto scheme : {Scheme::GL, Scheme::GLShifted}) {
        std::vector<double> errs;
        for (double h : {0.2, 0.1}) {
            const std::size_t n = std::size_t(std::llround(2.0 * L / h)) - 1;
            GridFunction g = cosine_grid(n, h, k);
            auto cfg = config_for(g, L, scheme, EdgePolicy::PeriodicExtension);
            const auto out = riesz_apply(g, cfg, kernel::FractionalOrder(alpha));
            const auto ref = spectral_oracle(g, kernel::FractionalOrder(alpha));
            double err = 0.0;
            for (std::size_t i = n / 2 - n / 8; i <= n / 2 + n / 8; ++i) {
                err = std::max(err, std::fabs(out.values[i] - ref.values[i]));
            }
            errs.push_back(err);
        }
        const double ratio = errs[0] / errs[1];
        CHECK(ratio > 1.7);
        CHECK(ratio < 2.3);
    }
}

TEST_CASE("method (a) vs method (b) on the breather profile") {
    // fine grid h = 0.05: GLShifted and IntegralB agree pointwise to 5% of the
    // max magnitude away from the outer 10% of the domain
    const std::size_t n = 1601;
    const double h = 0.05;
    const double L = double(n + 1) / 2.0 * h;  // ~40
    GridFunction g = make_grid(n, h);
    for (std::size_t i = 0; i < n; ++i) {
        g.values[i] = 4.0 * std::atan(1.0 / (0.05 * std::cosh(g.x(i))));
    }
    const kernel::FractionalOrder order(1.21);
    auto cfg_a = config_for(g, L, Scheme::GLShifted, EdgePolicy::PeriodicExtension);
    auto cfg_b = config_for(g, L, Scheme::IntegralB, EdgePolicy::PeriodicExtension);
    const auto a = riesz_apply(g, cfg_a, order);
    const auto b = riesz_integral_b(g, cfg_b, order);
    double mx = 0.0;
    for (std::size_t i = n / 10; i < n - n / 10; ++i) {
        mx = std::max(mx, std::fabs(b.values[i]));
    }
    for (std::size_t i = n / 10; i < n - n / 10; ++i) {
        CHECK(std::fabs(a.values[i] - b.values[i]) <= 0.05 * mx);
    }
}

TEST_CASE("riesz_apply rejects invalid alpha") {
    GridFunction g = make_grid(16, 0.5);
    auto cfg = config_for(g, 5.0, Scheme::GL, EdgePolicy::ZeroOutside);
    CHECK_THROWS_AS(riesz_apply(g, cfg, kernel::FractionalOrder(1.0)),
                    std::domain_error);
    CHECK_THROWS_AS(riesz_apply(g, cfg, kernel::FractionalOrder(2.5)),
                    std::domain_error);
}
