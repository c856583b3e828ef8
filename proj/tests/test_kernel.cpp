#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fracto/kernel.hpp"
#include "oracle_constants.hpp"

using namespace fracto::kernel;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("gamma_real matches classical values") {
    CHECK(gamma_real(0.5) == doctest::Approx(oracle::kGammaHalf).epsilon(1e-14));
    CHECK(gamma_real(-0.5) == doctest::Approx(oracle::kGammaMinusHalf).epsilon(1e-14));
    CHECK(gamma_real(-1.5) == doctest::Approx(oracle::kGammaMinus3Half).epsilon(1e-14));
    CHECK(gamma_real(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    // recurrence consistency on the negative axis
    for (double x : {-0.3, -1.7, -2.4, -3.9}) {
        CHECK(gamma_real(x) == doctest::Approx(gamma_real(x + 1.0) / x).epsilon(1e-13));
    }
}

TEST_CASE("gamma_real rejects poles") {
    CHECK_THROWS_AS(gamma_real(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_real(-1.0), std::domain_error);
    CHECK_THROWS_AS(gamma_real(-2.0 + 1e-13), std::domain_error);
}

TEST_CASE("riemann_zeta against high-precision references") {
    CHECK(riemann_zeta(2.0) == doctest::Approx(oracle::kZeta2).epsilon(1e-12));
    CHECK(riemann_zeta(4.0) == doctest::Approx(oracle::kZeta4).epsilon(1e-12));
    CHECK(riemann_zeta(3.0) == doctest::Approx(oracle::kZeta3).epsilon(1e-12));
    CHECK(std::fabs(riemann_zeta(-0.5) - oracle::kZetaMinusHalf) < 1e-10);
    CHECK(std::fabs(riemann_zeta(0.5) - oracle::kZetaHalf) < 1e-10);
    CHECK(std::fabs(riemann_zeta(1.5) - oracle::kZeta3Half) < 1e-10);
    CHECK(std::fabs(riemann_zeta(2.21) - oracle::kZeta221) < 1e-10);
    CHECK(std::fabs(riemann_zeta(0.21) - oracle::kZeta021) < 1e-10);
    CHECK(std::fabs(riemann_zeta(-9.5) - oracle::kZetaMinus95) < 1e-10);
    CHECK(std::fabs(riemann_zeta(20.0) - oracle::kZeta20) < 1e-10);
    CHECK(std::fabs(riemann_zeta(-1.0) + 1.0 / 12.0) < 1e-12);
    CHECK(riemann_zeta(-2.0) == 0.0);  // trivial zero
    CHECK_THROWS_AS(riemann_zeta(1.0), std::domain_error);
    CHECK_THROWS_AS(riemann_zeta(1.0 + 1e-10), std::domain_error);
}

TEST_CASE("FractionalOrder invariants") {
    CHECK_THROWS_AS(FractionalOrder(0.0), std::domain_error);
    CHECK_THROWS_AS(FractionalOrder(4.0), std::domain_error);
    CHECK_THROWS_AS(FractionalOrder(-1.2), std::domain_error);
    FractionalOrder integer_ish(2.0 - 1e-12);
    CHECK(integer_ish.near_integer());
    CHECK_THROWS_AS(a_alpha(integer_ish), std::domain_error);
    FractionalOrder three(3.0);  // allowed: direct sum evaluation is defined
    CHECK(three.value() == 3.0);
}

TEST_CASE("a_alpha closed forms") {
    CHECK(a_alpha(FractionalOrder(0.5)) == doctest::Approx(oracle::kA05).epsilon(1e-13));
    CHECK(a_alpha(FractionalOrder(1.5)) == doctest::Approx(oracle::kA15).epsilon(1e-13));
    CHECK(a_alpha(FractionalOrder(1.21)) == doctest::Approx(oracle::kA121).epsilon(1e-13));
    // definitional consistency
    const double direct = 2.0 * gamma_real(-1.21) * std::cos(0.605 * kPi);
    CHECK(a_alpha(FractionalOrder(1.21)) == doctest::Approx(direct).epsilon(1e-15));
}

TEST_CASE("coupling spectrum: direct sum basics") {
    // alpha=3, k=0: refined tail extrapolation reproduces 2 zeta(4) = pi^4/45
    const FractionalOrder a3(3.0);
    const double v = coupling_spectrum_direct_refined(a3, 0.0, 1.0, 20000);
    CHECK(v == doctest::Approx(oracle::kTwoZeta4).epsilon(1e-10));

    // periodicity: k + 2 pi m / dx is exact in each cosine term
    const FractionalOrder a(1.21);
    const double dx = 0.7;
    const auto v1 = coupling_spectrum_direct(a, 0.4, dx, 2000);
    const auto v2 = coupling_spectrum_direct(a, 0.4 + 2.0 * kPi / dx, dx, 2000);
    CHECK(v1.value == doctest::Approx(v2.value).epsilon(1e-9));

    // tail bound is attached and positive
    CHECK(v1.tail_bound == doctest::Approx(2.0 * std::pow(2000.0, -1.21) / 1.21));
    CHECK_THROWS_AS(coupling_spectrum_direct(a, 0.1, 1.0, 100), std::domain_error);
}

TEST_CASE("coupling spectrum: series equals polylog references") {
    struct Case { double alpha, k, ref; };
    const Case cases[] = {
        {1.21, 0.3, oracle::kJ121_k03}, {1.21, 0.1, oracle::kJ121_k01},
        {0.5, 0.9, oracle::kJ05_k09},   {0.5, 0.1, oracle::kJ05_k01},
        {1.51, 0.6, oracle::kJ151_k06}, {1.91, 0.6, oracle::kJ191_k06},
    };
    for (const auto& c : cases) {
        const auto s = coupling_spectrum_series(FractionalOrder(c.alpha), c.k, 1.0, 40);
        CHECK(s.value == doctest::Approx(c.ref).epsilon(1e-10));
        CHECK(s.tail_decreasing);
    }
    // k = 0 reduces to 2 zeta(1 + alpha)
    const auto s0 = coupling_spectrum_series(FractionalOrder(0.5), 0.0, 1.0, 40);
    CHECK(s0.value == doctest::Approx(oracle::kTwoZeta3Half).epsilon(1e-12));

    CHECK_THROWS_AS(coupling_spectrum_series(FractionalOrder(1.21), 6.4, 1.0, 40),
                    std::domain_error);
}

TEST_CASE("coupling spectrum: series vs refined direct sum, 16-point grid") {
    for (double alpha : {0.5, 1.21, 1.51, 1.91}) {
        for (double kdx : {0.1, 0.3, 0.6, 0.9}) {
            const FractionalOrder ord(alpha);
            const double vs = coupling_spectrum_series(ord, kdx, 1.0, 40).value;
            const double vd = coupling_spectrum_direct_refined(ord, kdx, 1.0, 1000000);
            CHECK(std::fabs(vs - vd) <= 1e-6);
        }
    }
}

TEST_CASE("spectra are even in k") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ku(0.01, 2.0);
    for (double alpha : {0.5, 1.21, 2.5, 3.1}) {
        const FractionalOrder ord(alpha);
        for (int i = 0; i < 5; ++i) {
            const double k = ku(rng);
            CHECK(coupling_spectrum_direct(ord, k, 1.0, 2000).value ==
                  doctest::Approx(coupling_spectrum_direct(ord, -k, 1.0, 2000).value));
            if (!ord.near_integer() && std::fabs(alpha - 2.0) > 1e-9) {
                CHECK(transform_symbol(ord, k, 0.5) ==
                      doctest::Approx(transform_symbol(ord, -k, 0.5)));
                CHECK(continuum_symbol(ord, k) ==
                      doctest::Approx(continuum_symbol(ord, -k)));
            }
        }
    }
}

TEST_CASE("transform and continuum symbols") {
    CHECK(transform_symbol(FractionalOrder(1.21), 0.0, 1.0) == 0.0);
    CHECK(transform_symbol(FractionalOrder(0.5), 1.0, 1.0) ==
          doctest::Approx(oracle::kTransform05K1Dx1).epsilon(1e-12));
    CHECK(continuum_symbol(FractionalOrder(1.21), 0.0) == 0.0);
    CHECK(continuum_symbol(FractionalOrder(2.5), 2.0) ==
          doctest::Approx(oracle::kContinuum25K2).epsilon(1e-10));
    CHECK(continuum_symbol(FractionalOrder(1.5), 1.0) ==
          doctest::Approx(oracle::kA15).epsilon(1e-12));
    CHECK_THROWS_AS(transform_symbol(FractionalOrder(2.0 + 1e-12), 1.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(continuum_symbol(FractionalOrder(1.0), 1.0), std::domain_error);

    // branch consistency: transform -> continuum as dx -> 0 for 0 < alpha < 2,
    // difference exactly |dx|^(2-alpha) |zeta(alpha-1)| k^2
    for (double alpha : {0.5, 1.21, 1.91}) {
        const FractionalOrder ord(alpha);
        const double z = std::fabs(riemann_zeta(alpha - 1.0));
        for (double dx : {0.5, 0.1, 0.01}) {
            const double k = 0.8;
            const double diff =
                std::fabs(transform_symbol(ord, k, dx) - continuum_symbol(ord, k));
            CHECK(diff <= std::pow(dx, 2.0 - alpha) * z * k * k * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("crossover wavenumber") {
    CHECK(crossover_k0(FractionalOrder(0.5), 1.0) ==
          doctest::Approx(oracle::kK0Alpha05Dx1).epsilon(1e-12));
    // explicit 1/dx scaling
    const double k1 = crossover_k0(FractionalOrder(1.21), 1.0);
    CHECK(crossover_k0(FractionalOrder(1.21), 2.0) == doctest::Approx(0.5 * k1));
    // definitional consistency
    const double expect =
        std::pow(std::fabs(a_alpha(FractionalOrder(1.21)) / riemann_zeta(0.21)),
                 1.0 / 0.79) / 0.999;
    CHECK(crossover_k0(FractionalOrder(1.21), 0.999) == doctest::Approx(expect));

    // crossover meaning: for 2 < alpha < 4 the |k|^alpha correction at k = c k0
    // is exactly (k/k0)^(alpha-2) of the k^2 term; <= 0.1 at k0/10 needs alpha > 3
    for (double alpha : {3.1, 3.5}) {
        const FractionalOrder ord(alpha);
        const double k0 = crossover_k0(ord, 1.0);
        const double k = k0 / 10.0;
        const double z = std::fabs(riemann_zeta(alpha - 1.0));
        const double rel =
            std::fabs(transform_symbol(ord, k, 1.0) + riemann_zeta(alpha - 1.0) * k * k) /
            (z * k * k);
        CHECK(rel == doctest::Approx(std::pow(0.1, alpha - 2.0)).epsilon(1e-9));
        CHECK(rel <= 0.1);
    }
}

TEST_CASE("direct-sum periodicity at truncation tolerance over an (alpha,k) grid") {
    // 20 (alpha, k) pairs
    const double alphas[] = {0.6, 1.21, 1.51, 1.91};
    const double ks[] = {0.15, 0.4, 0.8, 1.3, 2.2};
    for (double alpha : alphas) {
        for (double k : ks) {
            const FractionalOrder ord(alpha);
            const auto a = coupling_spectrum_direct(ord, k, 1.0, 5000);
            const auto b = coupling_spectrum_direct(ord, k + 2.0 * kPi, 1.0, 5000);
            CHECK(std::fabs(a.value - b.value) <= 1e-9);
        }
    }
}
