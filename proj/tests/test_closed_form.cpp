#include <cmath>

#include "doctest.h"
#include "lis/closed_form.hpp"
#include "lis/core_model.hpp"
#include "lis/errors.hpp"
#include "lis/quadrature.hpp"

using namespace lis;

namespace {
constexpr double kPi = 3.14159265358979323846;

double quad_eta_power(double n, double z0, double R, bool weight_x2) {
    const TerminalPosition t{0, 0, z0};
    auto f = [&](double x, double y) {
        const double e = eta({x, y}, t);
        const double w = weight_x2 ? x * x : 1.0;
        return w * std::pow(e, -0.5 * n);
    };
    return integrate_disk(f, {0, 0, R}, {1e-12, 1e-9}).value;
}
}  // namespace

TEST_CASE("g2(3) on the unit disk matches its defining integral") {
    // Oracle: quadrature of eta^{-3/2} over the unit disk with z0 = 1,
    // analytically 2 pi (1 - 1/sqrt(2)).
    const double expected = 2.0 * kPi * (1.0 - 1.0 / std::sqrt(2.0));
    CHECK(g2(3, 1, 1) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(g2(3, 1, 1) == doctest::Approx(quad_eta_power(3, 1, 1, false)).epsilon(1e-8));
}

TEST_CASE("g1 and g2 match quadrature of their defining integrals") {
    for (double n : {3.0, 5.0, 7.0}) {
        for (double z0 : {0.7, 2.0}) {
            for (double R : {0.5, 1.0, 3.0}) {
                CHECK(g1(n, z0, R) ==
                      doctest::Approx(quad_eta_power(n, z0, R, true)).epsilon(1e-7));
                CHECK(g2(n, z0, R) ==
                      doctest::Approx(quad_eta_power(n, z0, R, false)).epsilon(1e-7));
            }
        }
    }
}

TEST_CASE("g1 vanishes with the domain") {
    for (double n : {5.0, 7.0})
        CHECK(g1(n, 2.0, 1e-8) == doctest::Approx(0.0).epsilon(1e-20));
}

TEST_CASE("g functions reject their singular orders") {
    CHECK_THROWS_AS(g1(2, 1, 1), std::domain_error);
    CHECK_THROWS_AS(g1(4, 1, 1), std::domain_error);
    CHECK_THROWS_AS(g2(2, 1, 1), std::domain_error);
    CHECK_THROWS_AS(g1(3, -1, 1), std::invalid_argument);
}

TEST_CASE("the two CPL Fisher routes agree to 1e-12 over a wide grid") {
    for (double z0 : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0}) {
        for (double R : {0.1, 0.5, 1.0, 2.0, 5.0, 20.0}) {
            for (double lambda : {0.01, 0.1, 1.0}) {
                const CplConfig c{z0, R, lambda};
                const CplFisher ab = fisher_cpl_route_ab(c);
                const CplFisher g = fisher_cpl_route_g(c);
                CHECK(std::abs(ab.ixy - g.ixy) / std::abs(g.ixy) < 1e-12);
                CHECK(std::abs(ab.iz - g.iz) / std::abs(g.iz) < 1e-12);
                const CplFisher combined = fisher_cpl(c);
                CHECK(combined.ixy > 0.0);
                CHECK(combined.iz > 0.0);
            }
        }
    }
}

TEST_CASE("CPL Fisher matches quadrature") {
    const CplConfig c{4.0, 1.0, 0.1};
    const CplFisher cf = fisher_cpl(c);
    const TerminalPosition t{0, 0, c.z0};
    const RadioConfig cfg{c.lambda, 2.0};
    const Tolerance tight{1e-12, 1e-9};
    auto f11 = [&](double x, double y) { return fisher_integrand({x, y}, t, cfg, 1, 1); };
    auto f33 = [&](double x, double y) { return fisher_integrand({x, y}, t, cfg, 3, 3); };
    CHECK(cf.ixy ==
          doctest::Approx(integrate_disk(f11, {0, 0, c.radius}, tight).value).epsilon(1e-6));
    CHECK(cf.iz ==
          doctest::Approx(integrate_disk(f33, {0, 0, c.radius}, tight).value).epsilon(1e-6));
}

TEST_CASE("f2-based Cz at tau = 0.25 and its small-tau counterpart") {
    // f2(0.25) frozen from direct evaluation of the f2 formula.
    CHECK(f2(0.25) == doctest::Approx(11.504209205228904).epsilon(1e-12));
    const CplCrlb exact = crlb_cpl_simplified(0.25, 0.1);
    CHECK(exact.cz == doctest::Approx(1.5198177546350666e-3 * 11.504209205228904)
                          .epsilon(1e-10));
    // 1/Iz at z0=4, R=1, lambda=0.1 agrees with the f2 route to 0.5%.
    const CplFisher cf = fisher_cpl({4.0, 1.0, 0.1});
    CHECK(1.0 / cf.iz == doctest::Approx(exact.cz).epsilon(5e-3));

    const CplCrlb power = crlb_cpl_small_tau(0.25, 0.1);
    CHECK(power.cz == doctest::Approx(0.01 / (kPi * kPi * 0.0625)).epsilon(1e-12));
    // Gap to the f2-exact value is the o(tau^-2) term, about 8%.
    CHECK(std::abs(power.cz - exact.cz) / exact.cz < 0.08);
}

TEST_CASE("Cxy >= Cz for all tau") {
    for (double tau : {0.01, 0.1, 0.5, 1.0, 3.0, 30.0}) {
        const CplCrlb c = crlb_cpl_simplified(tau, 0.1);
        CHECK(c.cxy >= c.cz);
    }
}

TEST_CASE("small-tau power laws scale as stated") {
    const CplCrlb base = crlb_cpl_small_tau(0.2, 0.1);
    const CplCrlb half = crlb_cpl_small_tau(0.1, 0.1);
    CHECK(half.cxy == doctest::Approx(16.0 * base.cxy).epsilon(1e-12));
    CHECK(half.cz == doctest::Approx(4.0 * base.cz).epsilon(1e-12));
    const CplCrlb wide = crlb_cpl_small_tau(0.2, 0.2);
    CHECK(wide.cxy == doctest::Approx(4.0 * base.cxy).epsilon(1e-12));
    CHECK(wide.cz == doctest::Approx(4.0 * base.cz).epsilon(1e-12));
}

TEST_CASE("asymptotic limit") {
    CHECK(crlb_limit(0.1) == doctest::Approx(1.5198177546350666e-3).epsilon(1e-12));
    CHECK(crlb_limit(0.2) == doctest::Approx(4.0 * crlb_limit(0.1)).epsilon(1e-12));
    CHECK(crlb_limit(1.0) == doctest::Approx(3.0 / (2.0 * kPi * kPi)).epsilon(1e-12));
    // tau -> infinity: simplified CRLBs converge to the limit.
    // The leading correction at tau = 100 is the 1.5 tau^-2 term of f1,
    // about 1.5%, so 2% is the attainable bound here.
    const CplCrlb c = crlb_cpl_simplified(100.0, 0.1);
    CHECK(std::abs(c.cxy / crlb_limit(0.1) - 1.0) < 2e-2);
    CHECK(std::abs(c.cz / crlb_limit(0.1) - 1.0) < 2e-2);
    // And so do the exact closed forms (lambda << z0 regime).
    const CplFisher cf = fisher_cpl({4.0, 400.0, 0.1});
    CHECK(std::abs(1.0 / cf.ixy / crlb_limit(0.1) - 1.0) < 2e-2);
    CHECK(std::abs(1.0 / cf.iz / crlb_limit(0.1) - 1.0) < 2e-2);
}

TEST_CASE("tau sufficiency: simplified CRLBs depend on z0 only through tau") {
    for (double tau : {0.05, 0.3, 2.0}) {
        const CplCrlb a = crlb_cpl_simplified(tau, 0.1);
        // Exact closed forms at two z0 with the same tau, lambda << z0.
        for (double z0 : {10.0, 40.0}) {
            const CplFisher cf = fisher_cpl({z0, tau * z0, 0.1});
            CHECK(1.0 / cf.ixy == doctest::Approx(a.cxy).epsilon(1e-2));
            CHECK(1.0 / cf.iz == doctest::Approx(a.cz).epsilon(1e-2));
        }
    }
}

TEST_CASE("log-log scaling slopes on the CPL") {
    // Least-squares slope of log C vs log tau over tau in [0.02, 0.1].
    const int n = 20;
    double sx = 0, sy1 = 0, sy2 = 0, sxx = 0, sxy1 = 0, sxy2 = 0;
    for (int i = 0; i < n; ++i) {
        const double tau =
            0.02 * std::pow(0.1 / 0.02, static_cast<double>(i) / (n - 1));
        const CplCrlb c = crlb_cpl_simplified(tau, 0.1);
        const double x = std::log(tau);
        sx += x;
        sxx += x * x;
        sy1 += std::log(c.cxy);
        sy2 += std::log(c.cz);
        sxy1 += x * std::log(c.cxy);
        sxy2 += x * std::log(c.cz);
    }
    const double slope_xy = (n * sxy1 - sx * sy1) / (n * sxx - sx * sx);
    const double slope_z = (n * sxy2 - sx * sy2) / (n * sxx - sx * sx);
    CHECK(slope_xy == doctest::Approx(-4.0).epsilon(0.025));
    CHECK(slope_z == doctest::Approx(-2.0).epsilon(0.05));
}

TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(fisher_cpl({-1.0, 1.0, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(crlb_cpl_simplified(-0.1, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(crlb_cpl_small_tau(0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(crlb_limit(0.0), std::invalid_argument);
}
