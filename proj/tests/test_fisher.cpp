#include <cmath>
#include <random>

#include "doctest.h"
#include "lis/approx.hpp"
#include "lis/closed_form.hpp"
#include "lis/fisher.hpp"

using namespace lis;

TEST_CASE("CPL Fisher matrix is diagonal and matches the closed form") {
    const TerminalPosition t{0, 0, 4};
    const RadioConfig cfg{0.1, 2.0};
    const FisherMatrix f = fisher_matrix(t, {0, 0, 1}, cfg, {1e-12, 1e-9});
    const double tr = f.m.trace();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            if (i != k) CHECK(std::abs(f.m(i, k)) < 1e-10 * tr);
    const CplFisher cf = fisher_cpl({4.0, 1.0, 0.1});
    CHECK(f.m(0, 0) == doctest::Approx(cf.ixy).epsilon(1e-6));
    CHECK(f.m(1, 1) == doctest::Approx(cf.ixy).epsilon(1e-6));
    CHECK(f.m(2, 2) == doctest::Approx(cf.iz).epsilon(1e-6));
    CHECK(f.provenance == Provenance::Numeric);
}

TEST_CASE("off-CPL Fisher matches the Proposition-1 approximation") {
    const TerminalPosition t{4, 4, 8};
    const RadioConfig cfg{0.1, 2.0};
    const FisherMatrix numeric = fisher_matrix(t, {0, 0, 0.5}, cfg);
    const FisherMatrix approx = fisher_approx_prop1(t, 0.5, cfg);
    const double scale = numeric.m.trace();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(std::abs(numeric.m(i, k) - approx.m(i, k)) < 0.01 * scale);
}

TEST_CASE("fisher_sum of one aperture equals fisher_matrix") {
    const TerminalPosition t{1, 0.5, 6};
    const RadioConfig cfg{0.1, 2.0};
    const Disk d{0.2, -0.1, 0.8};
    const FisherMatrix a = fisher_matrix(t, d, cfg);
    const FisherMatrix b = fisher_sum(t, {d}, cfg);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(a.m(i, k) == doctest::Approx(b.m(i, k)).epsilon(1e-12));
}

TEST_CASE("symmetric four-aperture layout yields a diagonal sum on the CPL") {
    const TerminalPosition t{0, 0, 8};
    const RadioConfig cfg{0.1, 2.0};
    std::vector<Disk> apertures;
    for (double sx : {-1.0, 1.0})
        for (double sy : {-1.0, 1.0}) apertures.push_back({sx, sy, 0.5});
    const FisherMatrix f = fisher_sum(t, apertures, cfg);
    const double tr = f.m.trace();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            if (i != k) CHECK(std::abs(f.m(i, k)) < 1e-8 * tr);
}

TEST_CASE("diagonal Fisher inverts entrywise") {
    FisherMatrix f;
    f.m = Mat3::diagonal(2.0, 5.0, 0.25);
    const CrlbMatrix c = crlb_from_fisher(f);
    CHECK(c.m(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(c.m(1, 1) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(c.m(2, 2) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("Proposition-1 structured Fisher inverts to the stated closed form") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> u(0.2, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double alpha = u(rng), beta = u(rng);
        const double x0 = u(rng), y0 = u(rng), z0 = u(rng);
        FisherMatrix f;
        f.m(0, 0) = alpha + beta * x0 * x0 / (z0 * z0);
        f.m(0, 1) = f.m(1, 0) = beta * x0 * y0 / (z0 * z0);
        f.m(0, 2) = f.m(2, 0) = beta * x0 / z0;
        f.m(1, 1) = alpha + beta * y0 * y0 / (z0 * z0);
        f.m(1, 2) = f.m(2, 1) = beta * y0 / z0;
        f.m(2, 2) = beta;
        const CrlbMatrix c = crlb_from_fisher(f);
        CHECK(c.m(0, 0) == doctest::Approx(1.0 / alpha).epsilon(1e-10));
        CHECK(c.m(1, 1) == doctest::Approx(1.0 / alpha).epsilon(1e-10));
        CHECK(c.m(0, 1) == doctest::Approx(0.0).scale(1.0 / alpha).epsilon(1e-10));
        CHECK(c.m(0, 2) == doctest::Approx(-x0 / (alpha * z0)).epsilon(1e-10));
        CHECK(c.m(1, 2) == doctest::Approx(-y0 / (alpha * z0)).epsilon(1e-10));
        CHECK(c.m(2, 2) ==
              doctest::Approx(1.0 / beta + (x0 * x0 + y0 * y0) / (alpha * z0 * z0))
                  .epsilon(1e-10));
    }
}

TEST_CASE("singular Fisher matrices are reported, not inverted") {
    FisherMatrix f;
    f.m = Mat3::diagonal(1.0, 1.0, 0.0);  // zero row/column in z
    CHECK_THROWS_AS(crlb_from_fisher(f), SingularFisherError);
    try {
        crlb_from_fisher(f);
    } catch (const SingularFisherError& e) {
        CHECK(e.near_null_direction[2] == doctest::Approx(1.0));
    }
}

TEST_CASE("numeric Fisher is PSD and rotation-invariant") {
    const RadioConfig cfg{0.1, 2.0};
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> off(-5.0, 5.0);
    std::uniform_real_distribution<double> depth(2.0, 12.0);
    for (int trial = 0; trial < 6; ++trial) {
        const TerminalPosition t{off(rng), off(rng), depth(rng)};
        const FisherMatrix f = fisher_matrix(t, {0, 0, 0.5}, cfg, {1e-10, 1e-7});
        const auto ev = symmetric_eigenvalues(f.m);
        CHECK(ev[0] >= -1e-10 * f.m.trace());
    }
    // Rotating (x0, y0) about the z-axis preserves C33 and C11 + C22.
    const double rho = 3.0, z0 = 8.0;
    const CrlbMatrix base = crlb_from_fisher(
        fisher_matrix({rho, 0, z0}, {0, 0, 0.5}, cfg, {1e-12, 1e-8}));
    for (double angle : {0.7, 2.1}) {
        const TerminalPosition t{rho * std::cos(angle), rho * std::sin(angle), z0};
        const CrlbMatrix rot =
            crlb_from_fisher(fisher_matrix(t, {0, 0, 0.5}, cfg, {1e-12, 1e-8}));
        CHECK(rot.m(2, 2) == doctest::Approx(base.m(2, 2)).epsilon(1e-6));
        CHECK(rot.m(0, 0) + rot.m(1, 1) ==
              doctest::Approx(base.m(0, 0) + base.m(1, 1)).epsilon(1e-6));
    }
}

TEST_CASE("CRLB diagonal decreases monotonically in R on the CPL") {
    const RadioConfig cfg{0.1, 2.0};
    double prev_xy = 1e300, prev_z = 1e300;
    for (double R : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const CplFisher cf = fisher_cpl({6.0, R, cfg.lambda});
        CHECK(1.0 / cf.ixy < prev_xy);
        CHECK(1.0 / cf.iz < prev_z);
        prev_xy = 1.0 / cf.ixy;
        prev_z = 1.0 / cf.iz;
    }
}

TEST_CASE("doubling N0 doubles every CRLB entry") {
    const TerminalPosition t{2, 1, 7};
    const Disk d{0, 0, 0.75};
    const CrlbMatrix c1 =
        crlb_from_fisher(fisher_matrix(t, d, {0.1, 2.0}, {1e-12, 1e-8}));
    const CrlbMatrix c2 =
        crlb_from_fisher(fisher_matrix(t, d, {0.1, 4.0}, {1e-12, 1e-8}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            if (std::abs(c1.m(i, k)) > 1e-12 * c1.m.trace())
                CHECK(c2.m(i, k) == doctest::Approx(2.0 * c1.m(i, k)).epsilon(1e-7));
}

TEST_CASE("empty aperture list is rejected") {
    CHECK_THROWS_AS(fisher_sum({0, 0, 4}, {}, {0.1, 2.0}), std::invalid_argument);
}
