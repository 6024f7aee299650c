#include "lis/closed_form.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "lis/errors.hpp"

namespace lis {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check(const CplConfig& c) {
    if (!(c.z0 > 0.0) || !(c.radius > 0.0) || !(c.lambda > 0.0))
        throw std::invalid_argument("CplConfig fields must all be > 0");
}

// (1+t)^p - 1 without cancellation.
double powm1(double p, double t) { return std::expm1(p * std::log1p(t)); }

// Tail sum_{k >= k0} binom(p, k) t^k of the binomial series; converges for
// |t| < 1 and is used where the leading terms of (1+t)^p cancel against
// explicit polynomial subtractions.
double binomial_tail(double p, double t, int k0) {
    double coeff = 1.0;
    for (int k = 1; k < k0; ++k) coeff *= (p - k + 1) / k;
    double sum = 0.0;
    double tk = std::pow(t, k0);
    for (int k = k0; k < 200; ++k) {
        coeff *= (p - k + 1) / k;
        const double term = coeff * tk;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
        tk *= t;
    }
    return sum;
}

constexpr double kSeriesSwitch = 0.5;  // in t = tau^2

// (1+t)^{5/2} - 1 - 2.5 t
double pow52_m1_m25t(double t) {
    if (t < kSeriesSwitch) return binomial_tail(2.5, t, 2);
    return powm1(2.5, t) - 2.5 * t;
}

// (1+t)^{5/2} - 1 - 2.5 t - 1.5 t^2  (denominator core of f1)
double f1_denominator(double t) {
    if (t < kSeriesSwitch) return 0.375 * t * t + binomial_tail(2.5, t, 3);
    return powm1(2.5, t) - 2.5 * t - 1.5 * t * t;
}

// (1+t)^{5/2} - 1 - t  (denominator core of f2)
double f2_denominator(double t) { return powm1(2.5, t) - t; }

// 2 - (1+t)^{1-n/2} ((n-2) t + 2); the dimensionless bracket of g1.
// Vanishes to O(t^2), hence the series branch.
double g1_bracket(double n, double t) {
    const double m = 1.0 - 0.5 * n;
    if (t < kSeriesSwitch) {
        double cm_prev = m;   // binom(m, k-1), starting at k = 2
        double cm = m * (m - 1.0) / 2.0;  // binom(m, k)
        double sum = 0.0;
        double tk = t * t;
        for (int k = 2; k < 200; ++k) {
            const double term = (2.0 * cm + (n - 2.0) * cm_prev) * tk;
            sum -= term;
            if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
            tk *= t;
            cm_prev = cm;
            cm *= (m - k) / (k + 1);
        }
        return sum;
    }
    return 2.0 - std::exp(m * std::log1p(t)) * ((n - 2.0) * t + 2.0);
}

// 1 - (1+t)^{1-n/2}; the dimensionless bracket of g2.
double g2_bracket(double n, double t) { return -powm1(1.0 - 0.5 * n, t); }

}  // namespace

double g1(double n, double z0, double R) {
    if (!(z0 > 0.0) || !(R > 0.0))
        throw std::invalid_argument("g1 requires z0 > 0 and R > 0");
    if (n == 2.0 || n == 4.0)
        throw std::domain_error("g1 has removable singularities at n = 2 and n = 4");
    const double t = (R / z0) * (R / z0);
    return kPi * std::pow(z0, 4.0 - n) * g1_bracket(n, t) / ((n - 2.0) * (n - 4.0));
}

double g2(double n, double z0, double R) {
    if (!(z0 > 0.0) || !(R > 0.0))
        throw std::invalid_argument("g2 requires z0 > 0 and R > 0");
    if (n == 2.0)
        throw std::domain_error("g2 has a removable singularity at n = 2");
    return 2.0 * kPi * std::pow(z0, 2.0 - n) * g2_bracket(n, (R / z0) * (R / z0)) /
           (n - 2.0);
}

CplFisher fisher_cpl_route_ab(const CplConfig& c) {
    check(c);
    const double t = c.tau() * c.tau();
    const double z0sq = c.z0 * c.z0;
    const double lamsq = c.lambda * c.lambda;
    const double u = 1.0 + powm1(2.5, t);  // (1 + tau^2)^{5/2}
    // -B1/A and -2B2/A with all z0^5 (R^2+z0^2)^{5/2}-scale cancellations
    // factored out analytically; naive evaluation of B1, B2 loses every
    // significant digit for R << z0.
    const double ixy =
        (160.0 * kPi * kPi * z0sq * f1_denominator(t) + 18.0 * lamsq * pow52_m1_m25t(t)) /
        (240.0 * lamsq * z0sq * u);
    const double iz =
        (12.0 * lamsq * powm1(2.5, t) - 15.0 * lamsq * t * t +
         80.0 * kPi * kPi * z0sq * f2_denominator(t)) /
        (120.0 * lamsq * z0sq * u);
    return {ixy, iz};
}

CplFisher fisher_cpl_route_g(const CplConfig& c) {
    check(c);
    const double t = c.tau() * c.tau();
    const double z0sq = c.z0 * c.z0;
    const double lamsq = c.lambda * c.lambda;
    // I11 = z0/(4 pi) (9/4 g1(7) + 4 pi^2/lambda^2 g1(5)) with the z0 powers
    // of g1, g2 pulled through; same for I33.
    const double ixy = (3.0 / 80.0) * g1_bracket(7.0, t) / z0sq +
                       kPi * kPi / (3.0 * lamsq) * g1_bracket(5.0, t);
    const double iz = g2_bracket(3.0, t) / (8.0 * z0sq) +
                      (2.0 * kPi * kPi / (3.0 * lamsq)) * g2_bracket(5.0, t) -
                      g2_bracket(5.0, t) / (4.0 * z0sq) +
                      (9.0 / 40.0) * g2_bracket(7.0, t) / z0sq;
    return {ixy, iz};
}

CplFisher fisher_cpl(const CplConfig& c) {
    const CplFisher ab = fisher_cpl_route_ab(c);
    const CplFisher g = fisher_cpl_route_g(c);
    const double dxy = std::abs(ab.ixy - g.ixy) / std::abs(g.ixy);
    const double dz = std::abs(ab.iz - g.iz) / std::abs(g.iz);
    if (dxy > 1e-9 || dz > 1e-9)
        throw InternalConsistencyError(
            "CPL closed-form routes disagree (rel " + std::to_string(std::max(dxy, dz)) +
            ") at z0=" + std::to_string(c.z0) + " R=" + std::to_string(c.radius) +
            " lambda=" + std::to_string(c.lambda));
    if (!(ab.ixy > 0.0) || !(ab.iz > 0.0))
        throw InternalConsistencyError("CPL Fisher information is not positive");
    return ab;
}

double f1(double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
    const double t = tau * tau;
    return (1.0 + powm1(2.5, t)) / f1_denominator(t);
}

double f2(double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
    const double t = tau * tau;
    return (1.0 + powm1(2.5, t)) / f2_denominator(t);
}

CplCrlb crlb_cpl_simplified(double tau, double lambda) {
    if (!(tau > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("tau and lambda must be > 0");
    const double scale = 1.5 * lambda * lambda / (kPi * kPi);
    return {scale * f1(tau), scale * f2(tau)};
}

CplCrlb crlb_cpl_small_tau(double tau, double lambda) {
    if (!(tau > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("tau and lambda must be > 0");
    if (tau > 0.3)
        std::cerr << "warning: small-tau CRLB law evaluated at tau = " << tau
                  << " (> 0.3); expect large approximation error\n";
    const double lamsq = lambda * lambda;
    return {4.0 * lamsq / (kPi * kPi * tau * tau * tau * tau),
            lamsq / (kPi * kPi * tau * tau)};
}

double crlb_limit(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    return 1.5 * lambda * lambda / (kPi * kPi);
}

}  // namespace lis
