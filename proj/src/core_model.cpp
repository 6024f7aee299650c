#include "lis/core_model.hpp"

#include <cmath>
#include <stdexcept>

namespace lis {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_index(int i) {
    if (i < 1 || i > 3)
        throw std::invalid_argument("dimension index must be 1, 2 or 3");
}

}  // namespace

double eta(const SurfacePoint& p, const TerminalPosition& t) {
    const double dx = p.x - t.x0;
    const double dy = p.y - t.y0;
    return t.z0 * t.z0 + dy * dy + dx * dx;
}

std::complex<double> signal(const SurfacePoint& p, const TerminalPosition& t,
                            const RadioConfig& cfg) {
    require_valid(t);
    require_valid(cfg);
    const double e = eta(p, t);
    const double mag = std::sqrt(t.z0) / (2.0 * std::sqrt(kPi) * std::pow(e, 0.75));
    const double phase = -2.0 * kPi * std::sqrt(e) / cfg.lambda;
    return std::polar(mag, phase);
}

FieldGradient signal_gradient(const SurfacePoint& p, const TerminalPosition& t,
                              const RadioConfig& cfg) {
    require_valid(t);
    require_valid(cfg);
    const double e = eta(p, t);
    const double q = std::pow(e, 0.25);
    const double q3 = q * q * q;
    const double e34 = 1.0 / q3;            // eta^{-3/4}
    const double e54 = 1.0 / (q3 * q * q);  // eta^{-5/4}
    const double e74 = e54 / (q * q);       // eta^{-7/4}
    const double c = std::sqrt(t.z0) / (2.0 * std::sqrt(kPi));
    const double wave = 2.0 * kPi / cfg.lambda;
    const std::complex<double> ph = std::polar(1.0, -wave * std::sqrt(e));
    const std::complex<double> radial(1.5 * e74, wave * e54);
    FieldGradient g;
    g.d1 = c * (p.x - t.x0) * radial * ph;
    g.d2 = c * (p.y - t.y0) * radial * ph;
    g.d3 = c * t.z0 *
           std::complex<double>(0.5 * e34 / (t.z0 * t.z0) - 1.5 * e74, -wave * e54) * ph;
    return g;
}

double fisher_integrand(const SurfacePoint& p, const TerminalPosition& t,
                        const RadioConfig& cfg, int i, int k) {
    check_index(i);
    check_index(k);
    require_valid(t);
    require_valid(cfg);
    const double e = eta(p, t);
    const double q = std::pow(e, 0.25);
    const double q3 = q * q * q;
    const double e34 = 1.0 / q3;
    const double e54 = 1.0 / (q3 * q * q);
    const double e74 = e54 / (q * q);
    const double c = std::sqrt(t.z0) / (2.0 * std::sqrt(kPi));
    const double wave = 2.0 * kPi / cfg.lambda;
    // ds_i = (a_i + j b_i) exp(-j 2 pi sqrt(eta)/lambda); the exponential
    // cancels in ds_k conj(ds_i), leaving a_i a_k + b_i b_k.
    double a[3], b[3];
    const double dx = p.x - t.x0;
    const double dy = p.y - t.y0;
    a[0] = c * dx * 1.5 * e74;
    b[0] = c * dx * wave * e54;
    a[1] = c * dy * 1.5 * e74;
    b[1] = c * dy * wave * e54;
    a[2] = c * t.z0 * (0.5 * e34 / (t.z0 * t.z0) - 1.5 * e74);
    b[2] = -c * t.z0 * wave * e54;
    return (2.0 / cfg.n0) * (a[i - 1] * a[k - 1] + b[i - 1] * b[k - 1]);
}

double fisher_integrand_direct(const SurfacePoint& p, const TerminalPosition& t,
                               const RadioConfig& cfg, int i, int k) {
    check_index(i);
    check_index(k);
    const FieldGradient g = signal_gradient(p, t, cfg);
    const std::complex<double> d[3] = {g.d1, g.d2, g.d3};
    return (2.0 / cfg.n0) * std::real(d[k - 1] * std::conj(d[i - 1]));
}

}  // namespace lis
