#include "lis/approx.hpp"

#include <cmath>
#include <iostream>
#include <limits>

namespace lis {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ConditionReport check_conditions(const TerminalPosition& t, double R,
                                 const RadioConfig& cfg) {
    require_valid(t);
    require_valid(cfg);
    if (!(R > 0.0)) throw std::invalid_argument("R must be > 0");
    ConditionReport rep;
    const double rho_sq = t.x0 * t.x0 + t.y0 * t.y0;
    rep.cond1_ratio =
        cfg.lambda * std::sqrt(t.z0 * t.z0 + rho_sq + R * R) / (t.z0 * t.z0);
    if (rho_sq == 0.0) {
        rep.cond2_ratio = 0.0;  // right-hand side is +infinity on the CPL
    } else {
        const double rho = std::sqrt(rho_sq);
        rep.cond2_ratio = 2.0 * R / (t.z0 * t.z0 / rho + rho);
    }
    rep.cond1_ok = rep.cond1_ratio <= 0.1;
    rep.cond2_ok = rep.cond2_ratio <= 0.1;
    return rep;
}

ApproxFisherParams approx_params(const TerminalPosition& t, double R,
                                 const RadioConfig& cfg) {
    require_valid(t);
    require_valid(cfg);
    const double z1 = std::sqrt(t.x0 * t.x0 + t.y0 * t.y0 + t.z0 * t.z0);
    const CplFisher cpl = fisher_cpl({z1, R, cfg.lambda});
    const double ratio = t.z0 / z1;
    // The CPL closed forms are normalized to N0 = 2; restore the 2/N0 factor
    // so all methods share the same SNR scaling.
    const double snr = 2.0 / cfg.n0;
    return {z1, ratio * cpl.ixy * snr, ratio * ratio * ratio * cpl.iz * snr};
}

FisherMatrix fisher_approx_prop1(const TerminalPosition& t, double R,
                                 const RadioConfig& cfg) {
    const ConditionReport rep = check_conditions(t, R, cfg);
    if (!rep.cond1_ok || !rep.cond2_ok)
        std::cerr << "warning: mild-condition ratios " << rep.cond1_ratio << ", "
                  << rep.cond2_ratio << " exceed 0.1; Proposition-1 accuracy degrades\n";
    const auto [z1, alpha, beta] = approx_params(t, R, cfg);
    const double vx = t.x0 / t.z0;
    const double vy = t.y0 / t.z0;
    FisherMatrix f;
    f.m(0, 0) = alpha + beta * vx * vx;
    f.m(0, 1) = f.m(1, 0) = beta * vx * vy;
    f.m(0, 2) = f.m(2, 0) = beta * vx;
    f.m(1, 1) = alpha + beta * vy * vy;
    f.m(1, 2) = f.m(2, 1) = beta * vy;
    f.m(2, 2) = beta;
    f.provenance = Provenance::Prop1Approx;
    return f;
}

CrlbMatrix crlb_approx_prop1(const TerminalPosition& t, double R,
                             const RadioConfig& cfg) {
    const auto [z1, alpha, beta] = approx_params(t, R, cfg);
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("approximate Fisher parameters must be > 0");
    CrlbMatrix c;
    c.m(0, 0) = c.m(1, 1) = 1.0 / alpha;
    c.m(0, 1) = c.m(1, 0) = 0.0;
    c.m(0, 2) = c.m(2, 0) = -t.x0 / (alpha * t.z0);
    c.m(1, 2) = c.m(2, 1) = -t.y0 / (alpha * t.z0);
    c.m(2, 2) = 1.0 / beta + (t.x0 * t.x0 + t.y0 * t.y0) / (alpha * t.z0 * t.z0);
    c.provenance = Provenance::Prop1Approx;
    return c;
}

CplCrlb crlb_approx_prop2(const TerminalPosition& t, double R,
                          const RadioConfig& cfg) {
    require_valid(t);
    require_valid(cfg);
    if (!(R > 0.0)) throw std::invalid_argument("R must be > 0");
    if (R / t.z0 > 0.3)
        std::cerr << "warning: far-field law evaluated at R/z0 = " << R / t.z0
                  << " (> 0.3); expect large approximation error\n";
    const double rho_sq = t.x0 * t.x0 + t.y0 * t.y0;
    const double z1 = std::sqrt(rho_sq + t.z0 * t.z0);
    const double z1_5 = z1 * z1 * z1 * z1 * z1;
    const double lamsq = cfg.lambda * cfg.lambda;
    const double r4 = R * R * R * R;
    const double snr = cfg.n0 / 2.0;  // CRLB scales up with N0
    const double cxy = 4.0 * lamsq * z1_5 / (kPi * kPi * t.z0 * r4) * snr;
    const double cz = (lamsq * t.z0 * t.z0 / (kPi * kPi * R * R) +
                       4.0 * lamsq * rho_sq * z1_5 /
                           (kPi * kPi * t.z0 * t.z0 * t.z0 * r4)) *
                      snr;
    return {cxy, cz};
}

}  // namespace lis
