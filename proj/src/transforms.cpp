#include "lis/transforms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lis {

namespace {
constexpr double kPi = 3.14159265358979323846;

void check(const SphericalPosition& s) {
    if (!(s.kappa > 0.0)) throw std::invalid_argument("kappa must be > 0");
    if (!(s.phi >= 0.0) || !(s.phi < kPi / 2.0))
        throw std::invalid_argument("phi must lie in [0, pi/2) (z0 > 0)");
}
}  // namespace

TerminalPosition sph_to_cart(const SphericalPosition& s) {
    check(s);
    return {s.kappa * std::sin(s.phi) * std::cos(s.psi),
            s.kappa * std::sin(s.phi) * std::sin(s.psi),
            s.kappa * std::cos(s.phi)};
}

SphericalPosition cart_to_sph(const TerminalPosition& t) {
    require_valid(t);
    const double kappa = std::sqrt(t.x0 * t.x0 + t.y0 * t.y0 + t.z0 * t.z0);
    const double phi = std::acos(t.z0 / kappa);
    double psi = (phi == 0.0) ? 0.0 : std::atan2(t.y0, t.x0);
    if (psi < 0.0) psi += 2.0 * kPi;
    return {kappa, phi, psi};
}

Mat3 spherical_jacobian(const SphericalPosition& s) {
    check(s);
    const double sp = std::sin(s.phi), cp = std::cos(s.phi);
    const double ss = std::sin(s.psi), cs = std::cos(s.psi);
    Mat3 j;
    j(0, 0) = sp * cs;
    j(0, 1) = s.kappa * cp * cs;
    j(0, 2) = -s.kappa * sp * ss;
    j(1, 0) = sp * ss;
    j(1, 1) = s.kappa * cp * ss;
    j(1, 2) = s.kappa * sp * cs;
    j(2, 0) = cp;
    j(2, 1) = -s.kappa * sp;
    j(2, 2) = 0.0;
    return j;
}

FisherMatrix fisher_spherical(const FisherMatrix& f_cart, const SphericalPosition& s) {
    if (s.phi == 0.0)
        throw SingularFisherError(
            "azimuth is unidentifiable on the CPL (phi = 0); spherical Fisher is "
            "rank-deficient in psi",
            {0.0, 0.0, 1.0});
    const Mat3 j = spherical_jacobian(s);
    FisherMatrix out;
    out.m = j.transposed() * f_cart.m * j;
    // Congruence preserves symmetry exactly; mirror away round-off.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = i + 1; k < 3; ++k) {
            const double v = 0.5 * (out.m(i, k) + out.m(k, i));
            out.m(i, k) = v;
            out.m(k, i) = v;
        }
    out.provenance = f_cart.provenance;
    out.quad_error = f_cart.quad_error;
    out.evaluations = f_cart.evaluations;
    return out;
}

SphericalCrlb crlb_spherical(const FisherMatrix& f_cart, const SphericalPosition& s) {
    SphericalCrlb out;
    out.provenance = f_cart.provenance;
    if (s.phi == 0.0) {
        // Identifiable (kappa, phi) block only.
        const Mat3 j = spherical_jacobian(s);
        const Mat3 fs = j.transposed() * f_cart.m * j;
        const double det = fs(0, 0) * fs(1, 1) - fs(0, 1) * fs(1, 0);
        if (det == 0.0)
            throw SingularFisherError("spherical Fisher block is singular",
                                      {1.0, 0.0, 0.0});
        const double nan = std::numeric_limits<double>::quiet_NaN();
        out.m(0, 0) = fs(1, 1) / det;
        out.m(0, 1) = out.m(1, 0) = -fs(0, 1) / det;
        out.m(1, 1) = fs(0, 0) / det;
        out.m(0, 2) = out.m(2, 0) = nan;
        out.m(1, 2) = out.m(2, 1) = nan;
        out.m(2, 2) = nan;
        out.psi_identifiable = false;
        return out;
    }
    const FisherMatrix fs = fisher_spherical(f_cart, s);
    out.m = crlb_from_fisher(fs).m;
    return out;
}

}  // namespace lis
