#pragma once

#include "lis/types.hpp"

namespace lis {

/// Geometry for a terminal on the central perpendicular line, (0, 0, z0),
/// observed through an origin-centered disk of the given radius.
struct CplConfig {
    double z0;
    double radius;
    double lambda;

    double tau() const { return radius / z0; }
};

struct CplFisher {
    double ixy;  // Fisher information for the x and y dimensions
    double iz;   // Fisher information for the z dimension
};

struct CplCrlb {
    double cxy;
    double cz;
};

/// Disk integral of x^2 * eta^{-n/2} (equivalently y^2 * eta^{-n/2}) for a
/// terminal on the CPL, in closed form. Undefined (removable singularity)
/// at n = 2 and n = 4.
double g1(double n, double z0, double R);

/// Disk integral of eta^{-n/2} for a terminal on the CPL, in closed form.
/// Undefined at n = 2.
double g2(double n, double z0, double R);

/// Both closed-form routes for the CPL Fisher diagonal: the -B1/A, -2B2/A
/// form and the g1/g2 form. Exposed separately so the transcription
/// cross-check stays testable.
CplFisher fisher_cpl_route_ab(const CplConfig& c);
CplFisher fisher_cpl_route_g(const CplConfig& c);

/// CPL Fisher diagonal. Evaluates both routes and throws
/// InternalConsistencyError if they disagree beyond 1e-9 relative; also
/// requires both values to be strictly positive.
CplFisher fisher_cpl(const CplConfig& c);

/// tau-only shape factors of the simplified CRLBs (valid for lambda << z0).
double f1(double tau);
double f2(double tau);

/// Simplified CRLBs Cxy = (3 lambda^2 / 2 pi^2) f1(tau) and
/// Cz = (3 lambda^2 / 2 pi^2) f2(tau).
CplCrlb crlb_cpl_simplified(double tau, double lambda);

/// Small-tau power laws Cxy = 4 lambda^2 / (pi^2 tau^4),
/// Cz = lambda^2 / (pi^2 tau^2). Warns on stderr above tau = 0.3.
CplCrlb crlb_cpl_small_tau(double tau, double lambda);

/// Asymptotic large-aperture limit 3 lambda^2 / (2 pi^2), common to all
/// three dimensions.
double crlb_limit(double lambda);

}  // namespace lis
