#pragma once

#include "lis/fisher.hpp"
#include "lis/types.hpp"

namespace lis {

/// Spherical terminal coordinates: range kappa, polar angle phi from the
/// z-axis (0 <= phi < pi/2 keeps the terminal in front of the LIS) and
/// azimuth psi in [0, 2 pi).
struct SphericalPosition {
    double kappa;
    double phi;
    double psi;
};

TerminalPosition sph_to_cart(const SphericalPosition& s);

/// Inverse map; psi = 0 by convention on the CPL (phi = 0).
SphericalPosition cart_to_sph(const TerminalPosition& t);

/// Jacobian d(x0, y0, z0)/d(kappa, phi, psi), columns in that order.
Mat3 spherical_jacobian(const SphericalPosition& s);

/// Reparametrizes a Cartesian Fisher matrix to the (kappa, phi, psi) basis
/// via the congruence J^T F J. Throws on phi = 0 where the psi column of J
/// vanishes (azimuth unidentifiable on the CPL).
FisherMatrix fisher_spherical(const FisherMatrix& f_cart, const SphericalPosition& s);

/// CRLB in spherical parameters. On the CPL only the (kappa, phi) block is
/// identifiable; it is returned with the psi entries NaN and the flag set
/// instead of failing.
struct SphericalCrlb {
    Mat3 m;
    Provenance provenance;
    bool psi_identifiable = true;
};

SphericalCrlb crlb_spherical(const FisherMatrix& f_cart, const SphericalPosition& s);

}  // namespace lis
