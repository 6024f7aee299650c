#pragma once

#include <stdexcept>
#include <string>

namespace lis {

/// Cartesian terminal coordinates. The LIS occupies the z = 0 plane and the
/// terminal must be in the z > 0 half-space; z0 = 0 is a singularity (no
/// signal is received).
struct TerminalPosition {
    double x0 = 0.0;
    double y0 = 0.0;
    double z0 = 1.0;
};

/// A point on the LIS plane (z = 0).
struct SurfacePoint {
    double x = 0.0;
    double y = 0.0;
};

/// Wavelength and noise spectral density. N0 defaults to 2 so that the 2/N0
/// prefactor of the Fisher integral drops out.
struct RadioConfig {
    double lambda = 0.1;
    double n0 = 2.0;
};

/// Disk-shaped aperture with center on the z = 0 plane.
struct Disk {
    double cx = 0.0;
    double cy = 0.0;
    double radius = 1.0;
};

inline void require_valid(const TerminalPosition& t) {
    if (!(t.z0 > 0.0))
        throw std::invalid_argument("terminal z0 must be > 0 (z0 = " +
                                    std::to_string(t.z0) + ")");
}

inline void require_valid(const RadioConfig& cfg) {
    if (!(cfg.lambda > 0.0))
        throw std::invalid_argument("wavelength must be > 0");
    if (!(cfg.n0 > 0.0))
        throw std::invalid_argument("noise spectral density must be > 0");
}

inline void require_valid(const Disk& d) {
    if (!(d.radius > 0.0))
        throw std::invalid_argument("disk radius must be > 0");
}

}  // namespace lis
