#pragma once

#include <complex>

#include "lis/types.hpp"

namespace lis {

/// Derivatives of the received field w.r.t. the terminal coordinates
/// (x0, y0, z0), in that order. Units 1/m.
struct FieldGradient {
    std::complex<double> d1;
    std::complex<double> d2;
    std::complex<double> d3;
};

/// Squared distance between a surface point and the terminal:
/// z0^2 + (y - y0)^2 + (x - x0)^2. Strictly positive for z0 > 0.
double eta(const SurfacePoint& p, const TerminalPosition& t);

/// Noiseless received field at a surface point. Magnitude
/// sqrt(z0) / (2 sqrt(pi) eta^{3/4}), phase -2 pi sqrt(eta) / lambda
/// (kept unreduced; wrap only for display).
std::complex<double> signal(const SurfacePoint& p, const TerminalPosition& t,
                            const RadioConfig& cfg);

/// First-order derivatives of signal() w.r.t. x0, y0, z0.
FieldGradient signal_gradient(const SurfacePoint& p, const TerminalPosition& t,
                              const RadioConfig& cfg);

/// Fisher integrand (2/N0) Re{ds_k conj(ds_i)} with i, k in {1,2,3}
/// (1=x, 2=y, 3=z). The complex exponentials cancel analytically, so this
/// evaluates real polynomial-in-eta factors only; no complex arithmetic.
double fisher_integrand(const SurfacePoint& p, const TerminalPosition& t,
                        const RadioConfig& cfg, int i, int k);

/// Same quantity computed the slow way from signal_gradient(), retained to
/// test the cancelled path against.
double fisher_integrand_direct(const SurfacePoint& p, const TerminalPosition& t,
                               const RadioConfig& cfg, int i, int k);

}  // namespace lis
