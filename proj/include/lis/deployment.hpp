#pragma once

#include <utility>
#include <vector>

#include "lis/fisher.hpp"
#include "lis/types.hpp"

namespace lis {

/// Centralized or distributed placement of equal-total-area disks on a
/// W x H surface. split = 1: one disk of radius R at the origin; split = 4:
/// radius R/2 at (+-W/4, +-H/4); split = 16: radius R/4 on the 4x4 grid
/// x, y in {+-W/8, +-3W/8}.
struct DeploymentLayout {
    double width;
    double height;
    int split;
    double total_radius;     // R of the equivalent centralized disk
    double per_disk_radius;  // total_radius / sqrt(split)
    std::vector<Disk> disks;
};

/// Approximate aggregated Fisher diagonal for the 4-way split, both the
/// exact-D forms and the D << z0 simplifications. D = sqrt(W^2+H^2)/4.
struct DeploymentBound {
    double d;
    double ixy;            // exact-D branch
    double iz;
    double ixy_farfield;   // D << z0 branch
    double iz_farfield;
};

DeploymentLayout make_layout(double width, double height, int split, double r_total);

/// Closed-form aggregated Fisher for split = 4 layouts (terminal on the CPL,
/// far field). Warns when R/z0 > 0.3.
DeploymentBound deployment_fisher_approx(double z0, const DeploymentLayout& layout,
                                         const RadioConfig& cfg);

/// Radius below which the 4-way distributed deployment beats the centralized
/// one for x/y: sqrt((W^2 + H^2) / 6).
double crossover_radius(double width, double height);

/// Exact (to quadrature tolerance) CRLB for any layout and terminal.
CrlbMatrix deployment_crlb_numeric(const TerminalPosition& t,
                                   const DeploymentLayout& layout,
                                   const RadioConfig& cfg, const Tolerance& tol = {},
                                   std::size_t max_evals = kDefaultEvalBudget);

}  // namespace lis
