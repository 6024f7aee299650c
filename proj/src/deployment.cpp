#include "lis/deployment.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace lis {

namespace {
constexpr double kPi = 3.14159265358979323846;

void warn_if_outside(const DeploymentLayout& l) {
    for (const Disk& d : l.disks) {
        if (std::abs(d.cx) + d.radius > l.width / 2.0 + 1e-12 ||
            std::abs(d.cy) + d.radius > l.height / 2.0 + 1e-12) {
            std::cerr << "warning: disk at (" << d.cx << ", " << d.cy << ") radius "
                      << d.radius << " extends beyond the " << l.width << " x "
                      << l.height << " surface\n";
            return;
        }
    }
}
}  // namespace

DeploymentLayout make_layout(double width, double height, int split, double r_total) {
    if (!(width > 0.0) || !(height > 0.0) || !(r_total > 0.0))
        throw std::invalid_argument("layout dimensions must be > 0");
    if (split != 1 && split != 4 && split != 16)
        throw std::invalid_argument("split must be 1, 4 or 16");
    DeploymentLayout l;
    l.width = width;
    l.height = height;
    l.split = split;
    l.total_radius = r_total;
    l.per_disk_radius = r_total / std::sqrt(static_cast<double>(split));
    if (split == 1) {
        l.disks.push_back({0.0, 0.0, r_total});
    } else if (split == 4) {
        for (double sx : {-1.0, 1.0})
            for (double sy : {-1.0, 1.0})
                l.disks.push_back({sx * width / 4.0, sy * height / 4.0, l.per_disk_radius});
    } else {
        for (double fx : {-3.0, -1.0, 1.0, 3.0})
            for (double fy : {-3.0, -1.0, 1.0, 3.0})
                l.disks.push_back(
                    {fx * width / 8.0, fy * height / 8.0, l.per_disk_radius});
    }
    warn_if_outside(l);
    return l;
}

DeploymentBound deployment_fisher_approx(double z0, const DeploymentLayout& layout,
                                         const RadioConfig& cfg) {
    if (layout.split != 4)
        throw std::invalid_argument(
            "closed-form deployment Fisher is defined for split = 4 only");
    if (!(z0 > 0.0)) throw std::invalid_argument("z0 must be > 0");
    require_valid(cfg);
    const double R = layout.total_radius;
    if (R / z0 > 0.3)
        std::cerr << "warning: deployment approximation evaluated at R/z0 = " << R / z0
                  << " (> 0.3)\n";
    DeploymentBound b;
    b.d = std::sqrt(layout.width * layout.width + layout.height * layout.height) / 4.0;
    const double lamsq = cfg.lambda * cfg.lambda;
    const double s = std::pow(z0 * z0 + b.d * b.d, 2.5);
    const double pi2 = kPi * kPi;
    const double snr = 2.0 / cfg.n0;
    b.ixy = snr * (pi2 * z0 * R * R * R * R / (16.0 * lamsq * s) +
                   pi2 * b.d * b.d * z0 * R * R / (2.0 * lamsq * s));
    b.iz = snr * pi2 * R * R * z0 * z0 * z0 / (lamsq * s);
    const double z04 = z0 * z0 * z0 * z0;
    b.ixy_farfield = snr * pi2 * R * R * R * R / (4.0 * lamsq * z04) *
                     (0.25 + 2.0 * b.d * b.d / (R * R));
    b.iz_farfield = snr * pi2 * R * R / (lamsq * z0 * z0);
    return b;
}

double crossover_radius(double width, double height) {
    if (!(width > 0.0) || !(height > 0.0))
        throw std::invalid_argument("surface dimensions must be > 0");
    return std::sqrt((width * width + height * height) / 6.0);
}

CrlbMatrix deployment_crlb_numeric(const TerminalPosition& t,
                                   const DeploymentLayout& layout,
                                   const RadioConfig& cfg, const Tolerance& tol,
                                   std::size_t max_evals) {
    return crlb_from_fisher(fisher_sum(t, layout.disks, cfg, tol, max_evals));
}

}  // namespace lis
