#include "lis/fisher.hpp"

#include <cmath>

#include "lis/core_model.hpp"

namespace lis {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Numeric: return "numeric";
        case Provenance::ClosedForm: return "closed-form";
        case Provenance::Prop1Approx: return "prop1-approx";
    }
    return "unknown";
}

FisherMatrix fisher_matrix(const TerminalPosition& t, const Disk& d,
                           const RadioConfig& cfg, const Tolerance& tol,
                           std::size_t max_evals) {
    require_valid(t);
    require_valid(d);
    require_valid(cfg);
    FisherMatrix out;
    for (int i = 1; i <= 3; ++i) {
        for (int k = i; k <= 3; ++k) {
            auto field = [&, i, k](double x, double y) {
                return fisher_integrand({x, y}, t, cfg, i, k);
            };
            QuadratureResult q = integrate_disk(field, d, tol, max_evals);
            out.m(i - 1, k - 1) = q.value;
            out.m(k - 1, i - 1) = q.value;
            out.quad_error = std::max(out.quad_error, q.abs_error_estimate);
            out.evaluations += q.evaluations;
        }
    }
    out.provenance = Provenance::Numeric;
    return out;
}

FisherMatrix fisher_sum(const TerminalPosition& t, const std::vector<Disk>& apertures,
                        const RadioConfig& cfg, const Tolerance& tol,
                        std::size_t max_evals) {
    if (apertures.empty())
        throw std::invalid_argument("aperture list must be non-empty");
    FisherMatrix total;
    for (const Disk& d : apertures) {
        FisherMatrix f = fisher_matrix(t, d, cfg, tol, max_evals);
        total.m = total.m + f.m;
        total.quad_error = std::max(total.quad_error, f.quad_error);
        total.evaluations += f.evaluations;
    }
    total.provenance = Provenance::Numeric;
    return total;
}

CrlbMatrix crlb_from_fisher(const FisherMatrix& f) {
    const auto ev = symmetric_eigenvalues(f.m);
    const double scale = std::max(std::abs(ev[0]), std::abs(ev[2]));
    if (!(scale > 0.0) || std::abs(ev[0]) * 1e12 < scale) {
        // Identify the near-null direction via inverse iteration seeds.
        std::array<double, 3> dir{1.0, 0.0, 0.0};
        double best = std::abs(f.m(0, 0));
        for (std::size_t i = 1; i < 3; ++i) {
            if (std::abs(f.m(i, i)) < best) {
                best = std::abs(f.m(i, i));
                dir = {0.0, 0.0, 0.0};
                dir[i] = 1.0;
            }
        }
        throw SingularFisherError(
            "Fisher matrix is singular or ill-conditioned (smallest eigenvalue " +
                std::to_string(ev[0]) + ")",
            dir);
    }
    CrlbMatrix c;
    c.m = f.m.inverse();
    // Mirror to kill inversion round-off asymmetry.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = i + 1; k < 3; ++k) {
            const double v = 0.5 * (c.m(i, k) + c.m(k, i));
            c.m(i, k) = v;
            c.m(k, i) = v;
        }
    for (std::size_t i = 0; i < 3; ++i) {
        if (!(c.m(i, i) > 0.0)) {
            std::array<double, 3> dir{0.0, 0.0, 0.0};
            dir[i] = 1.0;
            throw SingularFisherError("CRLB diagonal is non-positive in dimension " +
                                          std::to_string(i + 1),
                                      dir);
        }
    }
    c.provenance = f.provenance;
    c.quad_error = f.quad_error;
    return c;
}

}  // namespace lis
