#pragma once

#include "lis/closed_form.hpp"
#include "lis/fisher.hpp"
#include "lis/types.hpp"

namespace lis {

/// Left/right ratios of the two mild conditions the off-CPL approximations
/// rest on. "Much smaller" is operationalized as ratio <= 0.1; the raw
/// ratios are always reported so callers can apply their own threshold.
struct ConditionReport {
    double cond1_ratio = 0.0;
    double cond2_ratio = 0.0;
    bool cond1_ok = false;
    bool cond2_ok = false;
};

/// Parameters of the approximate off-CPL Fisher matrix: the terminal range
/// z1 and the scaled CPL informations alpha (x/y) and beta (z).
struct ApproxFisherParams {
    double z1;
    double alpha;
    double beta;
};

ConditionReport check_conditions(const TerminalPosition& t, double R,
                                 const RadioConfig& cfg);

/// z1 = sqrt(x0^2 + y0^2 + z0^2); alpha = (z0/z1) Ixy_cpl(z1, R);
/// beta = (z0/z1)^3 Iz_cpl(z1, R). Uses the exact CPL closed forms so the
/// approximation stays accurate at moderate tau. Scales with 2/N0.
ApproxFisherParams approx_params(const TerminalPosition& t, double R,
                                 const RadioConfig& cfg);

/// Approximate Fisher matrix alpha*diag(1,1,0) + beta*v v^T with
/// v = (x0/z0, y0/z0, 1). Exact on the CPL.
FisherMatrix fisher_approx_prop1(const TerminalPosition& t, double R,
                                 const RadioConfig& cfg);

/// Closed-form inverse of fisher_approx_prop1: C11 = C22 = 1/alpha, C12 = 0,
/// C13 = -x0/(alpha z0), C23 = -y0/(alpha z0),
/// C33 = 1/beta + (x0^2+y0^2)/(alpha z0^2).
CrlbMatrix crlb_approx_prop1(const TerminalPosition& t, double R,
                             const RadioConfig& cfg);

/// Far-field (R << z0) power laws: Cxy = 4 lambda^2 z1^5 / (pi^2 z0 R^4),
/// Cz = lambda^2 z0^2 / (pi^2 R^2) + 4 lambda^2 (x0^2+y0^2) z1^5 / (pi^2 z0^3 R^4).
/// Warns on stderr above R/z0 = 0.3.
CplCrlb crlb_approx_prop2(const TerminalPosition& t, double R,
                          const RadioConfig& cfg);

}  // namespace lis
