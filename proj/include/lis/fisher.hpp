#pragma once

#include <string>
#include <vector>

#include "lis/mat3.hpp"
#include "lis/quadrature.hpp"
#include "lis/types.hpp"

namespace lis {

/// How a Fisher/CRLB matrix was obtained; travels with the matrix so CSV
/// rows can be labelled by method.
enum class Provenance { Numeric, ClosedForm, Prop1Approx };

std::string to_string(Provenance p);

/// 3x3 symmetric Fisher-information matrix over (x, y, z), entries 1/m^2.
struct FisherMatrix {
    Mat3 m;
    Provenance provenance = Provenance::Numeric;
    double quad_error = 0.0;       // worst per-entry quadrature error estimate
    std::size_t evaluations = 0;   // total field evaluations spent
};

/// 3x3 symmetric CRLB matrix, entries m^2.
struct CrlbMatrix {
    Mat3 m;
    Provenance provenance = Provenance::Numeric;
    double quad_error = 0.0;
};

/// Exact Fisher matrix by quadrature of the Fisher integrand over one disk.
/// Computes the six independent entries and mirrors the upper triangle.
FisherMatrix fisher_matrix(const TerminalPosition& t, const Disk& d,
                           const RadioConfig& cfg, const Tolerance& tol = {},
                           std::size_t max_evals = kDefaultEvalBudget);

/// Entrywise sum of per-aperture Fisher matrices (independent observations).
FisherMatrix fisher_sum(const TerminalPosition& t, const std::vector<Disk>& apertures,
                        const RadioConfig& cfg, const Tolerance& tol = {},
                        std::size_t max_evals = kDefaultEvalBudget);

/// Inverts a Fisher matrix into the CRLB matrix. Throws SingularFisherError
/// when the matrix is ill-conditioned (condition estimate > 1e12) or the
/// inverse has a non-positive diagonal entry.
CrlbMatrix crlb_from_fisher(const FisherMatrix& f);

}  // namespace lis
