#pragma once

#include "gbessel/types.hpp"

namespace gbessel {

/// J and Y at orders nu and nu + 1, each with an error estimate.
struct BesselPair {
    FunctionValue j;
    FunctionValue y;
    FunctionValue j_next;  // J_{nu+1}
    FunctionValue y_next;  // Y_{nu+1}
};

/// Bessel functions of the first and second kind for real order nu > -1 and
/// x > 0.
///
/// Three regimes are used:
///   - x <= 2: ascending power series for J, Temme's series plus forward
///     recurrence for Y (Regime::series);
///   - 2 < x <= max(20, 1.5 nu^2): continued fraction for J_{nu+1}/J_nu,
///     backward recurrence, Steed's method for the Wronskian normalisation
///     and forward recurrence for Y (Regime::intermediate);
///   - beyond: Hankel's large-argument expansion (Regime::asymptotic).
/// Negative orders are obtained by reflection from positive ones.
///
/// The relative error is below cfg.target_rel_tol away from zeros. Close to
/// a zero the estimate becomes absolute and scales with the modulus
/// sqrt(J^2 + Y^2).
FunctionValue bessel_j(double nu, double x, const EvaluationConfig& cfg = {});
FunctionValue bessel_y(double nu, double x, const EvaluationConfig& cfg = {});

/// J'_nu(x) = J_{nu-1}(x) - (nu/x) J_nu(x).
FunctionValue bessel_j_prime(double nu, double x, const EvaluationConfig& cfg = {});
/// Y'_nu(x) = Y_{nu-1}(x) - (nu/x) Y_nu(x).
FunctionValue bessel_y_prime(double nu, double x, const EvaluationConfig& cfg = {});

/// J and Y at nu and nu + 1 from one evaluation.
BesselPair bessel_jy(double nu, double x, const EvaluationConfig& cfg = {});

/// Gamma(nu + 1) (2/x)^nu J_nu(x), which tends to 1 as x -> 0. Computed
/// without forming the prefactor when x is small, so it stays finite where
/// J_nu underflows.
FunctionValue bessel_j_normalized(double nu, double x, const EvaluationConfig& cfg = {});

}  // namespace gbessel
