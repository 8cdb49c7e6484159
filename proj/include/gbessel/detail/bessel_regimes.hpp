#pragma once

// Regime-specific evaluators. Exposed for the seam-consistency tests and the
// benchmark; library users should call the functions in bessel.hpp.

#include "gbessel/types.hpp"

namespace gbessel::detail {

/// J_nu, Y_nu, J_{nu+1}, Y_{nu+1} with absolute error estimates.
struct JYValues {
    double j = 0.0, y = 0.0, j_next = 0.0, y_next = 0.0;
    double j_err = 0.0, y_err = 0.0, j_next_err = 0.0, y_next_err = 0.0;
    Regime regime = Regime::series;
};

/// Ascending series for J_nu(x) scaled by Gamma(nu+1)(2/x)^nu. Requires
/// nu >= 0; intended for x <= 2 but valid (with cancellation) beyond.
FunctionValue j_series_normalized(double nu, double x, const EvaluationConfig& cfg);

/// Ascending series for J_nu(x), nu >= 0.
FunctionValue j_series(double nu, double x, const EvaluationConfig& cfg);

/// Small-x regime: J by ascending series, Y by Temme's series at
/// mu = nu - round(nu) and forward recurrence. nu >= 0.
JYValues jy_small_x(double nu, double x, const EvaluationConfig& cfg);

/// Intermediate regime (continued fractions + Steed). nu >= 0, x >= ~2.
JYValues jy_steed(double nu, double x, const EvaluationConfig& cfg);

/// Hankel large-argument expansion. nu >= 0. Throws ConvergenceError if the
/// expansion cannot reach cfg.target_rel_tol before its terms start growing.
JYValues jy_hankel(double nu, double x, const EvaluationConfig& cfg);

/// Regime dispatch for nu >= 0.
JYValues jy_nonnegative(double nu, double x, const EvaluationConfig& cfg);

/// Any order nu >= -2 (negative orders by reflection). No domain checks.
JYValues jy_any(double nu, double x, const EvaluationConfig& cfg);

}  // namespace gbessel::detail
