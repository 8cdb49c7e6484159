#pragma once

#include "gbessel/types.hpp"

namespace gbessel {

/// C_{nu-1}, C_nu, C_{nu+1} at one abscissa.
struct CylinderStencil {
    FunctionValue prev;
    FunctionValue curr;
    FunctionValue next;
};

/// Turanian Delta_nu(x) = C_nu^2 - C_{nu-1} C_{nu+1} evaluated two ways.
struct TuranianReport {
    double x = 0.0;
    double delta = 0.0;        // C_nu^2 - C_{nu-1} C_{nu+1}
    double delta_alt = 0.0;    // (1 - nu^2/x^2) C_nu^2 + (C'_nu)^2
    double lower_bound = 0.0;  // C_nu^2 / (nu + 1)
    double margin = 0.0;       // delta - lower_bound
    double delta_error = 0.0;
    double delta_alt_error = 0.0;
    double margin_error = 0.0;
    double c_value = 0.0;  // C_nu(x), kept for callers that need it
    double c_error = 0.0;
    bool consistent = true;  // |delta - delta_alt| within the combined estimates
};

/// Phi_nu(x) = 2^nu x^-nu Gamma(nu+1) C_nu(x).
struct NormalizedValue {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    double scale_log = 0.0;  // log(2^nu Gamma(nu+1) x^-nu)
};

/// cos(alpha) J_nu(x) - sin(alpha) Y_nu(x).
FunctionValue c_val(const CylinderParams& p, double x, const EvaluationConfig& cfg = {});

/// Same combination for an arbitrary real angle (no reduction into [0, pi)).
FunctionValue c_val_unreduced(double nu, double alpha, double x, const EvaluationConfig& cfg = {});

/// C_{nu-1}, C_nu and C_{nu+1}. Accepts nu > -1 (order nu - 1 >= -2 is
/// reached by reflection).
CylinderStencil c_stencil(const CylinderParams& p, double x, const EvaluationConfig& cfg = {});

/// C'_nu from both forms C_{nu-1} - (nu/x) C_nu and -C_{nu+1} + (nu/x) C_nu,
/// combined with weights 1/err^2. Throws InconsistencyError if the two
/// differ by more than 100x their combined estimates.
FunctionValue c_prime(const CylinderParams& p, double x, const EvaluationConfig& cfg = {});
FunctionValue c_prime(const CylinderParams& p, double x, const CylinderStencil& s);

/// C_{nu+1} = (2 nu / x) C_nu - C_{nu-1}. Throws OverflowError on a
/// non-finite result.
double recurrence_next(const CylinderParams& p, double x, double c_prev, double c_curr);

/// Phi_nu(x), with the scale carried in log space.
NormalizedValue phi_val(const CylinderParams& p, double x, const EvaluationConfig& cfg = {});

/// Phi'_nu from -x Phi_{nu+1} / (2(nu+1)) and (2 nu / x)(Phi_{nu-1} - Phi_nu),
/// cross-checked as in c_prime. Requires nu > 0.
FunctionValue phi_prime(const CylinderParams& p, double x, const EvaluationConfig& cfg = {});

/// Delta_nu(x) by the product form and by the derivative form. nu > 0.
TuranianReport turanian(const CylinderParams& p, double x, const EvaluationConfig& cfg = {});

/// x C'_nu(x) / C_nu(x). Throws PoleError when |C_nu| < 1e3 times its error
/// estimate.
FunctionValue log_derivative(const CylinderParams& p, double x, const EvaluationConfig& cfg = {});

/// C_{nu,alpha}^2 - C_{nu,alpha-1} C_{nu,alpha+1} where the shifts act on the
/// mixing angle (radians, unreduced). Equal to sin^2(1)(J_nu^2 + Y_nu^2).
FunctionValue alpha_turanian(double nu, double x, double alpha, const EvaluationConfig& cfg = {});

}  // namespace gbessel
