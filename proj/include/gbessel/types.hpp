#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string_view>

namespace gbessel {

inline constexpr double kEps = 2.220446049250313e-16;

/// Method used to produce a value; kept for diagnostics only.
enum class Regime { series, intermediate, asymptotic };

std::string_view to_string(Regime regime) noexcept;

/// A computed value together with a conservative absolute error estimate.
struct FunctionValue {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    Regime regime = Regime::series;
};

/// Accuracy and budget knobs shared by all evaluators.
///
/// The large-argument expansion is used when
/// x > max(20, asymptotic_threshold_scale * nu^2).
struct EvaluationConfig {
    double target_rel_tol = 1e-12;
    int max_series_terms = 500;
    double asymptotic_threshold_scale = 1.5;

    [[nodiscard]] double asymptotic_threshold(double nu) const noexcept {
        return std::max(20.0, asymptotic_threshold_scale * nu * nu);
    }

    /// Throws DomainError when a field is out of range.
    void validate() const;
};

/// The pair (nu, alpha) selecting C_nu(x; alpha) = cos(alpha) J_nu(x) - sin(alpha) Y_nu(x).
///
/// alpha is a mixing angle in radians restricted to [0, pi). Use make() to
/// get a validated value; the aggregate form is left open for internal code
/// that shifts the order of an already-validated pair.
struct CylinderParams {
    double nu = 0.0;
    double alpha = 0.0;

    static CylinderParams make(double nu, double alpha);

    [[nodiscard]] CylinderParams with_order(double new_nu) const noexcept { return {new_nu, alpha}; }
    [[nodiscard]] bool is_first_kind() const noexcept { return alpha == 0.0; }
};

}  // namespace gbessel
