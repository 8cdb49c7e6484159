#include "gbessel/bessel.hpp"

#include <cmath>
#include <string>

#include "gbessel/detail/bessel_regimes.hpp"
#include "gbessel/error.hpp"
#include "gbessel/gamma.hpp"

namespace gbessel {

std::string_view to_string(Regime regime) noexcept {
    switch (regime) {
        case Regime::series: return "series";
        case Regime::intermediate: return "intermediate";
        case Regime::asymptotic: return "asymptotic";
    }
    return "unknown";
}

void EvaluationConfig::validate() const {
    if (!(target_rel_tol > 0.0 && target_rel_tol < 1.0)) throw DomainError("target_rel_tol must lie in (0, 1)");
    if (max_series_terms < 10) throw DomainError("max_series_terms must be at least 10");
    if (!(asymptotic_threshold_scale > 0.0)) throw DomainError("asymptotic_threshold_scale must be positive");
}

namespace {

void check_domain(double nu, double x, const char* where) {
    if (!std::isfinite(nu) || !(nu > -1.0)) {
        throw DomainError(std::string(where) + ": order must be finite and > -1, got " + std::to_string(nu));
    }
    if (!std::isfinite(x) || !(x > 0.0)) {
        throw DomainError(std::string(where) + ": argument must be finite and > 0, got " + std::to_string(x));
    }
}

FunctionValue finite_or_throw(FunctionValue v, const char* where) {
    if (!std::isfinite(v.value)) throw OverflowError(std::string(where) + ": result overflows");
    return v;
}

}  // namespace

BesselPair bessel_jy(double nu, double x, const EvaluationConfig& cfg) {
    check_domain(nu, x, "bessel_jy");
    const detail::JYValues v = detail::jy_any(nu, x, cfg);
    return {
        {v.j, v.j_err, v.regime},
        {v.y, v.y_err, v.regime},
        {v.j_next, v.j_next_err, v.regime},
        {v.y_next, v.y_next_err, v.regime},
    };
}

FunctionValue bessel_j(double nu, double x, const EvaluationConfig& cfg) {
    check_domain(nu, x, "bessel_j");
    const detail::JYValues v = detail::jy_any(nu, x, cfg);
    return finite_or_throw({v.j, v.j_err, v.regime}, "bessel_j");
}

FunctionValue bessel_y(double nu, double x, const EvaluationConfig& cfg) {
    check_domain(nu, x, "bessel_y");
    const detail::JYValues v = detail::jy_any(nu, x, cfg);
    return finite_or_throw({v.y, v.y_err, v.regime}, "bessel_y");
}

FunctionValue bessel_j_prime(double nu, double x, const EvaluationConfig& cfg) {
    check_domain(nu, x, "bessel_j_prime");
    // one evaluation at nu - 1 yields J_{nu-1} and J_nu
    const detail::JYValues v = detail::jy_any(nu - 1.0, x, cfg);
    const double scaled = nu / x * v.j_next;
    const double value = v.j - scaled;
    const double err =
        v.j_err + std::fabs(nu / x) * v.j_next_err + 2.0 * kEps * (std::fabs(v.j) + std::fabs(scaled));
    return finite_or_throw({value, err, v.regime}, "bessel_j_prime");
}

FunctionValue bessel_y_prime(double nu, double x, const EvaluationConfig& cfg) {
    check_domain(nu, x, "bessel_y_prime");
    const detail::JYValues v = detail::jy_any(nu - 1.0, x, cfg);
    const double scaled = nu / x * v.y_next;
    const double value = v.y - scaled;
    const double err =
        v.y_err + std::fabs(nu / x) * v.y_next_err + 2.0 * kEps * (std::fabs(v.y) + std::fabs(scaled));
    return finite_or_throw({value, err, v.regime}, "bessel_y_prime");
}

FunctionValue bessel_j_normalized(double nu, double x, const EvaluationConfig& cfg) {
    check_domain(nu, x, "bessel_j_normalized");
    if (x <= 2.0 && nu >= 0.0) return detail::j_series_normalized(nu, x, cfg);
    const FunctionValue j = bessel_j(nu, x, cfg);
    const double log_scale = log_gamma(nu + 1.0) + nu * std::log(2.0 / x);
    const double scale = std::exp(log_scale);
    const double rel = 4.0 * kEps * (std::fabs(log_scale) + 1.0);
    const double value = j.value * scale;
    return finite_or_throw({value, j.abs_error_estimate * scale + rel * std::fabs(value), j.regime},
                           "bessel_j_normalized");
}

}  // namespace gbessel
