#include "gbessel/cylinder.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gbessel/bessel.hpp"
#include "gbessel/detail/bessel_regimes.hpp"
#include "gbessel/error.hpp"
#include "gbessel/gamma.hpp"

namespace gbessel {

CylinderParams CylinderParams::make(double nu, double alpha) {
    if (!std::isfinite(nu)) throw DomainError("order must be finite");
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= std::numbers::pi) {
        throw DomainError("alpha must lie in [0, pi), got " + std::to_string(alpha));
    }
    return {nu, alpha};
}

namespace {

void check_args(double nu, double x, const char* where) {
    if (!std::isfinite(nu) || !(nu > -1.0)) {
        throw DomainError(std::string(where) + ": order must be finite and > -1, got " + std::to_string(nu));
    }
    if (!std::isfinite(x) || !(x > 0.0)) {
        throw DomainError(std::string(where) + ": argument must be finite and > 0, got " + std::to_string(x));
    }
}

struct Mix {
    double c, s;
};

Mix mix_of(double alpha) {
    if (alpha == 0.0) return {1.0, 0.0};
    return {std::cos(alpha), std::sin(alpha)};
}

FunctionValue combine(Mix m, double j, double y, double ej, double ey, Regime regime) {
    const double cj = m.c * j;
    const double sy = m.s * y;
    const double value = cj - sy;
    if (!std::isfinite(value)) throw OverflowError("cylinder function overflows");
    const double err = std::fabs(m.c) * ej + std::fabs(m.s) * ey + 2.0 * kEps * (std::fabs(cj) + std::fabs(sy));
    return {value, err, regime};
}

// Two estimates of one quantity, combined with inverse-variance weights.
FunctionValue weighted_pair(double f1, double e1, double f2, double e2, Regime regime, const char* what) {
    const double diff = std::fabs(f1 - f2);
    if (diff > 100.0 * (e1 + e2) && diff > 4.0 * kEps * (std::fabs(f1) + std::fabs(f2))) {
        throw InconsistencyError(std::string(what) + ": the two forms differ by " + std::to_string(diff) +
                                 ", estimates " + std::to_string(e1 + e2));
    }
    double value;
    if (e1 == 0.0 || e2 == 0.0) {
        value = e1 <= e2 ? f1 : f2;
    } else {
        const double w1 = 1.0 / (e1 * e1);
        const double w2 = 1.0 / (e2 * e2);
        value = (w1 * f1 + w2 * f2) / (w1 + w2);
    }
    const double best = e1 <= e2 ? f1 : f2;
    const double err = std::min(e1, e2) + std::fabs(value - best) + kEps * std::fabs(value);
    return {value, err, regime};
}

}  // namespace

FunctionValue c_val_unreduced(double nu, double alpha, double x, const EvaluationConfig& cfg) {
    check_args(nu, x, "c_val");
    if (!std::isfinite(alpha)) throw DomainError("c_val: alpha must be finite");
    const detail::JYValues v = detail::jy_any(nu, x, cfg);
    return combine(mix_of(alpha), v.j, v.y, v.j_err, v.y_err, v.regime);
}

FunctionValue c_val(const CylinderParams& p, double x, const EvaluationConfig& cfg) {
    return c_val_unreduced(p.nu, p.alpha, x, cfg);
}

CylinderStencil c_stencil(const CylinderParams& p, double x, const EvaluationConfig& cfg) {
    check_args(p.nu, x, "c_stencil");
    const Mix m = mix_of(p.alpha);
    // independent evaluations at nu - 1 and nu, so the two derivative forms
    // in c_prime do not share rounding
    const detail::JYValues lo = detail::jy_any(p.nu - 1.0, x, cfg);
    const detail::JYValues hi = detail::jy_any(p.nu, x, cfg);
    return {
        combine(m, lo.j, lo.y, lo.j_err, lo.y_err, lo.regime),
        combine(m, hi.j, hi.y, hi.j_err, hi.y_err, hi.regime),
        combine(m, hi.j_next, hi.y_next, hi.j_next_err, hi.y_next_err, hi.regime),
    };
}

FunctionValue c_prime(const CylinderParams& p, double x, const CylinderStencil& s) {
    const double k = p.nu / x;
    const double kc = k * s.curr.value;
    const double f1 = s.prev.value - kc;
    const double f2 = -s.next.value + kc;
    const double e1 = s.prev.abs_error_estimate + std::fabs(k) * s.curr.abs_error_estimate +
                      2.0 * kEps * (std::fabs(s.prev.value) + std::fabs(kc));
    const double e2 = s.next.abs_error_estimate + std::fabs(k) * s.curr.abs_error_estimate +
                      2.0 * kEps * (std::fabs(s.next.value) + std::fabs(kc));
    return weighted_pair(f1, e1, f2, e2, s.curr.regime, "c_prime");
}

FunctionValue c_prime(const CylinderParams& p, double x, const EvaluationConfig& cfg) {
    return c_prime(p, x, c_stencil(p, x, cfg));
}

double recurrence_next(const CylinderParams& p, double x, double c_prev, double c_curr) {
    const double next = 2.0 * p.nu / x * c_curr - c_prev;
    if (!std::isfinite(next)) throw OverflowError("recurrence_next: result overflows");
    return next;
}

NormalizedValue phi_val(const CylinderParams& p, double x, const EvaluationConfig& cfg) {
    check_args(p.nu, x, "phi_val");
    const double scale_log = p.nu * std::log(2.0 / x) + log_gamma(p.nu + 1.0);
    const double scale_rel = 4.0 * kEps * (std::fabs(scale_log) + 1.0);
    const Mix m = mix_of(p.alpha);

    NormalizedValue out;
    out.scale_log = scale_log;

    // J part: the normalised series stays finite where J itself underflows
    FunctionValue jn{0.0, 0.0, Regime::series};
    if (m.c != 0.0) jn = bessel_j_normalized(p.nu, x, cfg);
    double value = m.c * jn.value;
    double err = std::fabs(m.c) * jn.abs_error_estimate + kEps * std::fabs(value);

    if (m.s != 0.0) {
        const FunctionValue y = bessel_y(p.nu, x, cfg);
        if (y.value != 0.0) {
            const double log_mag = std::log(std::fabs(y.value)) + scale_log;
            if (log_mag > 709.0) throw OverflowError("phi_val: normalised value overflows");
            const double ys = std::copysign(std::exp(log_mag), y.value);
            const double ys_err = y.abs_error_estimate * std::exp(scale_log) + scale_rel * std::fabs(ys);
            value -= m.s * ys;
            err += std::fabs(m.s) * ys_err + kEps * std::fabs(m.s * ys);
        } else {
            err += std::fabs(m.s) * y.abs_error_estimate * std::exp(scale_log);
        }
    }
    out.value = value;
    out.abs_error_estimate = err;
    return out;
}

FunctionValue phi_prime(const CylinderParams& p, double x, const EvaluationConfig& cfg) {
    if (!(p.nu > 0.0)) throw DomainError("phi_prime: order must be > 0");
    const NormalizedValue lo = phi_val(p.with_order(p.nu - 1.0), x, cfg);
    const NormalizedValue mid = phi_val(p, x, cfg);
    const NormalizedValue hi = phi_val(p.with_order(p.nu + 1.0), x, cfg);
    const double ka = x / (2.0 * (p.nu + 1.0));
    const double f1 = -ka * hi.value;
    const double e1 = ka * hi.abs_error_estimate + kEps * std::fabs(f1);
    const double kb = 2.0 * p.nu / x;
    const double d = lo.value - mid.value;
    const double f2 = kb * d;
    const double e2 = kb * (lo.abs_error_estimate + mid.abs_error_estimate +
                            kEps * (std::fabs(lo.value) + std::fabs(mid.value))) +
                      kEps * std::fabs(f2);
    return weighted_pair(f1, e1, f2, e2, Regime::series, "phi_prime");
}

TuranianReport turanian(const CylinderParams& p, double x, const EvaluationConfig& cfg) {
    const CylinderStencil s = c_stencil(p, x, cfg);
    const FunctionValue cp = c_prime(p, x, s);
    const double c = s.curr.value;
    const double ec = s.curr.abs_error_estimate;
    const double c2 = c * c;
    const double prod = s.prev.value * s.next.value;

    TuranianReport r;
    r.x = x;
    r.c_value = c;
    r.c_error = ec;
    r.delta = c2 - prod;
    r.delta_error = 2.0 * std::fabs(c) * ec + std::fabs(s.prev.value) * s.next.abs_error_estimate +
                    std::fabs(s.next.value) * s.prev.abs_error_estimate + 2.0 * kEps * (c2 + std::fabs(prod));

    const double k2 = (p.nu / x) * (p.nu / x);
    const double d2 = cp.value * cp.value;
    r.delta_alt = (1.0 - k2) * c2 + d2;
    r.delta_alt_error = std::fabs(1.0 - k2) * 2.0 * std::fabs(c) * ec + 2.0 * std::fabs(cp.value) * cp.abs_error_estimate +
                        4.0 * kEps * ((1.0 + k2) * c2 + d2);

    r.lower_bound = c2 / (p.nu + 1.0);
    r.margin = r.delta - r.lower_bound;
    r.margin_error = r.delta_error + 2.0 * std::fabs(c) * ec / (p.nu + 1.0) + 2.0 * kEps * (r.lower_bound + std::fabs(r.delta));
    r.consistent = std::fabs(r.delta - r.delta_alt) <= r.delta_error + r.delta_alt_error;
    if (!std::isfinite(r.delta) || !std::isfinite(r.delta_alt)) throw OverflowError("turanian: result overflows");
    return r;
}

FunctionValue log_derivative(const CylinderParams& p, double x, const EvaluationConfig& cfg) {
    const CylinderStencil s = c_stencil(p, x, cfg);
    const double c = s.curr.value;
    const double ec = s.curr.abs_error_estimate;
    if (std::fabs(c) < 1e3 * ec) {
        throw PoleError("log_derivative: x = " + std::to_string(x) + " lies within the guard band of a zero");
    }
    const FunctionValue cp = c_prime(p, x, s);
    const double value = x * cp.value / c;
    const double err = x * (cp.abs_error_estimate + std::fabs(cp.value / c) * ec) / std::fabs(c) + 2.0 * kEps * std::fabs(value);
    return {value, err, s.curr.regime};
}

FunctionValue alpha_turanian(double nu, double x, double alpha, const EvaluationConfig& cfg) {
    check_args(nu, x, "alpha_turanian");
    if (!std::isfinite(alpha)) throw DomainError("alpha_turanian: alpha must be finite");
    const detail::JYValues v = detail::jy_any(nu, x, cfg);
    const FunctionValue c0 = combine(mix_of(alpha), v.j, v.y, v.j_err, v.y_err, v.regime);
    const FunctionValue cm = combine(mix_of(alpha - 1.0), v.j, v.y, v.j_err, v.y_err, v.regime);
    const FunctionValue cpl = combine(mix_of(alpha + 1.0), v.j, v.y, v.j_err, v.y_err, v.regime);
    const double sq = c0.value * c0.value;
    const double prod = cm.value * cpl.value;
    const double value = sq - prod;
    const double err = 2.0 * std::fabs(c0.value) * c0.abs_error_estimate + std::fabs(cm.value) * cpl.abs_error_estimate +
                       std::fabs(cpl.value) * cm.abs_error_estimate + 2.0 * kEps * (sq + std::fabs(prod));
    return {value, err, v.regime};
}

}  // namespace gbessel
