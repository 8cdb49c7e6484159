#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gbessel/cylinder.hpp"
#include "gbessel/error.hpp"
#include "gbessel/turan.hpp"
#include "gbessel/zeros.hpp"

namespace gbessel {

namespace {

constexpr double kFdStep = 1e-3;
constexpr double kCurvatureRelTol = 1e-4;

ExtremumRecord describe_extremum(const CylinderParams& p, ExtremumKind kind, int k, double c, const EvaluationConfig& cfg) {
    ExtremumRecord r;
    r.kind = kind;
    r.k = k;
    r.abscissa = c;

    const TuranianReport rep = turanian(p, c, cfg);
    const CylinderStencil s = c_stencil(p, c, cfg);
    r.value = rep.delta;
    r.c_nu = rep.c_value;
    r.derivative = 2.0 / c * s.prev.value * s.next.value;

    const double h = std::min(kFdStep, 0.5 * c);
    const double up = turanian(p, c + h, cfg).delta;
    const double down = turanian(p, c - h, cfg).delta;
    r.second_derivative_fd = (up - 2.0 * rep.delta + down) / (h * h);
    const double closed = 4.0 * p.nu / (c * c) * r.c_nu * r.c_nu;
    r.second_derivative_closed = kind == ExtremumKind::maximum ? -closed : closed;
    r.second_derivative_sign = (r.second_derivative_fd > 0.0) - (r.second_derivative_fd < 0.0);

    const int expected = kind == ExtremumKind::maximum ? -1 : 1;
    const double c2 = r.c_nu * r.c_nu;
    const double value_tol = rep.delta_error + 2.0 * std::fabs(r.c_nu) * rep.c_error + 4.0 * kEps * c2;
    const double slope_tol = 2.0 / c * (std::fabs(s.prev.value) * s.next.abs_error_estimate +
                                        std::fabs(s.next.value) * s.prev.abs_error_estimate) +
                             1e-12 * (1.0 + rep.delta);
    r.validated = r.value > 0.0 && r.second_derivative_sign == expected &&
                  std::fabs(r.value - c2) <= value_tol && std::fabs(r.derivative) <= 10.0 * slope_tol &&
                  std::fabs(r.second_derivative_fd - r.second_derivative_closed) <=
                      kCurvatureRelTol * std::fabs(r.second_derivative_closed);
    return r;
}

}  // namespace

std::string_view to_string(ExtremumKind k) noexcept { return k == ExtremumKind::maximum ? "maximum" : "minimum"; }

LandauEnvelope landau_tau(double alpha, const EvaluationConfig& cfg) {
    const CylinderParams p = CylinderParams::make(0.0, alpha);
    const ZeroRecord z = first_stationary_c0(alpha, cfg);
    LandauEnvelope env;
    env.x1 = z.abscissa;
    env.tau = c_val(p, z.abscissa, cfg);
    env.abs_tau = std::fabs(env.tau.value);
    env.stationarity_residual = z.residual;
    return env;
}

std::vector<ExtremumRecord> extrema_scan(const CylinderParams& p, double x_max, const EvaluationConfig& cfg) {
    const CylinderParams q = CylinderParams::make(p.nu, p.alpha);
    if (!(q.nu > 0.0)) throw DomainError("extrema_scan: order must be > 0");
    const ZeroTable maxima = zeros_up_to(q.with_order(q.nu - 1.0), x_max, cfg);
    const ZeroTable minima = zeros_up_to(q.with_order(q.nu + 1.0), x_max, cfg);

    std::vector<ExtremumRecord> out;
    for (const ZeroRecord& z : maxima.records) out.push_back(describe_extremum(q, ExtremumKind::maximum, z.n, z.abscissa, cfg));
    for (const ZeroRecord& z : minima.records) out.push_back(describe_extremum(q, ExtremumKind::minimum, z.n, z.abscissa, cfg));
    std::sort(out.begin(), out.end(),
              [](const ExtremumRecord& a, const ExtremumRecord& b) { return a.abscissa < b.abscissa; });
    return out;
}

}  // namespace gbessel
