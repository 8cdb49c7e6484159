#include <cmath>
#include <numbers>
#include <string>

#include "gbessel/cylinder.hpp"
#include "gbessel/error.hpp"
#include "gbessel/turan.hpp"
#include "gbessel/zeros.hpp"

namespace gbessel {

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

FunctionValue scaled_turan_margin(const CylinderParams& p, double x, const EvaluationConfig& cfg) {
    const TuranianReport r = turanian(p, x, cfg);
    return {x * x * r.margin, x * x * r.margin_error, Regime::series};
}

CrossoverResult crossover(double nu, double alpha, const CrossoverOptions& opts, const EvaluationConfig& cfg) {
    if (!opts.experimental) {
        if (!(nu > 1.0)) throw DomainError("crossover requires nu > 1 (use the experimental mode for smaller orders)");
        if (!(alpha > 0.0 && alpha < std::numbers::pi)) throw DomainError("crossover requires 0 < alpha < pi");
    } else if (!(nu > 0.0)) {
        throw DomainError("crossover requires nu > 0 even in experimental mode");
    }
    const CylinderParams p = CylinderParams::make(nu, alpha);
    if (!(opts.x_tolerance > 0.0)) throw DomainError("crossover: x_tolerance must be positive");

    CrossoverResult out;
    out.nu = nu;
    out.alpha = alpha;
    out.experimental = opts.experimental;
    out.first_zero = nth_zero(p, 1, cfg).abscissa;
    out.sqrt_bound = std::sqrt(nu * (nu + 1.0));

    auto margin = [&](double x) { return turanian(p, x, cfg).margin; };

    double hi = out.first_zero;
    double m_hi = margin(hi);
    if (!(m_hi > 0.0)) {
        throw BracketingError("crossover: margin is not positive at the first zero c1 = " + std::to_string(hi));
    }
    double lo = 0.0;
    double m_lo = 0.0;
    bool found = false;
    double x = hi;
    for (int k = 0; k < 80; ++k) {
        x *= 0.5;
        double m;
        try {
            m = margin(x);
        } catch (const Error&) {
            break;
        }
        if (m < 0.0) {
            lo = x;
            m_lo = m;
            found = true;
            break;
        }
        hi = x;
        m_hi = m;
    }
    if (!found) {
        throw BracketingError("crossover: the margin does not change sign on (0, c1) for nu = " + std::to_string(nu) +
                              ", alpha = " + std::to_string(alpha));
    }

    for (int it = 0; it < 400 && hi - lo > opts.x_tolerance; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double m = margin(mid);
        if (m < 0.0) {
            lo = mid;
            m_lo = m;
        } else {
            hi = mid;
            m_hi = m;
        }
    }

    out.x_nu = 0.5 * (lo + hi);
    out.bracket = {lo, hi};
    const TuranianReport at = turanian(p, out.x_nu, cfg);
    out.residual = std::fabs(at.margin);

    const double delta = 1e-3 * out.x_nu;
    out.sign_evidence[0] = sign_of(margin(out.x_nu - delta));
    out.sign_evidence[1] =
        std::fabs(at.margin) <= kMarginBandFactor * at.margin_error + std::fabs(m_hi - m_lo) ? 0 : sign_of(at.margin);
    out.sign_evidence[2] = sign_of(margin(std::min(out.x_nu + delta, 0.5 * (out.x_nu + out.first_zero))));
    out.below_first_zero = out.x_nu < out.first_zero;
    out.below_sqrt_bound = out.x_nu < out.sqrt_bound;
    return out;
}

}  // namespace gbessel
