#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gbessel/cylinder.hpp"
#include "gbessel/error.hpp"
#include "gbessel/turan.hpp"
#include "gbessel/zeros.hpp"

namespace gbessel {

namespace {

// Terms past the turning point must stay small for this many consecutive
// orders before the sum is accepted.
constexpr int kQuietRun = 3;
constexpr int kGrowthRun = 3;
constexpr double kTurningPointPad = 10.0;

}  // namespace

SeriesEvalResult series_turanian(const CylinderParams& p, double x, const SeriesOptions& opts,
                                 const EvaluationConfig& cfg) {
    const CylinderParams q = CylinderParams::make(p.nu, p.alpha);
    if (!(q.nu > 0.0)) throw DomainError("series_turanian: order must be > 0");
    if (!(opts.rel_tol > 0.0 && opts.rel_tol < 1.0)) throw DomainError("series_turanian: rel_tol must lie in (0, 1)");
    const double c1 = nth_zero(q, 1, cfg).abscissa;
    if (!(x > c1)) {
        throw DomainError("series_turanian: x = " + std::to_string(x) + " must exceed the first zero c1 = " +
                          std::to_string(c1));
    }
    const int cap = opts.max_terms > 0 ? opts.max_terms : static_cast<int>(10.0 * x + 200.0);

    SeriesEvalResult out;
    out.x = x;
    out.nu = q.nu;
    out.alpha = q.alpha;

    const TuranianReport rep = turanian(q, x, cfg);
    out.lhs_direct = rep.delta;
    out.leading = rep.lower_bound;

    const CylinderStencil s = c_stencil(q, x, cfg);
    double prev = s.curr.value, e_prev = s.curr.abs_error_estimate;
    double curr = s.next.value, e_curr = s.next.abs_error_estimate;

    const double two_nu = 2.0 * q.nu;
    double sum = 0.0;
    double sum_err = 0.0;
    double t_last = 0.0, t_before = 0.0, t_before2 = 0.0;
    int quiet = 0;
    int growth = 0;
    bool done = false;
    int n = 0;
    for (int i = 1; i <= cap; ++i) {
        const double m = q.nu + i;
        const double w = two_nu / ((m - 1.0) * (m + 1.0));
        const double term = w * curr * curr;
        if (!std::isfinite(term)) throw ConvergenceError("series_turanian: terms are not finite, the series diverges");
        sum += term;
        sum_err += w * (2.0 * std::fabs(curr) * e_curr + kEps * curr * curr) + kEps * std::fabs(sum);
        t_before2 = t_before;
        t_before = t_last;
        t_last = term;
        n = i;

        if (m > x + kTurningPointPad) {
            quiet = term < opts.rel_tol * std::fabs(sum) ? quiet + 1 : 0;
            growth = term > t_before ? growth + 1 : 0;
            if (quiet >= kQuietRun) {
                done = true;
                break;
            }
            if (growth >= kGrowthRun) {
                throw ConvergenceError("series_turanian: terms grow past the turning point, the series diverges for alpha = " +
                                       std::to_string(q.alpha));
            }
        }
        if (i == cap) break;

        // recurrence is stable while the order is below x; beyond the turning
        // point each order is evaluated directly
        double next, e_next;
        if (m + 1.0 <= x) {
            next = recurrence_next(q.with_order(m), x, prev, curr);
            e_next = 2.0 * m / x * e_curr + e_prev + kEps * std::fabs(next);
        } else {
            const FunctionValue v = c_val(q.with_order(m + 1.0), x, cfg);
            next = v.value;
            e_next = v.abs_error_estimate;
        }
        prev = curr;
        e_prev = e_curr;
        curr = next;
        e_curr = e_next;
    }
    if (!done) {
        throw ConvergenceError("series_turanian: no convergence within " + std::to_string(cap) + " terms");
    }

    out.partial_sum = sum;
    out.terms_used = n;

    const LandauEnvelope env = landau_tau(q.alpha, cfg);
    const double tau2 = env.abs_tau * env.abs_tau;
    // sum_{i>N} 1/((nu+i)^2 - 1) telescopes to (1/(nu+N) + 1/(nu+N+1)) / 2
    out.landau_tail_bound = q.nu * tau2 * (1.0 / (q.nu + n) + 1.0 / (q.nu + n + 1.0));

    out.ratio_tail_bound = std::numeric_limits<double>::infinity();
    if (n >= 3 && t_before > 0.0 && t_before2 > 0.0) {
        const double rho = t_last / t_before;
        const double rho_prev = t_before / t_before2;
        if (rho < 1.0 && rho <= rho_prev) out.ratio_tail_bound = t_last * rho / (1.0 - rho);
    }
    out.tail_bound = std::fmin(out.landau_tail_bound, out.ratio_tail_bound);

    out.discrepancy = out.lhs_direct - out.leading - out.partial_sum;
    out.evaluation_error = rep.margin_error + sum_err;
    return out;
}

}  // namespace gbessel
