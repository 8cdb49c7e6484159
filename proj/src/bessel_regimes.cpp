#include "gbessel/detail/bessel_regimes.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gbessel/error.hpp"
#include "gbessel/gamma.hpp"

namespace gbessel::detail {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTiny = 1e-300;
// Backward recurrence values are rescaled by 2^-kRescaleBits past this size.
constexpr double kRescaleAbove = 1e250;
constexpr int kRescaleBits = 800;

[[noreturn]] void fail_convergence(const char* where, double nu, double x) {
    throw ConvergenceError(std::string(where) + ": no convergence for nu = " + std::to_string(nu) +
                           ", x = " + std::to_string(x));
}

void require_finite(double v, const char* where, double nu, double x) {
    if (!std::isfinite(v)) {
        throw OverflowError(std::string(where) + ": value overflows for nu = " + std::to_string(nu) +
                            ", x = " + std::to_string(x));
    }
}

// Forward recurrence Z_{o+1} = (2o/x) Z_o - Z_{o-1} starting at order `order`
// with (Z_order, Z_{order+1}) = (a, b); advances `steps` times. Errors are
// propagated with the same recurrence applied to magnitudes.
struct ForwardState {
    double a, b, ea, eb;
};

ForwardState forward_recur(double order, double x, int steps, ForwardState s, double nu) {
    for (int k = 1; k <= steps; ++k) {
        const double factor = 2.0 * (order + k) / x;
        const double c = factor * s.b - s.a;
        const double ec = factor * s.eb + s.ea + kEps * std::fabs(c);
        s.a = s.b;
        s.ea = s.eb;
        s.b = c;
        s.eb = ec;
        require_finite(c, "forward recurrence", nu, x);
    }
    return s;
}

// Temme's series for Y_mu and Y_{mu+1}, |mu| <= 1/2, small x.
struct TemmeResult {
    double y_mu, y_mu1, err_mu, err_mu1;
};

TemmeResult temme_series(double mu, double x, const EvaluationConfig& cfg) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = std::fabs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    const double d = -std::log(x2);
    const double e = mu * d;
    const double fact2 = std::fabs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);

    const double ff_a = g.gam1 * std::cosh(e);
    const double ff_b = g.gam2 * fact2 * d;
    double ff = 2.0 / kPi * fact * (ff_a + ff_b);
    const double ff_abs = 2.0 / kPi * std::fabs(fact) * (std::fabs(ff_a) + std::fabs(ff_b));
    const double ee = std::exp(e);
    double p = ee / (g.inv_gamma_plus * kPi);
    double q = 1.0 / (ee * kPi * g.inv_gamma_minus);
    const double pimu2 = 0.5 * pimu;
    const double fact3 = std::fabs(pimu2) < kEps ? 1.0 : std::sin(pimu2) / pimu2;
    const double r = kPi * pimu2 * fact3 * fact3;

    double c = 1.0;
    const double dd = -x2 * x2;
    double sum = ff + r * q;
    double sum1 = p;
    double sum_abs = ff_abs + std::fabs(r * q);
    double sum1_abs = std::fabs(p);
    const double mu2 = mu * mu;
    bool converged = false;
    for (int i = 1; i <= cfg.max_series_terms; ++i) {
        const double di = i;
        ff = (di * ff + p + q) / (di * di - mu2);
        c *= dd / di;
        p /= (di - mu);
        q /= (di + mu);
        const double del = c * (ff + r * q);
        sum += del;
        const double del1 = c * p - di * del;
        sum1 += del1;
        sum_abs += std::fabs(del);
        sum1_abs += std::fabs(del1);
        if (std::fabs(del) <= 0.5 * kEps * sum_abs && std::fabs(del1) <= 0.5 * kEps * sum1_abs) {
            converged = true;
            break;
        }
    }
    if (!converged) fail_convergence("temme_series", mu, x);

    TemmeResult out{};
    out.y_mu = -sum;
    out.y_mu1 = -sum1 * (2.0 / x);
    out.err_mu = 8.0 * kEps * sum_abs;
    out.err_mu1 = 8.0 * kEps * sum1_abs * (2.0 / x);
    return out;
}

// Continued fraction for J_{nu+1}/J_nu (modified Lentz). sign tracks the sign
// of J_nu relative to the minimal solution far out in order.
struct RatioCF {
    double ratio;
    int sign;
};

RatioCF ratio_cf(double nu, double x, const EvaluationConfig& cfg) {
    const int budget = cfg.max_series_terms + static_cast<int>(4.0 * x) + 100;
    double f = kTiny;
    double c = f;
    double d = 0.0;
    int sign = 1;
    for (int k = 1; k <= budget; ++k) {
        const double a = k == 1 ? 1.0 : -1.0;
        const double b = 2.0 * (nu + k) / x;
        d = b + a * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + a / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (d < 0.0) sign = -sign;
        if (std::fabs(delta - 1.0) < kEps) return {f, sign};
    }
    fail_convergence("ratio_cf", nu, x);
}

// Steed's continued fraction for p + i q = (J'_mu + i Y'_mu) / (J_mu + i Y_mu).
struct SteedPQ {
    double p, q;
};

SteedPQ steed_cf2(double mu, double x, const EvaluationConfig& cfg) {
    const double xi = 1.0 / x;
    double a = 0.25 - mu * mu;
    double p = -0.5 * xi;
    double q = 1.0;
    const double br = 2.0 * x;
    double bi = 2.0;
    double fact = a * xi / (p * p + q * q);
    double cr = br + q * fact;
    double ci = bi + p * fact;
    double den = br * br + bi * bi;
    double dr = br / den;
    double di = -bi / den;
    double dlr = cr * dr - ci * di;
    double dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    const int budget = cfg.max_series_terms + static_cast<int>(2.0 * x);
    for (int i = 2; i <= budget; ++i) {
        a += 2 * (i - 1);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if (std::fabs(dr) + std::fabs(di) < kTiny) dr = kTiny;
        fact = a / (cr * cr + ci * ci);
        cr = br + cr * fact;
        ci = bi - ci * fact;
        if (std::fabs(cr) + std::fabs(ci) < kTiny) cr = kTiny;
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (std::fabs(dlr - 1.0) + std::fabs(dli) < kEps) return {p, q};
    }
    fail_convergence("steed_cf2", mu, x);
}

// Hankel's P and Q for one order.
struct HankelPQ {
    double p, q, err;
    bool converged;
};

HankelPQ hankel_pq(double nu, double x, const EvaluationConfig& cfg) {
    const double mu4 = 4.0 * nu * nu;
    double t = 1.0;
    double p = 1.0;
    double q = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= cfg.max_series_terms; ++k) {
        const double odd = 2.0 * k - 1.0;
        t *= (mu4 - odd * odd) / (8.0 * k * x);
        const double at = std::fabs(t);
        if (at == 0.0) return {p, q, 0.0, true};
        if (at >= prev) {
            // terms started to grow: the expansion has reached its best accuracy
            return {p, q, at, at <= 0.1 * cfg.target_rel_tol * (std::fabs(p) + std::fabs(q))};
        }
        const int sign = ((k / 2) % 2 == 0) ? 1 : -1;
        if (k % 2 == 0) {
            p += sign * t;
        } else {
            q += sign * t;
        }
        if (at <= 0.5 * kEps * (std::fabs(p) + std::fabs(q))) return {p, q, at, true};
        prev = at;
    }
    return {p, q, std::fabs(t), false};
}

// J and Y of order nu from P, Q with the phase x - (nu/2 + 1/4) pi.
// cos(x) and sin(x) use the exact argument; the offset is reduced exactly.
void hankel_combine(double nu, double x, const HankelPQ& pq, double& j, double& y, double& ej, double& ey) {
    const double env = std::sqrt(2.0 / (kPi * x));
    const double off = 0.5 * nu + 0.25;
    const double cphi = cos_pi(off);
    const double sphi = sin_pi(off);
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double cchi = cx * cphi + sx * sphi;
    const double schi = sx * cphi - cx * sphi;
    j = env * (pq.p * cchi - pq.q * schi);
    y = env * (pq.p * schi + pq.q * cchi);
    const double modulus = env * std::hypot(pq.p, pq.q);
    const double trunc = env * pq.err * std::sqrt(2.0);
    ej = trunc + 8.0 * kEps * modulus;
    ey = trunc + 8.0 * kEps * modulus;
}

double reflect_j(double a, double ja, double ya) { return cos_pi(a) * ja - sin_pi(a) * ya; }
double reflect_y(double a, double ja, double ya) { return sin_pi(a) * ja + cos_pi(a) * ya; }
double reflect_err(double a, double eja, double eya, double result) {
    return std::fabs(cos_pi(a)) * eja + std::fabs(sin_pi(a)) * eya + 2.0 * kEps * std::fabs(result);
}

}  // namespace

FunctionValue j_series_normalized(double nu, double x, const EvaluationConfig& cfg) {
    const double z = -0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    double abs_sum = 1.0;
    for (int k = 1; k <= cfg.max_series_terms; ++k) {
        term *= z / (k * (nu + k));
        sum += term;
        abs_sum += std::fabs(term);
        if (std::fabs(term) <= 0.5 * kEps * std::fabs(sum)) {
            return {sum, 4.0 * kEps * abs_sum + std::fabs(term), Regime::series};
        }
    }
    fail_convergence("j_series", nu, x);
}

FunctionValue j_series(double nu, double x, const EvaluationConfig& cfg) {
    const FunctionValue s = j_series_normalized(nu, x, cfg);
    double pref;
    double pref_rel;
    if (nu == 0.0) {
        pref = 1.0;
        pref_rel = 0.0;
    } else {
        const double lg = log_gamma(nu + 1.0);
        const double log_pref = nu * std::log(0.5 * x) - lg;
        const double pw = std::pow(0.5 * x, nu);
        if (nu + 1.0 < 170.0 && pw > 1e-290 && std::isfinite(pw)) {
            pref = pw / gamma(nu + 1.0).value;
            pref_rel = 4.0 * kEps + 1e-14;
        } else {
            pref = std::exp(log_pref);
            pref_rel = 4.0 * kEps * (std::fabs(nu * std::log(0.5 * x)) + std::fabs(lg) + 1.0);
        }
    }
    const double value = pref * s.value;
    return {value, pref * s.abs_error_estimate + pref_rel * std::fabs(value), Regime::series};
}

JYValues jy_small_x(double nu, double x, const EvaluationConfig& cfg) {
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;
    const TemmeResult t = temme_series(mu, x, cfg);
    const ForwardState s = forward_recur(mu, x, nl, {t.y_mu, t.y_mu1, t.err_mu, t.err_mu1}, nu);

    const FunctionValue j0 = j_series(nu, x, cfg);
    const FunctionValue j1 = j_series(nu + 1.0, x, cfg);

    JYValues out;
    out.j = j0.value;
    out.j_err = j0.abs_error_estimate;
    out.j_next = j1.value;
    out.j_next_err = j1.abs_error_estimate;
    out.y = s.a;
    out.y_err = s.ea;
    out.y_next = s.b;
    out.y_next_err = s.eb;
    out.regime = Regime::series;
    return out;
}

JYValues jy_steed(double nu, double x, const EvaluationConfig& cfg) {
    const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
    const double mu = nu - nl;

    const RatioCF cf = ratio_cf(nu, x, cfg);

    // backward recurrence from (nu, nu+1) down to (mu, mu+1), unnormalised
    double jl = cf.sign;
    double jl1 = cf.ratio * jl;
    int rescales = 0;
    for (int l = nl; l >= 1; --l) {
        const double order = mu + l;
        const double prev = 2.0 * order / x * jl - jl1;
        jl1 = jl;
        jl = prev;
        if (std::fabs(jl) > kRescaleAbove) {
            jl = std::ldexp(jl, -kRescaleBits);
            jl1 = std::ldexp(jl1, -kRescaleBits);
            ++rescales;
        }
    }
    if (jl == 0.0) jl = kEps * std::fabs(jl1);
    const double f = mu / x - jl1 / jl;  // J'_mu / J_mu

    const SteedPQ pq = steed_cf2(mu, x, cfg);
    const double w = 2.0 / (kPi * x);
    const double gam = (pq.p - f) / pq.q;
    double j_mu = std::sqrt(w / ((pq.p - f) * gam + pq.q));
    j_mu = std::copysign(j_mu, jl);
    const double y_mu = j_mu * gam;
    const double y_mu_prime = j_mu * (gam * pq.p + pq.q);
    const double y_mu1 = mu / x * y_mu - y_mu_prime;
    const double j_mu1 = j_mu * (jl1 / jl);

    const double scale = j_mu / jl;
    const double j_nu = std::ldexp(scale * cf.sign, -kRescaleBits * rescales);
    const double j_nu1 = cf.ratio * j_nu;

    // rounding in the continued fractions grows with their length, roughly x
    const double floor_scale = (8.0 + 0.5 * x) * kEps;
    const double e_mu = floor_scale * std::hypot(j_mu, y_mu);
    const double e_mu1 = floor_scale * std::hypot(j_mu1, y_mu1);
    const ForwardState s = forward_recur(mu, x, nl, {y_mu, y_mu1, e_mu, e_mu1}, nu);

    JYValues out;
    out.j = j_nu;
    out.j_next = j_nu1;
    out.y = s.a;
    out.y_next = s.b;
    const double rel = (8.0 + 2.0 * nl) * kEps;
    out.j_err = rel * std::fabs(j_nu) + (x >= nu ? floor_scale * std::hypot(j_nu, s.a) : 0.0);
    out.j_next_err = rel * std::fabs(j_nu1) + (x >= nu + 1.0 ? floor_scale * std::hypot(j_nu1, s.b) : 0.0);
    out.y_err = s.ea;
    out.y_next_err = s.eb;
    out.regime = Regime::intermediate;
    return out;
}

JYValues jy_hankel(double nu, double x, const EvaluationConfig& cfg) {
    const HankelPQ pq0 = hankel_pq(nu, x, cfg);
    const HankelPQ pq1 = hankel_pq(nu + 1.0, x, cfg);
    if (!pq0.converged || !pq1.converged) fail_convergence("jy_hankel", nu, x);
    JYValues out;
    hankel_combine(nu, x, pq0, out.j, out.y, out.j_err, out.y_err);
    hankel_combine(nu + 1.0, x, pq1, out.j_next, out.y_next, out.j_next_err, out.y_next_err);
    out.regime = Regime::asymptotic;
    return out;
}

JYValues jy_nonnegative(double nu, double x, const EvaluationConfig& cfg) {
    if (x <= 2.0) return jy_small_x(nu, x, cfg);
    if (x > cfg.asymptotic_threshold(nu)) {
        try {
            return jy_hankel(nu, x, cfg);
        } catch (const ConvergenceError&) {
            // fall through to the continued fractions, which converge for any x
        }
    }
    return jy_steed(nu, x, cfg);
}

JYValues jy_any(double nu, double x, const EvaluationConfig& cfg) {
    if (nu >= 0.0) return jy_nonnegative(nu, x, cfg);
    if (nu < -2.0) throw DomainError("jy_any: order below -2");
    const double a = -nu;
    JYValues out;
    if (a <= 1.0) {
        // orders -a and 1 - a; the second is non-negative
        const JYValues pos = jy_nonnegative(a, x, cfg);
        const JYValues up = jy_nonnegative(1.0 - a, x, cfg);
        out.j = reflect_j(a, pos.j, pos.y);
        out.y = reflect_y(a, pos.j, pos.y);
        out.j_err = reflect_err(a, pos.j_err, pos.y_err, out.j);
        out.y_err = reflect_err(a, pos.j_err, pos.y_err, out.y);
        out.j_next = up.j;
        out.y_next = up.y;
        out.j_next_err = up.j_err;
        out.y_next_err = up.y_err;
        out.regime = pos.regime;
    } else {
        // orders -a and -(a - 1), reflected from a - 1 and a
        const double b = a - 1.0;
        const JYValues pos = jy_nonnegative(b, x, cfg);
        out.j = reflect_j(a, pos.j_next, pos.y_next);
        out.y = reflect_y(a, pos.j_next, pos.y_next);
        out.j_err = reflect_err(a, pos.j_next_err, pos.y_next_err, out.j);
        out.y_err = reflect_err(a, pos.j_next_err, pos.y_next_err, out.y);
        out.j_next = reflect_j(b, pos.j, pos.y);
        out.y_next = reflect_y(b, pos.j, pos.y);
        out.j_next_err = reflect_err(b, pos.j_err, pos.y_err, out.j_next);
        out.y_next_err = reflect_err(b, pos.j_err, pos.y_err, out.y_next);
        out.regime = pos.regime;
    }
    return out;
}

}  // namespace gbessel::detail
