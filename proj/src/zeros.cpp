#include "gbessel/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "gbessel/cylinder.hpp"
#include "gbessel/error.hpp"

namespace gbessel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kScanStart = 1e-8;
constexpr double kScanStep = kPi / 4.0;
constexpr double kBisectWidth = 1e-3;
constexpr int kNewtonCap = 50;

struct Bracket {
    double a, b, fa, fb;
};

bool opposite(double u, double v) { return (u < 0.0 && v > 0.0) || (u > 0.0 && v < 0.0); }

// Walks x upward from the scan start and reports each sign change of C_nu.
// Steps grow geometrically near the origin and are capped at pi/4, well
// below the spacing of consecutive zeros.
class SignScanner {
  public:
    SignScanner(const CylinderParams& p, const EvaluationConfig& cfg) : p_(p), cfg_(cfg) {
        x_ = (p.alpha == 0.0 && p.nu >= 0.0) ? std::max(kScanStart, p.nu) : kScanStart;
        for (int tries = 0;; ++tries) {
            try {
                fx_ = eval(x_);
                if (fx_ != 0.0) break;
                x_ *= 1.0 + 1e-6;
            } catch (const OverflowError&) {
                // far too close to the origin for this order; no zero is lost
                // because |C| is huge there
                x_ *= 2.0;
            }
            if (tries > 2000) throw BracketingError("zero scan could not find a finite starting value");
        }
    }

    std::optional<Bracket> next(double x_limit) {
        while (x_ < x_limit) {
            const double step = std::min(kScanStep, std::max(x_, kScanStart));
            double xn = std::min(x_ + step, x_limit);
            double fn = eval(xn);
            for (int nudge = 0; fn == 0.0 && nudge < 8; ++nudge) {
                xn += 1e-9 * std::max(1.0, xn);
                fn = eval(xn);
            }
            const Bracket br{x_, xn, fx_, fn};
            x_ = xn;
            fx_ = fn;
            if (opposite(br.fa, br.fb)) return br;
        }
        return std::nullopt;
    }

    double eval(double x) const { return c_val(p_, x, cfg_).value; }

  private:
    CylinderParams p_;
    EvaluationConfig cfg_;
    double x_ = kScanStart;
    double fx_ = 0.0;
};

ZeroRecord refine(const CylinderParams& p, int n, Bracket br, const SignScanner& scan, const EvaluationConfig& cfg) {
    double a = br.a, b = br.b, fa = br.fa;
    auto shrink = [&](double m, double fm) {
        if (opposite(fa, fm)) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    };

    double x = 0.5 * (a + b);
    bool exact = false;
    while (b - a > kBisectWidth) {
        x = 0.5 * (a + b);
        const double fm = scan.eval(x);
        if (fm == 0.0) {
            exact = true;
            break;
        }
        shrink(x, fm);
    }

    if (!exact) {
        x = 0.5 * (a + b);
        bool converged = false;
        for (int it = 0; it < kNewtonCap; ++it) {
            const CylinderStencil s = c_stencil(p, x, cfg);
            const double f = s.curr.value;
            if (f == 0.0) {
                converged = true;
                break;
            }
            if (x > a && x < b) shrink(x, f);
            const double d = c_prime(p, x, s).value;
            double xn = x - f / d;
            if (!std::isfinite(xn) || !(xn > a && xn < b)) xn = 0.5 * (a + b);
            const double dx = std::fabs(xn - x);
            x = xn;
            if (dx <= 4.0 * kEps * x) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            while (b - a > 4.0 * kEps * b) {
                x = 0.5 * (a + b);
                const double fm = scan.eval(x);
                if (fm == 0.0) break;
                shrink(x, fm);
            }
            x = 0.5 * (a + b);
        }
    }

    // smallest symmetric bracket around x with a verified sign change
    std::pair<double, double> bracket{br.a, br.b};
    for (double delta = 64.0 * kEps * x; delta < br.b - br.a; delta *= 4.0) {
        const double lo = x - delta;
        const double hi = x + delta;
        if (opposite(scan.eval(lo), scan.eval(hi))) {
            bracket = {lo, hi};
            break;
        }
    }
    if (!(bracket.first < x && x < bracket.second)) {
        throw ConvergenceError("zero refinement left the bracket for nu = " + std::to_string(p.nu));
    }

    ZeroRecord r;
    r.nu = p.nu;
    r.alpha = p.alpha;
    r.n = n;
    r.abscissa = x;
    r.bracket = bracket;
    r.residual = std::fabs(scan.eval(x));
    return r;
}

void check_order(const CylinderParams& p, const char* where) {
    if (!std::isfinite(p.nu) || !(p.nu > -1.0)) {
        throw DomainError(std::string(where) + ": order must be finite and > -1");
    }
    if (!std::isfinite(p.alpha)) throw DomainError(std::string(where) + ": alpha must be finite");
}

}  // namespace

double mcmahon_guess(const CylinderParams& p, int n) {
    return (n - 0.5) * kPi + 0.5 * p.nu * kPi + 0.25 * kPi - p.alpha;
}

ZeroRecord nth_zero(const CylinderParams& p, int n, const EvaluationConfig& cfg) {
    check_order(p, "nth_zero");
    if (n < 1) throw DomainError("nth_zero: index must be >= 1");
    SignScanner scan(p, cfg);
    const double limit = std::max(mcmahon_guess(p, n), 0.0) + 2.0 * std::fabs(p.nu) + 20.0 * kPi + 10.0;
    std::optional<Bracket> br;
    for (int k = 1; k <= n; ++k) {
        br = scan.next(limit);
        if (!br) {
            throw BracketingError("nth_zero: no sign change for zero " + std::to_string(k) + " below x = " +
                                  std::to_string(limit));
        }
    }
    return refine(p, n, *br, scan, cfg);
}

ZeroTable zeros_up_to(const CylinderParams& p, double x_max, const EvaluationConfig& cfg) {
    check_order(p, "zeros_up_to");
    if (!std::isfinite(x_max) || !(x_max > 0.0)) throw DomainError("zeros_up_to: x_max must be positive");
    ZeroTable table{p, {}};
    SignScanner scan(p, cfg);
    int n = 0;
    while (auto br = scan.next(x_max)) table.records.push_back(refine(p, ++n, *br, scan, cfg));
    return table;
}

ZeroTable first_zeros(const CylinderParams& p, int count, const EvaluationConfig& cfg) {
    check_order(p, "first_zeros");
    if (count < 0) throw DomainError("first_zeros: count must be >= 0");
    ZeroTable table{p, {}};
    if (count == 0) return table;
    SignScanner scan(p, cfg);
    const double limit = std::max(mcmahon_guess(p, count), 0.0) + 2.0 * std::fabs(p.nu) + 20.0 * kPi + 10.0;
    for (int n = 1; n <= count; ++n) {
        const auto br = scan.next(limit);
        if (!br) throw BracketingError("first_zeros: no sign change for zero " + std::to_string(n));
        table.records.push_back(refine(p, n, *br, scan, cfg));
    }
    return table;
}

ZeroRecord first_stationary_c0(double alpha, const EvaluationConfig& cfg) {
    const CylinderParams p = CylinderParams::make(0.0, alpha);
    return nth_zero(p.with_order(1.0), 1, cfg);
}

}  // namespace gbessel
