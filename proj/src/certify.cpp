#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gbessel/bessel.hpp"
#include "gbessel/cylinder.hpp"
#include "gbessel/error.hpp"
#include "gbessel/turan.hpp"
#include "gbessel/zeros.hpp"

namespace gbessel {

namespace {

constexpr double kPi = std::numbers::pi;
// Lower end of log-spaced grids that reach towards the origin, as a
// fraction of the upper end.
constexpr double kLogFloor = 1e-3;
constexpr const char* kExperimentalPrefix = "experimental:";

enum class Test {
    turan_margin,
    ine2,
    bound1_upper,
    bound1_lower,
    bound3,
    bound3_rhs,
    laforgia,
    dominance,
    positivity,
    ratio_mu_lower,
    ratio_mu_order,
    ratio_plain,
};

struct Probe {
    double nu = 0.0;
    double alpha = 0.0;
    double x = 0.0;
    Test test = Test::turan_margin;
    std::string clause;
    bool reversed = false;
    double aux = 0.0;  // x_nu where a clause needs it
};

struct Margin {
    double value;
    double band;
};

double mu_of(double nu) { return nu / (nu + 1.0); }

VerdictStatus classify(double margin, double band) {
    if (margin > kMarginBandFactor * band) return VerdictStatus::pass;
    if (margin < -kMarginBandFactor * band) return VerdictStatus::fail;
    return VerdictStatus::inconclusive;
}

Margin ratio_value(double nu, double x, const EvaluationConfig& cfg) {
    const BesselPair b = bessel_jy(nu - 1.0, x, cfg);
    const double den = b.j.value;
    if (std::fabs(den) < 1e3 * b.j.abs_error_estimate) throw PoleError("ratio: J_{nu-1} vanishes");
    const double r = b.j_next.value / den;
    const double err = (b.j_next.abs_error_estimate + std::fabs(r) * b.j.abs_error_estimate) / std::fabs(den) +
                       2.0 * kEps * std::fabs(r);
    return {r, err};
}

Margin margin_of(const Probe& pr, const EvaluationConfig& cfg) {
    const double nu = pr.nu;
    const double x = pr.x;
    const CylinderParams p{nu, pr.alpha};
    switch (pr.test) {
        case Test::turan_margin: {
            const TuranianReport r = turanian(p, x, cfg);
            return {r.margin, r.margin_error};
        }
        case Test::positivity: {
            const TuranianReport r = turanian(p, x, cfg);
            return {r.delta, r.delta_error};
        }
        case Test::ine2: {
            const FunctionValue l = log_derivative(p, x, cfg);
            const double rhs = nu * nu - mu_of(nu) * x * x;
            const double lhs = l.value * l.value;
            const Margin direct{lhs - rhs, 2.0 * std::fabs(l.value) * l.abs_error_estimate + 4.0 * kEps * (lhs + nu * nu + x * x)};
            // same quantity as x^2 (Delta - C^2/(nu+1)) / C^2, which avoids the
            // cancellation of the direct form near the origin
            const TuranianReport r = turanian(p, x, cfg);
            const double c2 = r.c_value * r.c_value;
            const double via = x * x * r.margin / c2;
            const Margin turan{via, x * x * (r.margin_error + 2.0 * std::fabs(r.margin) * r.c_error / std::fabs(r.c_value)) / c2 +
                                        2.0 * kEps * std::fabs(via)};
            return turan.band < direct.band ? turan : direct;
        }
        case Test::bound1_upper:
        case Test::bound1_lower: {
            const FunctionValue l = log_derivative(p, x, cfg);
            const double s = std::sqrt(nu * nu - mu_of(nu) * x * x);
            const double m = pr.test == Test::bound1_upper ? s - l.value : l.value + s;
            return {m, l.abs_error_estimate + 2.0 * kEps * (s + std::fabs(l.value))};
        }
        case Test::bound3: {
            const FunctionValue l = log_derivative(p, x, cfg);
            const double s = std::sqrt(nu * nu - mu_of(nu) * pr.aux * pr.aux);
            return {-s - l.value, l.abs_error_estimate + 2.0 * kEps * (s + std::fabs(l.value))};
        }
        case Test::bound3_rhs: {
            // right side of bound3 negative, right side of Laforgia's bound positive
            const double s = std::sqrt(nu * nu - mu_of(nu) * pr.aux * pr.aux);
            const double laf = nu - x * x / (2.0 * (nu + 1.0));
            return {std::min(s, laf), 4.0 * kEps * nu};
        }
        case Test::laforgia: {
            const FunctionValue l = log_derivative(p, x, cfg);
            const double q = x * x / (2.0 * (nu + 1.0));
            return {nu - q - l.value, l.abs_error_estimate + 2.0 * kEps * (nu + q + std::fabs(l.value))};
        }
        case Test::dominance: {
            // (nu - x^2/(2(nu+1))) - sqrt(nu^2 - mu x^2) written without cancellation
            const double a = nu - x * x / (2.0 * (nu + 1.0));
            const double s = std::sqrt(nu * nu - mu_of(nu) * x * x);
            const double x2 = x * x;
            const double m = x2 * x2 / (4.0 * (nu + 1.0) * (nu + 1.0) * (a + s));
            return {m, 8.0 * kEps * m};
        }
        case Test::ratio_mu_lower: {
            const Margin r = ratio_value(nu, x, cfg);
            const double b = ratio_mu_lower_chain(RatioBoundParams::make(nu), x);
            return {b - r.value, r.band + 4.0 * kEps * b};
        }
        case Test::ratio_mu_order: {
            const RatioBoundParams rp = RatioBoundParams::make(nu);
            const double s = std::sqrt(nu * nu - rp.mu * x * x);
            const double m = 2.0 * s / (rp.mu * x);
            return {m, 4.0 * kEps * ratio_mu_upper_chain(rp, x)};
        }
        case Test::ratio_plain: {
            const Margin r = ratio_value(nu, x, cfg);
            const double b = ratio_plain_bound(nu, x);
            return {b - r.value, r.band + 4.0 * kEps * b};
        }
    }
    return {0.0, 0.0};
}

Verdict evaluate(const Probe& pr, const EvaluationConfig& cfg) noexcept {
    Verdict v;
    v.nu = pr.nu;
    v.alpha = pr.alpha;
    v.x = pr.x;
    try {
        v.clause = pr.clause;
        Margin m = margin_of(pr, cfg);
        if (pr.reversed) m.value = -m.value;
        if (!std::isfinite(m.value)) {
            v.status = VerdictStatus::skipped;
            v.note = "non-finite margin";
            return v;
        }
        v.margin = m.value;
        v.error_band = m.band;
        v.status = classify(m.value, m.band);
    } catch (const PoleError&) {
        v.status = VerdictStatus::skipped;
        v.note = "pole guard";
    } catch (const std::exception& e) {
        v.status = VerdictStatus::skipped;
        v.note = std::string("evaluation error: ") + e.what();
    }
    return v;
}

bool is_experimental(const std::string& clause) { return clause.rfind(kExperimentalPrefix, 0) == 0; }

CertificationReport assemble(InequalityId id, std::string grid_spec, std::vector<Verdict> verdicts) {
    CertificationReport r;
    r.inequality_id = id;
    r.grid_spec = std::move(grid_spec);
    r.verdicts = std::move(verdicts);
    for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
        const Verdict& v = r.verdicts[i];
        if (v.status == VerdictStatus::skipped) continue;
        if (v.status == VerdictStatus::fail && !is_experimental(v.clause)) r.violations.push_back(i);
        if (!r.min_margin_index || v.margin < r.verdicts[*r.min_margin_index].margin) r.min_margin_index = i;
    }
    return r;
}

CertificationReport run(InequalityId id, std::string grid_spec, const std::vector<Probe>& probes,
                        std::vector<Verdict> pre, Execution exec, const EvaluationConfig& cfg) {
    std::vector<Verdict> out =
        map_probes(std::span<const Probe>(probes), [&cfg](const Probe& pr) { return evaluate(pr, cfg); }, exec);
    // verdicts produced while preparing the grid (e.g. a failed crossover) go first
    pre.insert(pre.end(), std::make_move_iterator(out.begin()), std::make_move_iterator(out.end()));
    return assemble(id, std::move(grid_spec), std::move(pre));
}

std::string describe(const GridSpec& g) {
    std::ostringstream os;
    os.precision(17);
    os << "nus=";
    for (std::size_t i = 0; i < g.nus.size(); ++i) os << (i ? "," : "") << g.nus[i];
    os << ";alphas=";
    for (std::size_t i = 0; i < g.alphas.size(); ++i) os << (i ? "," : "") << g.alphas[i];
    os << ";samples=" << g.samples << ";x_max=" << g.x_max;
    if (g.experimental) os << ";experimental";
    return os.str();
}

std::vector<double> log_interior(double lo, double hi, int count) {
    if (!(hi > lo) || count <= 0) return {};
    std::vector<double> xs = log_spaced(lo, hi, count + 2);
    return {xs.begin() + 1, xs.end() - 1};
}

// Per-(nu, alpha) data every clause needs: the first zero and, where the
// crossover point exists (nu > 1, 0 < alpha < pi), x_nu.
struct Family {
    double nu = 0.0;
    double alpha = 0.0;
    double c1 = 0.0;
    bool crossover_applies = false;  // nu > 1 (or experimental) and 0 < alpha < pi
    bool experimental = false;       // crossover clause attempted outside nu > 1
    std::optional<double> x_nu;
    std::string error;
};

std::vector<Family> families(const GridSpec& g, const EvaluationConfig& cfg) {
    std::vector<std::pair<double, double>> pairs;
    for (double nu : g.nus) {
        if (!(nu > 0.0)) continue;
        for (double a : g.alphas) pairs.emplace_back(nu, a);
    }
    auto build = [&](const std::pair<double, double>& na) {
        Family f;
        f.nu = na.first;
        f.alpha = na.second;
        const bool mixed = f.alpha > 0.0 && f.alpha < kPi;
        f.crossover_applies = mixed && (f.nu > 1.0 || g.experimental);
        f.experimental = f.crossover_applies && !(f.nu > 1.0);
        try {
            f.c1 = nth_zero(CylinderParams::make(f.nu, f.alpha), 1, cfg).abscissa;
            if (f.crossover_applies) {
                CrossoverOptions opts;
                opts.experimental = f.experimental;
                f.x_nu = crossover(f.nu, f.alpha, opts, cfg).x_nu;
            }
        } catch (const std::exception& e) {
            f.error = e.what();
        }
        return f;
    };
    return map_probes(std::span<const std::pair<double, double>>(pairs), build, g.execution);
}

class ProbeList {
  public:
    void add(const Family& f, Test t, const std::string& clause, const std::vector<double>& xs, bool reversed = false,
             double aux = 0.0) {
        // clauses built on x_nu are only asserted for nu > 1
        const bool tagged = f.experimental && clause.find("x_nu") != std::string::npos;
        const std::string name = tagged ? kExperimentalPrefix + clause : clause;
        for (double x : xs) probes.push_back({f.nu, f.alpha, x, t, name, reversed, aux});
    }
    void note_failure(const Family& f, const std::string& clause) {
        Verdict v;
        v.nu = f.nu;
        v.alpha = f.alpha;
        v.clause = clause;
        v.status = VerdictStatus::skipped;
        v.note = "setup failed: " + f.error;
        pre.push_back(std::move(v));
    }
    std::vector<Probe> probes;
    std::vector<Verdict> pre;
};

bool usable(const Family& f, ProbeList& pl, const std::string& clause) {
    if (!f.error.empty()) {
        pl.note_failure(f, clause);
        return false;
    }
    return true;
}

}  // namespace

std::string_view to_string(InequalityId id) noexcept {
    switch (id) {
        case InequalityId::turan1: return "turan1";
        case InequalityId::ine2: return "ine2";
        case InequalityId::bound1: return "bound1";
        case InequalityId::bound3: return "bound3";
        case InequalityId::laforgia: return "laforgia";
        case InequalityId::ratio_mu: return "ratio_mu";
        case InequalityId::ratio_plain: return "ratio_plain";
        case InequalityId::theorem2_positivity: return "theorem2_positivity";
    }
    return "unknown";
}

std::span<const InequalityId> all_inequalities() noexcept {
    static constexpr std::array<InequalityId, 8> kAll{
        InequalityId::turan1,   InequalityId::ine2,     InequalityId::bound1,      InequalityId::bound3,
        InequalityId::laforgia, InequalityId::ratio_mu, InequalityId::ratio_plain, InequalityId::theorem2_positivity,
    };
    return kAll;
}

std::optional<InequalityId> parse_inequality(std::string_view name) noexcept {
    for (InequalityId id : all_inequalities()) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

std::string_view to_string(VerdictStatus s) noexcept {
    switch (s) {
        case VerdictStatus::pass: return "pass";
        case VerdictStatus::fail: return "fail";
        case VerdictStatus::inconclusive: return "inconclusive";
        case VerdictStatus::skipped: return "skipped";
    }
    return "unknown";
}

std::size_t CertificationReport::count(VerdictStatus s) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(verdicts.begin(), verdicts.end(), [s](const Verdict& v) { return v.status == s; }));
}

double CertificationReport::min_margin() const noexcept {
    return min_margin_index ? verdicts[*min_margin_index].margin : std::numeric_limits<double>::quiet_NaN();
}

CertificationReport certify_turan1(const GridSpec& g, const EvaluationConfig& cfg) {
    ProbeList pl;
    for (const Family& f : families(g, cfg)) {
        if (!usable(f, pl, "turan1")) continue;
        if (f.c1 < g.x_max) pl.add(f, Test::turan_margin, "a:x>=c1", log_spaced(f.c1, g.x_max, g.samples));
        if (f.alpha == 0.0) pl.add(f, Test::turan_margin, "a:alpha=0,x<c1", log_interior(kLogFloor, f.c1, g.samples));
        if (f.x_nu) {
            pl.add(f, Test::turan_margin, "b:x_nu<x<c1", log_interior(*f.x_nu, f.c1, g.samples));
            pl.add(f, Test::turan_margin, "b:reversed,x<x_nu", log_interior(kLogFloor * *f.x_nu, *f.x_nu, g.samples),
                   true);
        }
    }
    return run(InequalityId::turan1, describe(g), pl.probes, std::move(pl.pre), g.execution, cfg);
}

CertificationReport certify_ine2(const GridSpec& g, const EvaluationConfig& cfg) {
    ProbeList pl;
    for (const Family& f : families(g, cfg)) {
        if (!usable(f, pl, "ine2")) continue;
        if (f.alpha == 0.0) {
            pl.add(f, Test::ine2, "alpha=0", log_interior(kLogFloor, g.x_max, g.samples));
            continue;
        }
        if (f.c1 < g.x_max) pl.add(f, Test::ine2, "x>c1", log_interior(f.c1, g.x_max, g.samples));
        if (f.x_nu) {
            pl.add(f, Test::ine2, "x_nu<x<c1", log_interior(*f.x_nu, f.c1, g.samples));
            pl.add(f, Test::ine2, "reversed,x<x_nu", log_interior(kLogFloor * *f.x_nu, *f.x_nu, g.samples), true);
        }
    }
    return run(InequalityId::ine2, describe(g), pl.probes, std::move(pl.pre), g.execution, cfg);
}

CertificationReport certify_bound1(const GridSpec& g, const EvaluationConfig& cfg) {
    ProbeList pl;
    for (const Family& f : families(g, cfg)) {
        if (!f.crossover_applies || !usable(f, pl, "bound1") || !f.x_nu) continue;
        const auto xs = log_interior(kLogFloor * *f.x_nu, *f.x_nu, g.samples);
        pl.add(f, Test::bound1_upper, "upper,x<x_nu", xs);
        pl.add(f, Test::bound1_lower, "lower,x<x_nu", xs);
    }
    return run(InequalityId::bound1, describe(g), pl.probes, std::move(pl.pre), g.execution, cfg);
}

CertificationReport certify_bound3(const GridSpec& g, const EvaluationConfig& cfg) {
    ProbeList pl;
    for (const Family& f : families(g, cfg)) {
        if (!f.crossover_applies || !usable(f, pl, "bound3") || !f.x_nu) continue;
        const double xn = *f.x_nu;
        if (!(xn < f.c1)) {
            Family bad = f;
            bad.error = "x_nu is not below c1";
            pl.note_failure(bad, "bound3");
            continue;
        }
        pl.add(f, Test::bound3, "x_nu<x<c1", interior_points(xn, f.c1, g.samples), false, xn);
        const double top = std::min(std::sqrt(f.nu * (f.nu + 1.0)), f.c1);
        if (top > xn) pl.add(f, Test::bound3_rhs, "rhs-compare,x_nu<x<min(sqrt,c1)", interior_points(xn, top, g.samples), false, xn);
    }
    return run(InequalityId::bound3, describe(g), pl.probes, std::move(pl.pre), g.execution, cfg);
}

CertificationReport certify_laforgia(const GridSpec& g, const EvaluationConfig& cfg) {
    ProbeList pl;
    for (const Family& f : families(g, cfg)) {
        if (!usable(f, pl, "laforgia")) continue;
        pl.add(f, Test::laforgia, "x<c1", log_interior(kLogFloor * f.c1, f.c1, g.samples));
        if (f.x_nu) pl.add(f, Test::dominance, "dominance,x<x_nu", log_interior(kLogFloor * *f.x_nu, *f.x_nu, g.samples));
    }
    return run(InequalityId::laforgia, describe(g), pl.probes, std::move(pl.pre), g.execution, cfg);
}

CertificationReport certify_theorem2_positivity(const GridSpec& g, const EvaluationConfig& cfg) {
    ProbeList pl;
    for (double nu : g.nus) {
        if (!(nu > 0.0)) continue;
        for (double a : g.alphas) {
            Family f;
            f.nu = nu;
            f.alpha = a;
            double start = 0.0;
            try {
                start = nth_zero(CylinderParams::make(nu - 1.0, a), 1, cfg).abscissa;
            } catch (const std::exception& e) {
                f.error = e.what();
                pl.note_failure(f, "x>=c_{nu-1,1}");
                continue;
            }
            if (start < g.x_max) pl.add(f, Test::positivity, "x>=c_{nu-1,1}", log_spaced(start, g.x_max, g.samples));
        }
    }
    return run(InequalityId::theorem2_positivity, describe(g), pl.probes, std::move(pl.pre), g.execution, cfg);
}

RatioBoundParams RatioBoundParams::make(double nu) {
    if (!std::isfinite(nu) || !(nu > 0.0)) throw DomainError("ratio bounds require nu > 0");
    return {nu, nu / (nu + 1.0)};
}

double ratio_mu_lower_chain(const RatioBoundParams& p, double x) {
    return x / (p.nu + std::sqrt(p.nu * p.nu - p.mu * x * x));
}

double ratio_mu_upper_chain(const RatioBoundParams& p, double x) {
    return (p.nu + std::sqrt(p.nu * p.nu - p.mu * x * x)) / (p.mu * x);
}

double ratio_plain_bound(double nu, double x) { return x / (nu + std::sqrt(nu * nu - x * x)); }

RatioBoundReports ratio_bounds(const RatioBoundParams& p, std::span<const double> mu_xs,
                               std::span<const double> plain_xs, Execution exec, const EvaluationConfig& cfg) {
    const double mu_top = std::sqrt(p.nu * (p.nu + 1.0));
    std::vector<Probe> mu_probes;
    for (double x : mu_xs) {
        if (!(x > 0.0 && x < mu_top)) throw DomainError("ratio_bounds: mu-chain abscissa outside (0, sqrt(nu(nu+1)))");
        mu_probes.push_back({p.nu, 0.0, x, Test::ratio_mu_lower, "mu:ratio<lower", false, 0.0});
        mu_probes.push_back({p.nu, 0.0, x, Test::ratio_mu_order, "mu:lower<upper", false, 0.0});
    }
    std::vector<Probe> plain_probes;
    for (double x : plain_xs) {
        if (!(x > 0.0 && x < p.nu)) throw DomainError("ratio_bounds: plain-chain abscissa outside (0, nu)");
        plain_probes.push_back({p.nu, 0.0, x, Test::ratio_plain, "plain:ratio<bound", false, 0.0});
    }
    const std::string spec = "nu=" + std::to_string(p.nu) + ";alpha=0";
    return {run(InequalityId::ratio_mu, spec, mu_probes, {}, exec, cfg),
            run(InequalityId::ratio_plain, spec, plain_probes, {}, exec, cfg)};
}

namespace {

CertificationReport certify_ratio(InequalityId id, const GridSpec& g, const EvaluationConfig& cfg) {
    std::vector<Probe> probes;
    for (double nu : g.nus) {
        if (!(nu > 0.0)) continue;
        if (id == InequalityId::ratio_mu) {
            for (double x : interior_points(0.0, std::sqrt(nu * (nu + 1.0)), g.samples)) {
                probes.push_back({nu, 0.0, x, Test::ratio_mu_lower, "mu:ratio<lower", false, 0.0});
                probes.push_back({nu, 0.0, x, Test::ratio_mu_order, "mu:lower<upper", false, 0.0});
            }
        } else {
            for (double x : interior_points(0.0, nu, g.samples)) {
                probes.push_back({nu, 0.0, x, Test::ratio_plain, "plain:ratio<bound", false, 0.0});
            }
        }
    }
    return run(id, describe(g) + ";alpha forced to 0", probes, {}, g.execution, cfg);
}

}  // namespace

CertificationReport certify(InequalityId id, const GridSpec& grid, const EvaluationConfig& cfg) {
    switch (id) {
        case InequalityId::turan1: return certify_turan1(grid, cfg);
        case InequalityId::ine2: return certify_ine2(grid, cfg);
        case InequalityId::bound1: return certify_bound1(grid, cfg);
        case InequalityId::bound3: return certify_bound3(grid, cfg);
        case InequalityId::laforgia: return certify_laforgia(grid, cfg);
        case InequalityId::ratio_mu:
        case InequalityId::ratio_plain: return certify_ratio(id, grid, cfg);
        case InequalityId::theorem2_positivity: return certify_theorem2_positivity(grid, cfg);
    }
    throw DomainError("certify: unknown inequality");
}

}  // namespace gbessel
