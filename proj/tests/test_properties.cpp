#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "gbessel/bessel.hpp"
#include "gbessel/cylinder.hpp"
#include "gbessel/error.hpp"
#include "gbessel/turan.hpp"
#include "gbessel/zeros.hpp"
#include "oracles.hpp"

using namespace gbessel;
using oracle::pi;

namespace {

constexpr int kDraws = 400;

struct Sampler {
    std::mt19937_64 rng{20261016};
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
};

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("Wronskian") {
    Sampler s;
    for (int i = 0; i < kDraws; ++i) {
        const double nu = s.uniform(-0.9, 20.0);
        const double x = s.log_uniform(1e-2, 100.0);
        FunctionValue y, yp;
        try {
            y = bessel_y(nu, x);
            yp = bessel_y_prime(nu, x);
        } catch (const OverflowError&) {
            continue;
        }
        const double w = bessel_j(nu, x).value * yp.value - bessel_j_prime(nu, x).value * y.value;
        const double ref = 2.0 / (pi * x);
        CAPTURE(nu);
        CAPTURE(x);
        CHECK(std::fabs(w - ref) <= 1e-10 * ref);
    }
}

TEST_CASE("three-term recurrence for J and Y") {
    Sampler s;
    for (int i = 0; i < kDraws; ++i) {
        const double nu = s.uniform(0.0, 15.0);
        const double x = s.log_uniform(0.05, 80.0);
        const double k = 2.0 * nu / x;
        const FunctionValue jm = bessel_j(nu - 1.0, x), j0 = bessel_j(nu, x), jp = bessel_j(nu + 1.0, x);
        const double rj = jm.value + jp.value - k * j0.value;
        const double sj = jm.abs_error_estimate + jp.abs_error_estimate + k * j0.abs_error_estimate +
                          4.0 * kEps * (std::fabs(jm.value) + std::fabs(jp.value) + std::fabs(k * j0.value));
        CAPTURE(nu);
        CAPTURE(x);
        CHECK(std::fabs(rj) <= 10.0 * sj);
        if (x < 0.3 && nu > 10.0) continue;
        const FunctionValue ym = bessel_y(nu - 1.0, x), y0 = bessel_y(nu, x), yp = bessel_y(nu + 1.0, x);
        const double ry = ym.value + yp.value - k * y0.value;
        CHECK(std::fabs(ry) <= 1e-10 * std::max({std::fabs(ym.value), std::fabs(yp.value), std::fabs(k * y0.value)}));
    }
}

TEST_CASE("half-integer closed forms") {
    for (double x : lin_spaced(0.1, 50.0, 300)) {
        const double e = oracle::envelope(x);
        CHECK(std::fabs(bessel_j(0.5, x).value - oracle::j_half(x)) <= 1e-10 * e);
        CHECK(std::fabs(bessel_y(0.5, x).value - oracle::y_half(x)) <= 1e-10 * e);
        CHECK(std::fabs(bessel_j(-0.5, x).value - oracle::j_minus_half(x)) <= 1e-10 * e);
        CHECK(std::fabs(bessel_y(-0.5, x).value - oracle::y_minus_half(x)) <= 1e-10 * e);
    }
}

TEST_CASE("derivatives against finite differences") {
    Sampler s;
    for (int i = 0; i < kDraws; ++i) {
        const double nu = s.uniform(0.0, 8.0);
        const double x = s.uniform(0.5, 40.0);
        const double h = 1e-5 * x;
        const double fj = oracle::central_difference([&](double t) { return bessel_j(nu, t).value; }, x, h);
        const double fy = oracle::central_difference([&](double t) { return bessel_y(nu, t).value; }, x, h);
        const double dj = bessel_j_prime(nu, x).value;
        const double dy = bessel_y_prime(nu, x).value;
        const double scale = std::hypot(dj, dy);
        CAPTURE(nu);
        CAPTURE(x);
        if (std::fabs(dj) > 0.05 * scale) CHECK(oracle::rel_diff(fj, dj) < 1e-7);
        if (std::fabs(dy) > 0.05 * scale) CHECK(oracle::rel_diff(fy, dy) < 1e-7);
    }
}

TEST_CASE("Turanian forms agree and rec1 holds") {
    Sampler s;
    for (int i = 0; i < kDraws; ++i) {
        const double nu = s.uniform(0.5, 10.0);
        const double a = s.uniform(0.0, pi * 0.999);
        const double x = s.log_uniform(1e-2, 50.0);
        const CylinderParams p = CylinderParams::make(nu, a);
        const TuranianReport r = turanian(p, x);
        CAPTURE(nu);
        CAPTURE(a);
        CAPTURE(x);
        CHECK(r.consistent);
        CHECK(std::fabs(r.delta - r.delta_alt) <= r.delta_error + r.delta_alt_error);

        const CylinderStencil st = c_stencil(p, x);
        const double k = 2.0 * nu / x;
        const double res = st.prev.value + st.next.value - k * st.curr.value;
        const double m = std::max({std::fabs(st.prev.value), std::fabs(st.next.value), std::fabs(k * st.curr.value)});
        CHECK(std::fabs(res) <= 1e-10 * m);
    }
}

TEST_CASE("x^{-nu} C_nu has derivative -x^{-nu} C_{nu+1}") {
    Sampler s;
    for (int i = 0; i < 100; ++i) {
        const double nu = s.uniform(0.5, 6.0);
        const double a = s.uniform(0.0, 3.0);
        const double x = s.uniform(0.5, 20.0);
        const CylinderParams p = CylinderParams::make(nu, a);
        auto f = [&](double t) { return std::pow(t, -nu) * c_val(p, t).value; };
        const double fd = oracle::central_difference(f, x, 1e-5 * x);
        const double ref = -std::pow(x, -nu) * c_val(p.with_order(nu + 1.0), x).value;
        const double scale = std::pow(x, -nu) * oracle::envelope(x);
        CAPTURE(nu);
        CAPTURE(a);
        CAPTURE(x);
        CHECK(std::fabs(fd - ref) <= 1e-7 * std::max(std::fabs(ref), 0.05 * scale));
    }
}

TEST_CASE("sign facts below the first zero") {
    for (double nu : {1.5, 2.0, 4.0}) {
        for (double a : {0.05, 0.3, pi / 6, pi / 2, 2.5, 3.0}) {
            const CylinderParams p = CylinderParams::make(nu, a);
            const double c1 = nth_zero(p, 1).abscissa;
            for (double x : interior_points(0.0, c1, 30)) {
                CAPTURE(nu);
                CAPTURE(a);
                CAPTURE(x);
                CHECK(c_val(p, x).value > 0.0);
                if (a >= pi / 6) CHECK(c_prime(p, x).value < 0.0);
            }
        }
    }
}

TEST_CASE("C' changes sign below the first zero for small alpha") {
    // The Y part makes C decrease near the origin and the J part makes it
    // rise again, so C' < 0 on (0, c1) needs alpha bounded away from 0.
    // Inequality bound3 relies on it and fails there.
    for (double a : {0.05, 0.3}) {
        const CylinderParams p = CylinderParams::make(1.5, a);
        const double c1 = nth_zero(p, 1).abscissa;
        double worst = -INFINITY;
        for (double x : interior_points(0.0, c1, 200)) worst = std::max(worst, c_prime(p, x).value);
        CAPTURE(a);
        CHECK(worst > 0.0);
    }
    // for alpha = 0.05 the rise reaches past x_nu
    const CylinderParams p = CylinderParams::make(1.5, 0.05);
    CHECK(crossover(1.5, 0.05).x_nu < 2.0);
    CHECK(c_prime(p, 2.0).value > 0.0);
    GridSpec g;
    g.nus = {1.5, 2.0};
    g.alphas = {0.05};
    CHECK(!certify_bound3(g).passed());
}

TEST_CASE("log derivative decreases between zeros") {
    for (double nu : {0.5, 1.5, 3.0}) {
        for (double a : {0.0, pi / 6, 2.0}) {
            const CylinderParams p = CylinderParams::make(nu, a);
            const ZeroTable z = first_zeros(p, 6);
            std::vector<std::pair<double, double>> gaps;
            if (a == 0.0) gaps.emplace_back(1e-3 * z.records[0].abscissa, z.records[0].abscissa);
            if (a != 0.0 && nu > 1.0) gaps.emplace_back(crossover(nu, a).x_nu, z.records[0].abscissa);
            for (int n = 0; n + 1 < 6; ++n) gaps.emplace_back(z.records[n].abscissa, z.records[n + 1].abscissa);
            for (auto [lo, hi] : gaps) {
                const double w = hi - lo;
                double prev = INFINITY;
                for (double x : interior_points(lo + 0.01 * w, hi - 0.01 * w, 25)) {
                    const double v = log_derivative(p, x).value;
                    CHECK(v < prev);
                    prev = v;
                }
            }
        }
    }
}

TEST_CASE("alpha Turanian is independent of alpha") {
    const double s1 = std::sin(1.0) * std::sin(1.0);
    Sampler s;
    for (int i = 0; i < 150; ++i) {
        const double nu = s.uniform(0.0, 10.0);
        const double x = s.log_uniform(0.1, 60.0);
        const BesselPair b = bessel_jy(nu, x);
        const double ref = s1 * (b.j.value * b.j.value + b.y.value * b.y.value);
        for (double a : {0.0, 0.7, 1.9, 3.0}) {
            CAPTURE(nu);
            CAPTURE(x);
            CAPTURE(a);
            CHECK(std::fabs(alpha_turanian(nu, x, a).value - ref) <= 1e-10 * ref);
        }
    }
}

TEST_CASE("serial and parallel sweeps are bit-identical") {
    GridSpec g;
    g.samples = 60;
    for (InequalityId id : all_inequalities()) {
        g.execution = Execution::serial;
        const CertificationReport a = certify(id, g);
        g.execution = Execution::parallel;
        const CertificationReport b = certify(id, g);
        CAPTURE(to_string(id));
        REQUIRE(a.verdicts.size() == b.verdicts.size());
        CHECK(a.grid_spec == b.grid_spec);
        CHECK(a.violations == b.violations);
        CHECK(a.min_margin_index == b.min_margin_index);
        bool identical = true;
        for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
            const Verdict& u = a.verdicts[i];
            const Verdict& v = b.verdicts[i];
            identical = identical && same_bits(u.x, v.x) && same_bits(u.margin, v.margin) &&
                        same_bits(u.error_band, v.error_band) && u.status == v.status && u.clause == v.clause &&
                        u.note == v.note;
        }
        CHECK(identical);
    }
}

TEST_CASE("verdict classification") {
    GridSpec g;
    g.samples = 40;
    for (InequalityId id : all_inequalities()) {
        const CertificationReport r = certify(id, g);
        for (const Verdict& v : r.verdicts) {
            if (v.status == VerdictStatus::skipped) {
                CHECK(!v.note.empty());
                continue;
            }
            CHECK(v.error_band >= 0.0);
            if (v.status == VerdictStatus::pass) CHECK(v.margin > kMarginBandFactor * v.error_band);
            if (v.status == VerdictStatus::fail) CHECK(v.margin < -kMarginBandFactor * v.error_band);
            if (v.status == VerdictStatus::inconclusive) CHECK(std::fabs(v.margin) <= kMarginBandFactor * v.error_band);
        }
        if (r.min_margin_index) CHECK(r.min_margin() == r.verdicts[*r.min_margin_index].margin);
    }
}

TEST_CASE("error estimates are non-negative and finite") {
    Sampler s;
    for (int i = 0; i < kDraws; ++i) {
        const double nu = s.uniform(-0.9, 30.0);
        const double x = s.log_uniform(1e-3, 500.0);
        try {
            const BesselPair b = bessel_jy(nu, x);
            CHECK(b.j.abs_error_estimate >= 0.0);
            CHECK(b.y.abs_error_estimate >= 0.0);
            CHECK(std::isfinite(b.j.value));
            CHECK(std::isfinite(b.y.value));
        } catch (const OverflowError&) {
        }
    }
}

}
