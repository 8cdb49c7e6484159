#include <doctest.h>

#include <cmath>
#include <vector>

#include "gbessel/bessel.hpp"
#include "gbessel/detail/bessel_regimes.hpp"
#include "gbessel/error.hpp"
#include "gbessel/turan.hpp"
#include "oracles.hpp"

using namespace gbessel;
using oracle::pi;

namespace {

double j(double nu, double x) { return bessel_j(nu, x).value; }
double y(double nu, double x) { return bessel_y(nu, x).value; }

}  // namespace

TEST_SUITE("bessel") {

TEST_CASE("J_0 at the origin") { CHECK(std::fabs(j(0.0, 1e-8) - 1.0) <= 1e-15); }

TEST_CASE("J_{1/2} vanishes at pi") { CHECK(std::fabs(j(0.5, pi)) <= 1e-12); }

TEST_CASE("J_2(1) against a 50-digit series") {
    const double ref = oracle::mp_series_j(2.0, 1.0);
    CHECK(oracle::rel_diff(j(2.0, 1.0), ref) < 1e-14);
}

TEST_CASE("J against the 50-digit series at small and moderate x") {
    for (double nu : {0.0, 0.25, 1.0, 3.5, 8.0}) {
        for (double x : {0.01, 0.5, 1.9, 2.1, 6.0, 12.0}) {
            CAPTURE(nu);
            CAPTURE(x);
            const FunctionValue v = bessel_j(nu, x);
            const double ref = oracle::mp_series_j(nu, x);
            CHECK(std::fabs(v.value - ref) <= 3.0 * v.abs_error_estimate + 1e-15 * std::fabs(ref));
        }
    }
}

TEST_CASE("Y_{1/2} closed form") {
    for (double x : {0.5, 2.0, 10.0}) {
        CAPTURE(x);
        CHECK(oracle::rel_diff(y(0.5, x), oracle::y_half(x)) < 1e-11);
    }
}

TEST_CASE("Y_2 small-x asymptotic") {
    const double x = 1e-4;
    const double ref = -(1.0 / pi) * 1.0 * std::pow(x / 2.0, -2.0);
    CHECK(std::fabs(y(2.0, x) / ref - 1.0) < 1e-3);
    CHECK(y(2.0, x) < 0.0);
}

TEST_CASE("Wronskian in shifted-order form") {
    const BesselPair p = bessel_jy(0.7, 3.1);
    const double w = p.j_next.value * p.y.value - p.j.value * p.y_next.value;
    const double ref = 2.0 / (pi * 3.1);
    CHECK(std::fabs(w - ref) <= 1e-11 * ref);
}

TEST_CASE("Wronskian in derivative form") {
    const double nu = 1.2, x = 5.0;
    const double w = j(nu, x) * bessel_y_prime(nu, x).value - bessel_j_prime(nu, x).value * y(nu, x);
    const double ref = 2.0 / (pi * x);
    CHECK(std::fabs(w - ref) <= 1e-11 * ref);
}

TEST_CASE("derivatives") {
    CHECK(std::fabs(bessel_j_prime(0.0, 2.0).value + j(1.0, 2.0)) < 1e-12);

    const double fd = oracle::central_difference([](double t) { return j(0.5, t); }, 1.3, 1e-6);
    CHECK(std::fabs(bessel_j_prime(0.5, 1.3).value - fd) < 1e-8);

    const double j01 = oracle::bisect([](double t) { return j(0.0, t); }, 2.0, 3.0);
    const double d = bessel_j_prime(0.0, j01).value;
    CHECK(std::fabs(std::fabs(d) - std::fabs(j(1.0, j01))) < 1e-14);
    CHECK(std::fabs(d) > 0.5);

    // d/dx (-sqrt(2/(pi x)) cos x)
    const double x = 1.0;
    const double yp = std::sqrt(2.0 / pi) * (0.5 * std::pow(x, -1.5) * std::cos(x) + std::pow(x, -0.5) * std::sin(x));
    CHECK(std::fabs(bessel_y_prime(0.5, x).value - yp) < 1e-10);

    const double fdy = oracle::central_difference([](double t) { return y(1.5, t); }, 4.0, 1e-6);
    CHECK(std::fabs(bessel_y_prime(1.5, 4.0).value - fdy) < 1e-8);
}

TEST_CASE("agreement with Boost.Math") {
    const std::vector<double> nus{-0.9, -0.5, -0.3, 0.0, 0.3, 1.0, 2.5, 7.0, 15.0, 30.0};
    for (double nu : nus) {
        for (double x : log_spaced(1e-3, 200.0, 120)) {
            CAPTURE(nu);
            CAPTURE(x);
            const FunctionValue vj = bessel_j(nu, x);
            const double rj = oracle::boost_j(nu, x);
            CHECK(std::fabs(vj.value - rj) <= 3.0 * vj.abs_error_estimate + 1e-14 * std::fabs(rj) + 1e-300);
            const double ry = oracle::boost_y(nu, x);
            if (!std::isfinite(ry) || std::fabs(ry) > 1e300) continue;
            const FunctionValue vy = bessel_y(nu, x);
            CHECK(std::fabs(vy.value - ry) <= 3.0 * vy.abs_error_estimate + 1e-14 * std::fabs(ry));
        }
    }
}

TEST_CASE("relative accuracy away from zeros") {
    for (double nu : {0.0, 0.5, 1.7, 4.0}) {
        for (double x : log_spaced(0.05, 80.0, 60)) {
            const double rj = oracle::boost_j(nu, x);
            const double ry = oracle::boost_y(nu, x);
            const double mod = std::hypot(rj, ry);
            CAPTURE(nu);
            CAPTURE(x);
            if (std::fabs(rj) > 0.1 * mod) CHECK(oracle::rel_diff(j(nu, x), rj) < 1e-11);
            if (std::fabs(ry) > 0.1 * mod) CHECK(oracle::rel_diff(y(nu, x), ry) < 1e-11);
        }
    }
}

TEST_CASE("regimes are recorded") {
    CHECK(bessel_j(1.0, 1.0).regime == Regime::series);
    CHECK(bessel_j(1.0, 10.0).regime == Regime::intermediate);
    CHECK(bessel_j(1.0, 50.0).regime == Regime::asymptotic);
    CHECK(bessel_j(10.0, 50.0).regime == Regime::intermediate);
    CHECK(bessel_j(10.0, 200.0).regime == Regime::asymptotic);
}

TEST_CASE("adjacent regimes agree on their seams") {
    const EvaluationConfig cfg;
    auto agree = [&](const detail::JYValues& a, const detail::JYValues& b) {
        const double mod = std::hypot(a.j, a.y);
        CHECK(std::fabs(a.j - b.j) <= 10.0 * cfg.target_rel_tol * mod);
        CHECK(std::fabs(a.y - b.y) <= 10.0 * cfg.target_rel_tol * mod);
        const double modn = std::hypot(a.j_next, a.y_next);
        CHECK(std::fabs(a.j_next - b.j_next) <= 10.0 * cfg.target_rel_tol * modn);
        CHECK(std::fabs(a.y_next - b.y_next) <= 10.0 * cfg.target_rel_tol * modn);
    };
    for (double nu : {0.0, 0.3, 0.5, 1.0, 2.7, 6.0}) {
        for (double x : {1.9, 2.0, 2.1}) {
            CAPTURE(nu);
            CAPTURE(x);
            agree(detail::jy_small_x(nu, x, cfg), detail::jy_steed(nu, x, cfg));
        }
        const double t = cfg.asymptotic_threshold(nu);
        for (double x : {0.98 * t, t, 1.02 * t}) {
            CAPTURE(nu);
            CAPTURE(x);
            agree(detail::jy_steed(nu, x, cfg), detail::jy_hankel(nu, x, cfg));
        }
    }
}

TEST_CASE("normalised J") {
    CHECK(std::fabs(bessel_j_normalized(1.5, 1e-4).value - 1.0) < 1e-8);
    const double x = 0.01, nu = 60.0;
    const double direct = bessel_j_normalized(nu, x).value;
    CHECK(direct > 0.99);
    CHECK(direct < 1.0);
    const double x2 = 3.0, nu2 = 2.0;
    CHECK(oracle::rel_diff(bessel_j_normalized(nu2, x2).value,
                           std::tgamma(nu2 + 1.0) * std::pow(2.0 / x2, nu2) * j(nu2, x2)) < 1e-13);
}

TEST_CASE("domain and config errors") {
    CHECK_THROWS_AS(bessel_j(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0.5, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_y(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(std::nan(""), 1.0), DomainError);
    EvaluationConfig bad;
    bad.target_rel_tol = 1.5;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = {};
    bad.max_series_terms = 5;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_NOTHROW(EvaluationConfig{}.validate());
}

TEST_CASE("Y overflows honestly") { CHECK_THROWS_AS(bessel_y(150.0, 1e-3), OverflowError); }

}
