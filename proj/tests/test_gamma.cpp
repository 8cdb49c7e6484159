#include <doctest.h>

#include <cmath>

#include "gbessel/error.hpp"
#include "gbessel/gamma.hpp"
#include "oracles.hpp"



TEST_SUITE("gamma") {

TEST_CASE("matches tgamma on [0.5, 50]") {
    for (int i = 0; i <= 495; ++i) {
        const double t = 0.5 + 0.1 * i;
        const gbessel::FunctionValue g = gbessel::gamma(t);
        CAPTURE(t);
        CHECK(oracle::rel_diff(g.value, std::tgamma(t)) < 1e-13);
        CHECK(std::fabs(g.value - std::tgamma(t)) <= g.abs_error_estimate + 1e-15 * g.value);
    }
}

TEST_CASE("integer values are factorials") {
    double f = 1.0;
    for (int n = 1; n <= 20; ++n) {
        CHECK(oracle::rel_diff(gbessel::gamma(n).value, f) < 1e-14);
        f *= n;
    }
    CHECK(oracle::rel_diff(gbessel::gamma(0.5).value, std::sqrt(oracle::pi)) < 1e-15);
}

TEST_CASE("reflection below one half") {
    for (double t : {0.25, 0.1, -0.5, -1.5, -2.7, -7.3}) {
        CAPTURE(t);
        CHECK(oracle::rel_diff(gbessel::gamma(t).value, std::tgamma(t)) < 1e-13);
        CHECK(std::fabs(gbessel::log_gamma(t) - std::lgamma(t)) < 1e-12 * std::max(1.0, std::fabs(std::lgamma(t))));
    }
}

TEST_CASE("poles and overflow") {
    CHECK_THROWS_AS(gbessel::gamma(0.0), gbessel::PoleError);
    CHECK_THROWS_AS(gbessel::gamma(-3.0), gbessel::PoleError);
    CHECK_THROWS_AS(gbessel::gamma(200.0), gbessel::OverflowError);
    CHECK(std::isfinite(gbessel::log_gamma(200.0)));
    CHECK(std::fabs(gbessel::log_gamma(200.0) - std::lgamma(200.0)) < 1e-12 * std::lgamma(200.0));
}

TEST_CASE("temme gammas") {
    for (double mu : {-0.5, -0.3, -1e-9, 0.0, 1e-7, 0.2, 0.5}) {
        const gbessel::TemmeGammas g = gbessel::temme_gammas(mu);
        CAPTURE(mu);
        CHECK(oracle::rel_diff(g.inv_gamma_plus, 1.0 / std::tgamma(1.0 + mu)) < 1e-14);
        CHECK(oracle::rel_diff(g.inv_gamma_minus, 1.0 / std::tgamma(1.0 - mu)) < 1e-14);
        CHECK(oracle::rel_diff(g.gam2, 0.5 * (g.inv_gamma_minus + g.inv_gamma_plus)) < 1e-14);
        if (std::fabs(mu) > 0.1) {
            CHECK(oracle::rel_diff(g.gam1, (g.inv_gamma_minus - g.inv_gamma_plus) / (2.0 * mu)) < 1e-13);
        }
    }
    // gam1(0) = psi(1) = -Euler's constant
    CHECK(gbessel::temme_gammas(0.0).gam1 == doctest::Approx(-0.5772156649015329).epsilon(1e-14));
}

TEST_CASE("sin_pi and cos_pi are exact at integers and halves") {
    for (int k = -6; k <= 6; ++k) {
        CHECK(gbessel::sin_pi(k) == 0.0);
        CHECK(gbessel::cos_pi(k + 0.5) == 0.0);
        CHECK(std::fabs(gbessel::cos_pi(k)) == 1.0);
    }
    CHECK(gbessel::sin_pi(0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

}
