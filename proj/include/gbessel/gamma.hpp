#pragma once

#include "gbessel/types.hpp"

namespace gbessel {

/// Gamma function for real t.
///
/// Lanczos approximation (g = 7, nine terms) for t >= 1/2 and the reflection
/// formula below that. Relative error is below 1e-13 on [0.5, 50].
/// Throws PoleError at t = 0, -1, -2, ... and OverflowError when the result
/// does not fit in a double.
FunctionValue gamma(double t);

/// log|Gamma(t)|, same method; finite for every t that is not a pole.
double log_gamma(double t);

/// 1/Gamma(1 + mu) and 1/Gamma(1 - mu) together with the two symmetric
/// combinations used by Temme's method:
///   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
///   gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
/// Valid for |mu| <= 1/2; computed from the Taylor series of 1/Gamma so that
/// gam1 keeps full precision as mu -> 0.
struct TemmeGammas {
    double gam1;
    double gam2;
    double inv_gamma_plus;   // 1/Gamma(1+mu)
    double inv_gamma_minus;  // 1/Gamma(1-mu)
};

TemmeGammas temme_gammas(double mu);

/// sin(pi t) and cos(pi t) with exact reduction of t, so integer and
/// half-integer arguments give exact zeros.
double sin_pi(double t);
double cos_pi(double t);

}  // namespace gbessel
