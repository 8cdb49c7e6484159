#pragma once

#include <utility>
#include <vector>

#include "gbessel/types.hpp"

namespace gbessel {

/// The n-th positive zero c_{nu,n} of C_nu(x; alpha).
struct ZeroRecord {
    double nu = 0.0;
    double alpha = 0.0;
    int n = 0;  // 1-based
    double abscissa = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};  // C changes sign across it
    double residual = 0.0;                        // |C_nu(abscissa)|
};

struct ZeroTable {
    CylinderParams params;
    std::vector<ZeroRecord> records;
};

/// Asymptotic location (n - 1/2) pi + nu pi/2 + pi/4 - alpha of the n-th
/// zero, from the phase of the large-x form. Only a starting point; the
/// solver does not rely on it for indexing.
double mcmahon_guess(const CylinderParams& p, int n);

/// n-th positive zero, accurate to 1e-10 absolute. Accepts nu > -1 so the
/// neighbouring orders nu - 1 and nu + 1 can reuse it.
ZeroRecord nth_zero(const CylinderParams& p, int n, const EvaluationConfig& cfg = {});

/// All zeros in (0, x_max], ascending. Empty when x_max < c_{nu,1}.
ZeroTable zeros_up_to(const CylinderParams& p, double x_max, const EvaluationConfig& cfg = {});

/// The first n zeros.
ZeroTable first_zeros(const CylinderParams& p, int count, const EvaluationConfig& cfg = {});

/// First positive stationary point of C_0(x; alpha), i.e. the first zero of
/// C_1 because C'_0 = -C_1.
ZeroRecord first_stationary_c0(double alpha, const EvaluationConfig& cfg = {});

}  // namespace gbessel
