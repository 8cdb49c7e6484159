#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbessel/sweep.hpp"
#include "gbessel/types.hpp"

namespace gbessel {

// ---------------------------------------------------------------------------
// Crossover point x_nu: the unique root in (0, c_{nu,1}) of
// Delta_nu(x) = C_nu^2(x) / (nu + 1), for nu > 1 and 0 < alpha < pi.

struct CrossoverOptions {
    bool experimental = false;  // allow nu <= 1 and alpha = 0; nothing is asserted
    double x_tolerance = 1e-13;
};

struct CrossoverResult {
    double nu = 0.0;
    double alpha = 0.0;
    double x_nu = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};
    double residual = 0.0;          // |Delta_nu - C_nu^2/(nu+1)| at x_nu
    std::array<int, 3> sign_evidence{0, 0, 0};  // below / at / above x_nu
    double first_zero = 0.0;        // c_{nu,1}
    double sqrt_bound = 0.0;        // sqrt(nu (nu + 1))
    bool below_first_zero = false;
    bool below_sqrt_bound = false;
    bool experimental = false;
};

CrossoverResult crossover(double nu, double alpha, const CrossoverOptions& opts = {},
                          const EvaluationConfig& cfg = {});

/// x^2 (Delta_nu - C_nu^2/(nu+1)). Positive multiple of x^{2nu+2} Theta_nu,
/// so it has the same sign and monotonicity without the 2^{2nu} Gamma factors.
FunctionValue scaled_turan_margin(const CylinderParams& p, double x, const EvaluationConfig& cfg = {});

// ---------------------------------------------------------------------------
// Certification.

enum class InequalityId { turan1, ine2, bound1, bound3, laforgia, ratio_mu, ratio_plain, theorem2_positivity };

std::string_view to_string(InequalityId id) noexcept;
std::optional<InequalityId> parse_inequality(std::string_view name) noexcept;
std::span<const InequalityId> all_inequalities() noexcept;

enum class VerdictStatus { pass, fail, inconclusive, skipped };
std::string_view to_string(VerdictStatus s) noexcept;

struct Verdict {
    double nu = 0.0;
    double alpha = 0.0;
    double x = 0.0;
    std::string clause;
    double margin = 0.0;      // > 0 when the (possibly reversed) inequality holds
    double error_band = 0.0;  // combined error estimate of margin
    VerdictStatus status = VerdictStatus::skipped;
    std::string note;
};

struct CertificationReport {
    InequalityId inequality_id = InequalityId::turan1;
    std::string grid_spec;
    std::vector<Verdict> verdicts;
    std::optional<std::size_t> min_margin_index;  // among evaluated verdicts
    std::vector<std::size_t> violations;          // indices into verdicts

    [[nodiscard]] std::size_t count(VerdictStatus s) const noexcept;
    [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
    [[nodiscard]] double min_margin() const noexcept;
};

/// A verdict fails when margin < -fail_factor * error_band and passes when
/// margin > fail_factor * error_band; anything between is inconclusive.
inline constexpr double kMarginBandFactor = 10.0;

struct GridSpec {
    std::vector<double> nus{0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0};
    std::vector<double> alphas{0.0, std::numbers::pi / 6, std::numbers::pi / 4, std::numbers::pi / 2, 2.0, 3.0};
    int samples = 200;  // per clause domain
    double x_max = 50.0;
    Execution execution = Execution::parallel;
    bool experimental = false;  // also try the x_nu clauses for nu in (0, 1]; never counted as violations
};

CertificationReport certify(InequalityId id, const GridSpec& grid, const EvaluationConfig& cfg = {});

CertificationReport certify_turan1(const GridSpec& grid, const EvaluationConfig& cfg = {});
CertificationReport certify_ine2(const GridSpec& grid, const EvaluationConfig& cfg = {});
CertificationReport certify_bound1(const GridSpec& grid, const EvaluationConfig& cfg = {});
CertificationReport certify_bound3(const GridSpec& grid, const EvaluationConfig& cfg = {});
CertificationReport certify_laforgia(const GridSpec& grid, const EvaluationConfig& cfg = {});
CertificationReport certify_theorem2_positivity(const GridSpec& grid, const EvaluationConfig& cfg = {});

// Corrected ratio inequalities for J_nu / J_{nu-1}.
struct RatioBoundParams {
    double nu = 1.0;
    double mu = 0.5;  // nu / (nu + 1)
    static RatioBoundParams make(double nu);
};

struct RatioBoundReports {
    CertificationReport mu_chain;     // x in (0, sqrt(nu(nu+1)))
    CertificationReport plain_chain;  // x in (0, nu)
};

RatioBoundReports ratio_bounds(const RatioBoundParams& p, std::span<const double> mu_xs,
                               std::span<const double> plain_xs, Execution exec = Execution::parallel,
                               const EvaluationConfig& cfg = {});

/// Middle term of the mu chain, (nu - sqrt(nu^2 - mu x^2)) / (mu x), evaluated
/// as x / (nu + sqrt(nu^2 - mu x^2)) to avoid cancellation.
double ratio_mu_lower_chain(const RatioBoundParams& p, double x);
double ratio_mu_upper_chain(const RatioBoundParams& p, double x);
double ratio_plain_bound(double nu, double x);

// ---------------------------------------------------------------------------
// Series representation of the Turanian:
// Delta_nu = C_nu^2/(nu+1) + 2 nu sum_{i>=1} C_{nu+i}^2 / ((nu+i)^2 - 1).

struct SeriesEvalResult {
    double x = 0.0;
    double nu = 0.0;
    double alpha = 0.0;
    double partial_sum = 0.0;  // 2 nu sum_{i=1}^{terms_used} ...
    int terms_used = 0;
    double tail_bound = 0.0;         // min of the two bounds below
    double landau_tail_bound = 0.0;  // 2 nu tau^2 sum_{i>N} 1/((nu+i)^2-1)
    double ratio_tail_bound = 0.0;   // geometric bound from the decaying terms
    double lhs_direct = 0.0;         // Delta_nu(x)
    double leading = 0.0;            // C_nu^2/(nu+1)
    double discrepancy = 0.0;        // lhs_direct - leading - partial_sum
    double evaluation_error = 0.0;
};

struct SeriesOptions {
    double rel_tol = 1e-10;
    int max_terms = 0;  // 0: 10 x + 200
};

SeriesEvalResult series_turanian(const CylinderParams& p, double x, const SeriesOptions& opts = {},
                                 const EvaluationConfig& cfg = {});

// ---------------------------------------------------------------------------
// Landau's envelope: tau = C_0(x_1) at the first stationary point of C_0.

struct LandauEnvelope {
    double x1 = 0.0;
    FunctionValue tau;
    double abs_tau = 0.0;
    double stationarity_residual = 0.0;  // |C'_0(x1)|
};

LandauEnvelope landau_tau(double alpha, const EvaluationConfig& cfg = {});

// ---------------------------------------------------------------------------
// Relative extrema of Delta_nu: maxima at zeros of C_{nu-1}, minima at zeros
// of C_{nu+1}.

enum class ExtremumKind { maximum, minimum };
std::string_view to_string(ExtremumKind k) noexcept;

struct ExtremumRecord {
    ExtremumKind kind = ExtremumKind::maximum;
    int k = 0;
    double abscissa = 0.0;
    double value = 0.0;  // Delta_nu(abscissa)
    double c_nu = 0.0;   // C_nu(abscissa); value should equal c_nu^2
    double derivative = 0.0;  // (2/x) C_{nu-1} C_{nu+1} at the abscissa
    double second_derivative_fd = 0.0;
    double second_derivative_closed = 0.0;  // -+ (4 nu / x^2) C_nu^2
    int second_derivative_sign = 0;
    bool validated = false;
};

std::vector<ExtremumRecord> extrema_scan(const CylinderParams& p, double x_max, const EvaluationConfig& cfg = {});

// ---------------------------------------------------------------------------
// Grid helpers shared by the certifiers and the CLI.

std::vector<double> log_spaced(double lo, double hi, int count);
std::vector<double> lin_spaced(double lo, double hi, int count);
/// count points strictly inside (lo, hi).
std::vector<double> interior_points(double lo, double hi, int count);

}  // namespace gbessel
