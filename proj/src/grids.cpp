#include <cmath>
#include <vector>

#include "gbessel/error.hpp"
#include "gbessel/turan.hpp"

namespace gbessel {

std::vector<double> log_spaced(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("log_spaced: need 0 < lo <= hi");
    std::vector<double> out;
    if (count <= 0) return out;
    if (count == 1) return {lo};
    out.reserve(static_cast<std::size_t>(count));
    const double span = std::log(hi / lo);
    for (int k = 0; k < count; ++k) out.push_back(lo * std::exp(span * k / (count - 1)));
    out.back() = hi;
    return out;
}

std::vector<double> lin_spaced(double lo, double hi, int count) {
    if (!(hi >= lo)) throw DomainError("lin_spaced: need lo <= hi");
    std::vector<double> out;
    if (count <= 0) return out;
    if (count == 1) return {lo};
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) out.push_back(lo + (hi - lo) * k / (count - 1));
    out.back() = hi;
    return out;
}

std::vector<double> interior_points(double lo, double hi, int count) {
    if (!(hi > lo)) throw DomainError("interior_points: need lo < hi");
    std::vector<double> out;
    if (count <= 0) return out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 1; k <= count; ++k) out.push_back(lo + (hi - lo) * k / (count + 1));
    return out;
}

}  // namespace gbessel
