#pragma once

// Grid-sweep kernels. Every certifier maps a pure function over a vector of
// probe points; map_serial is the reference implementation and map_parallel
// must produce bit-identical output (each result is written to its own slot,
// so scheduling cannot change the result order).

#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace gbessel {

enum class Execution { serial, parallel };

template <class In, class Fn>
auto map_serial(std::span<const In> in, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, const In&>> {
    std::vector<std::invoke_result_t<Fn&, const In&>> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = fn(in[i]);
    return out;
}

// fn must not throw: an exception escaping an OpenMP region terminates.
template <class In, class Fn>
auto map_parallel(std::span<const In> in, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, const In&>> {
    std::vector<std::invoke_result_t<Fn&, const In&>> out(in.size());
    const auto n = static_cast<std::ptrdiff_t>(in.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(in[static_cast<std::size_t>(i)]);
    return out;
}

template <class In, class Fn>
auto map_probes(std::span<const In> in, Fn&& fn, Execution exec) {
    return exec == Execution::parallel ? map_parallel(in, fn) : map_serial(in, fn);
}

inline int available_threads() noexcept {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace gbessel
