#include <benchmark/benchmark.h>

#include "gbessel/turan.hpp"

namespace {

gbessel::GridSpec grid(int samples, gbessel::Execution exec) {
    gbessel::GridSpec g;
    g.samples = samples;
    g.execution = exec;
    return g;
}

void run(benchmark::State& state, gbessel::InequalityId id, gbessel::Execution exec) {
    const gbessel::GridSpec g = grid(static_cast<int>(state.range(0)), exec);
    std::size_t verdicts = 0;
    for (auto _ : state) {
        const auto r = gbessel::certify(id, g);
        verdicts = r.verdicts.size();
        benchmark::DoNotOptimize(r.violations.data());
    }
    state.counters["verdicts"] = static_cast<double>(verdicts);
    state.counters["threads"] = gbessel::available_threads();
    state.SetItemsProcessed(static_cast<long>(state.iterations() * verdicts));
}

void BM_turan1_serial(benchmark::State& s) { run(s, gbessel::InequalityId::turan1, gbessel::Execution::serial); }
void BM_turan1_parallel(benchmark::State& s) { run(s, gbessel::InequalityId::turan1, gbessel::Execution::parallel); }
void BM_ine2_serial(benchmark::State& s) { run(s, gbessel::InequalityId::ine2, gbessel::Execution::serial); }
void BM_ine2_parallel(benchmark::State& s) { run(s, gbessel::InequalityId::ine2, gbessel::Execution::parallel); }
void BM_positivity_serial(benchmark::State& s) {
    run(s, gbessel::InequalityId::theorem2_positivity, gbessel::Execution::serial);
}
void BM_positivity_parallel(benchmark::State& s) {
    run(s, gbessel::InequalityId::theorem2_positivity, gbessel::Execution::parallel);
}

}  // namespace

BENCHMARK(BM_turan1_serial)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_turan1_parallel)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ine2_serial)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ine2_parallel)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_positivity_serial)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_positivity_parallel)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
