// Engine comparison for the exhaustive law sweep: name-based reference
// evaluator vs the packed kernel, serial and parallel.

#include <benchmark/benchmark.h>

#include "softmap/enumerate.hpp"
#include "softmap/oracle.hpp"

namespace {

using namespace softmap;

ExhaustiveOptions all_laws(OracleEngine engine) {
    ExhaustiveOptions options;
    options.engine = engine;
    for (const Law& lw : law_catalog())
        if (!lw.refutation_target) options.laws.push_back(lw.id);
    return options;
}

void run_sweep(benchmark::State& state, OracleEngine engine) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto source = make_bounded_context(n, n, "x", "a");
    const auto target = make_bounded_context(n, n, "y", "b");
    const auto options = all_laws(engine);
    std::uint64_t instances = 0;
    for (auto _ : state) {
        auto reports = run_exhaustive(source, target, options);
        instances = 0;
        for (const auto& r : reports) instances += r.instances;
        benchmark::DoNotOptimize(reports);
    }
    state.counters["instances"] = static_cast<double>(instances);
}

void BM_reference(benchmark::State& state) { run_sweep(state, OracleEngine::reference); }
void BM_packed(benchmark::State& state) { run_sweep(state, OracleEngine::packed); }
void BM_packed_parallel(benchmark::State& state) {
    run_sweep(state, OracleEngine::packed_parallel);
}

BENCHMARK(BM_reference)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_packed)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_packed_parallel)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
