#include <benchmark/benchmark.h>

#include "schurcone/cone.hpp"
#include "schurcone/nested.hpp"
#include "schurcone/schur.hpp"
#include "schurcone/tableau.hpp"

using namespace schurcone;

namespace {

// The memo caches make repeat calls trivial; each iteration works on a
// fresh shape/content drawn round-robin so the numbers stay honest.
static void BM_LrCoefficient(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto shapes = partitions_of(n);
    const auto factors = enumerate_sp(n, 2);
    size_t i = 0;
    for (auto _ : state) {
        const auto& A = factors[i % factors.size()];
        const auto& lam = shapes[(i / factors.size()) % shapes.size()];
        std::vector<int> pi(static_cast<size_t>(phi(A).length()));
        for (size_t t = 0; t < pi.size(); ++t) pi[t] = static_cast<int>(t) + 1;
        benchmark::DoNotOptimize(lr_coefficient(A.factors(), lam, pi));  // pi bypasses the memo
        ++i;
    }
}
BENCHMARK(BM_LrCoefficient)->Arg(8)->Arg(10)->Arg(12);

static void BM_SchurProductTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long acc = 0;
        for (const auto& A : enumerate_sp(n, 2))
            for (const auto& lam : partitions_of(n)) {
                std::vector<int> pi(static_cast<size_t>(phi(A).length()));
                for (size_t t = 0; t < pi.size(); ++t) pi[t] = static_cast<int>(t) + 1;
                acc += lr_coefficient(A.factors(), lam, pi);
            }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_SchurProductTable)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSSP(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_ssp(n));
}
BENCHMARK(BM_EnumerateSSP)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_ExtremeSweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ConeSpec spec{n, 2};
    generators(spec);  // warm the expansion cache; the LP work remains
    for (auto _ : state) {
        int extreme = 0;
        for (const auto& [A, v] : generators(spec))
            if (is_extreme(A, spec).extreme) ++extreme;
        benchmark::DoNotOptimize(extreme);
    }
}
BENCHMARK(BM_ExtremeSweep)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_DistinctSeparator(benchmark::State& state) {
    const Partition lam = Partition::parse("6,5,4,3,2,1");
    const auto ssp = enumerate_ssp_lambda(lam);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(distinct_parts_separator(ssp[i % ssp.size()]));
        ++i;
    }
}
BENCHMARK(BM_DistinctSeparator)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
