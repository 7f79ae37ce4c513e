// Parallel kernels against their serial reference paths.

#include "svw/liealg.hpp"
#include "svw/verma.hpp"

#include <benchmark/benchmark.h>

using namespace svw;

namespace {

void gram(benchmark::State& st, Exec exec) {
    const auto alg = VermaAlgebra::sv();
    const int twice = int(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(gram_matrix(alg, twice, exec));
    st.counters["dim"] = double(pbw_basis(alg, twice, Ordering::M).size());
}

void jacobi(benchmark::State& st, Exec exec) {
    const auto alg = AlgebraId::sv(int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(verify_jacobi(alg, 8, exec));
}

}  // namespace

BENCHMARK_CAPTURE(gram, serial, Exec::Serial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(gram, parallel, Exec::Parallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(jacobi, serial, Exec::Serial)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(jacobi, parallel, Exec::Parallel)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
