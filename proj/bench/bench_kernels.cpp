// Serial reference kernels against their OpenMP forms, plus the D(H4)
// bialgebra check end to end.

#include <benchmark/benchmark.h>

#include <random>

#include "crossbi/algstruct.hpp"
#include "crossbi/catalog.hpp"
#include "crossbi/kernels.hpp"

using namespace crossbi;

namespace {

FieldSpec field_for(std::int64_t arg) { return arg ? FieldSpec::prime(5) : FieldSpec::rationals(); }

LinMap random_map(const FieldSpec &f, std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
    LinMap m(f, Shape{cols}, Shape{rows});
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = f.from_fraction(num(rng), den(rng));
    return m;
}

template <Vec (*Kernel)(const LinMap &, const LinMap &)>
void matmul(benchmark::State &state) {
    const auto f = field_for(state.range(1));
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_map(f, n, n, 1), b = random_map(f, n, n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(a, b));
}

template <Vec (*Kernel)(const LinMap &, const LinMap &)>
void kron(benchmark::State &state) {
    const auto f = field_for(state.range(1));
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_map(f, n, n, 3), b = random_map(f, n, n, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(a, b));
}

template <Vec (*Kernel)(const LinMap &, std::size_t, const kernels::ColumnFn &)>
void map_columns(benchmark::State &state) {
    const auto H = sweedler_h4(field_for(state.range(0))).bia;
    const auto id = LinMap::identity(H.field(), Shape{4, 4, 4});
    const kernels::ColumnFn fn = [&](const Tensor &t) {
        return t.apply(H.alg.mult, 0).apply(H.alg.mult, 0).apply(H.coa.comult, 0);
    };
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(id, 16, fn));
}

void double_h4_check(benchmark::State &state) {
    const auto D = drinfeld_double(sweedler_h4(field_for(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_bialgebra(D.carrier).ok());
    state.SetLabel(kernels::openmp_enabled() ? "openmp threads " + std::to_string(kernels::max_threads()) : "serial build");
}

} // namespace

// Second argument: 0 for Q, 1 for F5.
BENCHMARK(matmul<kernels::serial::matmul>)->Name("matmul/serial")->ArgsProduct({{16, 48, 96}, {0, 1}});
BENCHMARK(matmul<kernels::parallel::matmul>)->Name("matmul/parallel")->ArgsProduct({{16, 48, 96}, {0, 1}})->UseRealTime();
BENCHMARK(kron<kernels::serial::kron>)->Name("kron/serial")->ArgsProduct({{4, 8, 12}, {0, 1}});
BENCHMARK(kron<kernels::parallel::kron>)->Name("kron/parallel")->ArgsProduct({{4, 8, 12}, {0, 1}})->UseRealTime();
BENCHMARK(map_columns<kernels::serial::map_columns>)->Name("map_columns/serial")->Arg(0)->Arg(1);
BENCHMARK(map_columns<kernels::parallel::map_columns>)->Name("map_columns/parallel")->Arg(0)->Arg(1)->UseRealTime();
BENCHMARK(double_h4_check)->Name("double_h4/check_bialgebra")->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
