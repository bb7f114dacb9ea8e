#include <benchmark/benchmark.h>

#include "pkahler/cohomology.hpp"
#include "pkahler/lie_model.hpp"

using namespace pkahler;

namespace {

ExactForm random_homogeneous(int n, int p, int q, uint64_t seed) {
    ExactForm f(n);
    uint64_t state = seed;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    auto Is = mi::all_subsets(n, p);
    auto Js = mi::all_subsets(n, q);
    for (int t = 0; t < 6; ++t) {
        GaussianRational c(mpq_class(static_cast<long>(next() % 13) - 6,
                                     static_cast<long>(next() % 4) + 1),
                           mpq_class(static_cast<long>(next() % 13) - 6,
                                     static_cast<long>(next() % 4) + 1));
        f.add_term(Is[next() % Is.size()], Js[next() % Js.size()], c);
    }
    return f;
}

void BM_wedge(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ExactForm a = random_homogeneous(n, 2, 1, 12);
    ExactForm b = random_homogeneous(n, 1, 2, 34);
    for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_wedge)->Arg(4)->Arg(5)->Arg(7);

void BM_differential(benchmark::State& state) {
    LieModel m = catalog::etabeta(static_cast<int>(state.range(0)));
    ExactForm a = random_homogeneous(m.dimension(), 2, 2, 77);
    for (auto _ : state) benchmark::DoNotOptimize(m.differential(a));
}
BENCHMARK(BM_differential)->Arg(3)->Arg(5)->Arg(7);

void BM_bottchern_group(benchmark::State& state) {
    // uncached path: rebuild the model every iteration so the cache key differs
    for (auto _ : state) {
        state.PauseTiming();
        LieModel m = catalog::etabeta(5);
        state.ResumeTiming();
        benchmark::DoNotOptimize(compute_group(m, CohomologyFlavor::BottChern, 2));
    }
}
BENCHMARK(BM_bottchern_group)->Iterations(3)->Unit(benchmark::kMillisecond);

}  // namespace
