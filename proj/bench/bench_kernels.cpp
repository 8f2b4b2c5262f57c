// Serial reference versus OpenMP kernels on BA networks of growing size.

#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <vector>

#include "ugsim/game.hpp"
#include "ugsim/generators.hpp"
#include "ugsim/interference.hpp"
#include "ugsim/kernels.hpp"

namespace {

using namespace ugsim;

struct Fixture {
    Network net;
    std::vector<std::uint8_t> strategies;
    std::array<double, 16> matrix = PayoffMatrix({0.1, 0.6}).entries();

    explicit Fixture(std::size_t n) : net(generate({NetworkModel::BA, n, 2, 0, 1})) {
        std::mt19937_64 rng(1);
        std::uniform_int_distribution<int> pick(0, 3);
        strategies.resize(n);
        for (auto& s : strategies)
            s = static_cast<std::uint8_t>(pick(rng));
    }
};

const Fixture& fixture(std::size_t n) {
    static std::map<std::size_t, Fixture> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, Fixture(n)).first;
    return it->second;
}

template <ExecPolicy P>
void BM_Fitness(benchmark::State& state) {
    const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
    std::vector<double> fitness(f.net.node_count());
    for (auto _ : state) {
        kernels::compute_fitness(P, f.net, f.strategies, f.matrix, fitness);
        benchmark::DoNotOptimize(fitness.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.net.node_count()));
}

template <ExecPolicy P>
void BM_NeighbourhoodEligibility(benchmark::State& state) {
    const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
    std::vector<std::uint8_t> flags(f.net.node_count());
    const auto mask = target_mask(TargetSet::FairResponders);
    for (auto _ : state) {
        kernels::neighbourhood_eligibility(P, f.net, f.strategies, mask, 0.7, flags);
        benchmark::DoNotOptimize(flags.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.net.node_count()));
}

void BM_TrianglesSerial(benchmark::State& state) {
    const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::serial::count_triangles(f.net));
}

void BM_TrianglesParallel(benchmark::State& state) {
    const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::omp::count_triangles(f.net));
}

} // namespace

BENCHMARK(BM_Fitness<ExecPolicy::Serial>)->Arg(2000)->Arg(20000)->Arg(200000);
BENCHMARK(BM_Fitness<ExecPolicy::Parallel>)->Arg(2000)->Arg(20000)->Arg(200000);
BENCHMARK(BM_NeighbourhoodEligibility<ExecPolicy::Serial>)->Arg(2000)->Arg(20000)->Arg(200000);
BENCHMARK(BM_NeighbourhoodEligibility<ExecPolicy::Parallel>)->Arg(2000)->Arg(20000)->Arg(200000);
BENCHMARK(BM_TrianglesSerial)->Arg(2000)->Arg(200000);
BENCHMARK(BM_TrianglesParallel)->Arg(2000)->Arg(200000);

BENCHMARK_MAIN();
