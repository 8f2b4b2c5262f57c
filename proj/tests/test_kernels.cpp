#include <doctest.h>

#include <omp.h>

#include <random>

#include "graphs.hpp"
#include "ugsim/game.hpp"
#include "ugsim/generators.hpp"
#include "ugsim/kernels.hpp"
#include "ugsim/stats.hpp"

using namespace ugsim;

namespace {

std::vector<std::uint8_t> random_strategies(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<std::uint8_t> s(n);
    for (auto& x : s)
        x = static_cast<std::uint8_t>(pick(rng));
    return s;
}

} // namespace

TEST_CASE("parallel kernels are bit-identical to the serial reference") {
    omp_set_num_threads(4);
    for (NetworkModel model : {NetworkModel::BA, NetworkModel::DMS}) {
        const Network net = generate({model, 3000, 2, 0, 17});
        const auto strategies = random_strategies(net.node_count(), 5);
        const auto matrix = PayoffMatrix({0.1, 0.6}).entries();

        std::vector<double> fs(net.node_count()), fp(net.node_count(), -1.0);
        kernels::serial::compute_fitness(net, strategies, matrix, fs);
        kernels::omp::compute_fitness(net, strategies, matrix, fp);
        CHECK(fs == fp);

        for (kernels::StrategyMask mask : {0b0001, 0b0011, 0b0101}) {
            for (double t : {0.0, 0.3, 0.7, 1.0}) {
                std::vector<std::uint8_t> a(net.node_count()), b(net.node_count(), 9);
                kernels::serial::neighbourhood_eligibility(net, strategies,
                                                           static_cast<kernels::StrategyMask>(mask),
                                                           t, a);
                kernels::omp::neighbourhood_eligibility(net, strategies,
                                                        static_cast<kernels::StrategyMask>(mask),
                                                        t, b);
                CHECK(a == b);
            }
        }
        CHECK(kernels::serial::count_triangles(net) == kernels::omp::count_triangles(net));
    }
}

TEST_CASE("fitness kernel on hand-sized graphs") {
    const auto matrix = PayoffMatrix({0.1, 0.6}).entries();
    const Network tri = testing::complete(3);
    std::vector<std::uint8_t> all_hh(3, 0);
    std::vector<double> f(3);
    kernels::serial::compute_fitness(tri, all_hh, matrix, f);
    CHECK(f == std::vector<double>(3, 1.0));
}

TEST_CASE("eligibility kernel") {
    // Star, centre HH, leaves HH, HH, LL, LL.
    const Network s = testing::star(5);
    std::vector<std::uint8_t> strategies{0, 0, 0, 3, 3};
    std::vector<std::uint8_t> flags(5);
    kernels::serial::neighbourhood_eligibility(s, strategies, 0b0001, 0.5, flags);
    CHECK(flags == std::vector<std::uint8_t>{1, 0, 0, 0, 0});
}

TEST_CASE("triangle count kernel") {
    CHECK(kernels::serial::count_triangles(testing::complete(6)) == 20);
    CHECK(kernels::omp::count_triangles(testing::cycle(5)) == 0);
    CHECK(kernels::serial::count_triangles(testing::complete(3)) == 1);
}
