#pragma once

// Data-parallel inner loops of the simulator. Every kernel exists twice: a
// serial reference in `kernels::serial` and an OpenMP version in
// `kernels::omp`. Both produce bit-identical output for the same input
// (each element is computed by the same per-node expression; only the
// distribution of nodes over threads differs).

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "ugsim/network.hpp"

namespace ugsim {

enum class ExecPolicy { Serial, Parallel };

namespace kernels {

/// Membership mask over the four strategies, bit i set for strategy index i.
using StrategyMask = std::uint8_t;

namespace serial {

/// fitness[i] = sum over neighbours j of matrix[s_i * 4 + s_j]
void compute_fitness(const Network& net, std::span<const std::uint8_t> strategies,
                     const std::array<double, 16>& matrix, std::span<double> fitness);

/// flags[i] = 1 iff s_i is in `mask` and the fraction of i's neighbours in
/// `mask` is <= threshold.
void neighbourhood_eligibility(const Network& net, std::span<const std::uint8_t> strategies,
                               StrategyMask mask, double threshold,
                               std::span<std::uint8_t> flags);

/// Number of triangles, each counted once.
std::size_t count_triangles(const Network& net);

} // namespace serial

namespace omp {

void compute_fitness(const Network& net, std::span<const std::uint8_t> strategies,
                     const std::array<double, 16>& matrix, std::span<double> fitness);

void neighbourhood_eligibility(const Network& net, std::span<const std::uint8_t> strategies,
                               StrategyMask mask, double threshold,
                               std::span<std::uint8_t> flags);

std::size_t count_triangles(const Network& net);

} // namespace omp

inline void compute_fitness(ExecPolicy policy, const Network& net,
                            std::span<const std::uint8_t> strategies,
                            const std::array<double, 16>& matrix, std::span<double> fitness) {
    if (policy == ExecPolicy::Parallel)
        omp::compute_fitness(net, strategies, matrix, fitness);
    else
        serial::compute_fitness(net, strategies, matrix, fitness);
}

inline void neighbourhood_eligibility(ExecPolicy policy, const Network& net,
                                      std::span<const std::uint8_t> strategies,
                                      StrategyMask mask, double threshold,
                                      std::span<std::uint8_t> flags) {
    if (policy == ExecPolicy::Parallel)
        omp::neighbourhood_eligibility(net, strategies, mask, threshold, flags);
    else
        serial::neighbourhood_eligibility(net, strategies, mask, threshold, flags);
}

} // namespace kernels
} // namespace ugsim
