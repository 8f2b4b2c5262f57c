#include "ugsim/kernels.hpp"

#include <cstdint>

namespace ugsim::kernels::omp {

void compute_fitness(const Network& net, std::span<const std::uint8_t> strategies,
                     const std::array<double, 16>& matrix, std::span<double> fitness) {
    const auto offsets = net.offsets();
    const auto adj = net.adjacency();
    const auto n = static_cast<std::int64_t>(net.node_count());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const double* row = matrix.data() + 4 * strategies[i];
        double f = 0.0;
        for (std::size_t e = offsets[i]; e < offsets[i + 1]; ++e)
            f += row[strategies[adj[e]]];
        fitness[i] = f;
    }
}

void neighbourhood_eligibility(const Network& net, std::span<const std::uint8_t> strategies,
                               StrategyMask mask, double threshold,
                               std::span<std::uint8_t> flags) {
    const auto offsets = net.offsets();
    const auto adj = net.adjacency();
    const auto n = static_cast<std::int64_t>(net.node_count());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        if (!((mask >> strategies[i]) & 1u)) {
            flags[i] = 0;
            continue;
        }
        std::size_t matching = 0;
        for (std::size_t e = offsets[i]; e < offsets[i + 1]; ++e)
            matching += (mask >> strategies[adj[e]]) & 1u;
        const std::size_t degree = offsets[i + 1] - offsets[i];
        const double share =
            degree == 0 ? 0.0 : static_cast<double>(matching) / static_cast<double>(degree);
        flags[i] = share <= threshold ? 1 : 0;
    }
}

std::size_t count_triangles(const Network& net) {
    std::size_t total = 0;
    const auto n = static_cast<std::int64_t>(net.node_count());
    // Hubs carry most of the work on scale-free graphs.
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 64)
    for (std::int64_t u = 0; u < n; ++u) {
        auto nu = net.neighbours(static_cast<NodeId>(u));
        for (NodeId v : nu) {
            if (v <= u)
                continue;
            auto nv = net.neighbours(v);
            auto a = nu.begin();
            auto b = nv.begin();
            while (a != nu.end() && b != nv.end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    if (*a > v)
                        ++total;
                    ++a;
                    ++b;
                }
            }
        }
    }
    return total;
}

} // namespace ugsim::kernels::omp
