#pragma once

#include <cstddef>
#include <span>

#include "ugsim/dynamics.hpp"

namespace ugsim {

struct Aggregate {
    double mean_fairness = 0.0;
    double se_fairness = 0.0;
    double mean_cost = 0.0;
    double se_cost = 0.0;
    Frequencies mean_freqs{};
    std::size_t replicate_count = 0;
};

/// Mean of the last `window` frequency vectors.
Frequencies window_average(std::span<const Frequencies> trajectory, std::size_t window);

/// Share of fair proposers (HH + HL).
inline double fairness(const Frequencies& f) { return f[0] + f[1]; }

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
};

/// Sample mean and standard error (n - 1 denominator, 0 for a single value).
MeanSe mean_and_se(std::span<const double> values);

Aggregate aggregate(std::span<const RunResult> results);

} // namespace ugsim
