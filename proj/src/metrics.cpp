#include "ugsim/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "ugsim/error.hpp"

namespace ugsim {

Frequencies window_average(std::span<const Frequencies> trajectory, std::size_t window) {
    if (window == 0 || trajectory.size() < window)
        throw ParameterError("trajectory shorter than the averaging window");
    Frequencies sum{};
    for (const auto& f : trajectory.subspan(trajectory.size() - window))
        for (std::size_t k = 0; k < 4; ++k)
            sum[k] += f[k];
    for (auto& v : sum)
        v /= static_cast<double>(window);
    return sum;
}

MeanSe mean_and_se(std::span<const double> input) {
    if (input.empty())
        throw ParameterError("mean of an empty sample");
    // Summing in sorted order makes the result independent of replicate order.
    std::vector<double> values(input.begin(), input.end());
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values)
        sum += v;
    MeanSe out;
    if (values.front() == values.back()) {
        // Constant sample: exact mean, zero spread (no rounding residue).
        out.mean = values.front();
        return out;
    }
    out.mean = sum / n;
    {
        double ss = 0.0;
        for (double v : values)
            ss += (v - out.mean) * (v - out.mean);
        out.se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return out;
}

Aggregate aggregate(std::span<const RunResult> results) {
    if (results.empty())
        throw ParameterError("cannot aggregate zero runs");
    std::vector<double> fair, cost;
    std::array<std::vector<double>, 4> freqs;
    for (const auto& r : results) {
        fair.push_back(r.fairness);
        cost.push_back(r.total_cost);
        for (std::size_t k = 0; k < 4; ++k)
            freqs[k].push_back(r.window_freq[k]);
    }
    Aggregate agg;
    for (std::size_t k = 0; k < 4; ++k)
        agg.mean_freqs[k] = mean_and_se(freqs[k]).mean;
    const auto f = mean_and_se(fair);
    const auto c = mean_and_se(cost);
    agg.mean_fairness = f.mean;
    agg.se_fairness = f.se;
    agg.mean_cost = c.mean;
    agg.se_cost = c.se;
    agg.replicate_count = results.size();
    return agg;
}

} // namespace ugsim
