#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "ugsim/centrality.hpp"
#include "ugsim/game.hpp"
#include "ugsim/interference.hpp"
#include "ugsim/kernels.hpp"
#include "ugsim/network.hpp"

namespace ugsim {

/// Per-replicate generator. The name is written into output metadata.
using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

using Frequencies = std::array<double, 4>;

struct PopulationState {
    std::vector<std::uint8_t> strategies; ///< Strategy values as bytes
    std::vector<double> fitness;
    std::size_t generation = 0;

    Strategy strategy(NodeId i) const noexcept { return static_cast<Strategy>(strategies[i]); }
    std::array<std::size_t, 4> counts() const noexcept;
    Frequencies frequencies() const noexcept;
};

enum class UpdateMode { Synchronous, Asynchronous };

struct SimConfig {
    std::size_t generations = 500000;
    std::size_t window = 25000;
    double noise = 0.1; ///< K
    std::uint64_t rng_seed = 0;
    UpdateMode update_mode = UpdateMode::Synchronous;
    /// Record frequencies and endowment counts for every generation instead
    /// of only the final window.
    bool record_full = false;
    ExecPolicy policy = ExecPolicy::Serial;

    void validate() const;
};

struct RunResult {
    /// Frequencies after each recorded generation, starting at
    /// `first_recorded_generation`.
    std::vector<Frequencies> freq_trajectory;
    /// Endowments made in each recorded generation (empty without interference).
    std::vector<std::uint32_t> endowment_trajectory;
    std::size_t first_recorded_generation = 0;

    Frequencies window_freq{};
    double fairness = 0.0;
    double total_cost = 0.0;
    std::uint64_t endowment_events = 0;
};

/// Each node uniform over the four strategies.
PopulationState init_population(const Network& net, Rng& rng);

void compute_fitness(PopulationState& state, const Network& net, const PayoffMatrix& matrix,
                     ExecPolicy policy = ExecPolicy::Serial);

/// Probability that an agent with fitness `focal` copies one with `model`:
/// 1 / (1 + exp((focal - model) / noise)). Saturates instead of overflowing.
double fermi_probability(double focal, double model, double noise);

/// Synchronous sweep: every node picks one uniform neighbour and copies its
/// (pre-step) strategy with the Fermi probability. Fitness must be current.
void imitation_step(PopulationState& state, const Network& net, double noise, Rng& rng);

/// Called once per generation with (generation, decision) when interference
/// is active.
using DecisionObserver = std::function<void(std::size_t, const InvestmentDecision&)>;

/// Generation loop: fitness, endowments, imitation, recording. `ranking` is
/// needed only for NI schemes. `initial` overrides the random initial state.
RunResult run_simulation(const Network& net, const GameParams& game,
                         const std::optional<InterferenceConfig>& interference,
                         const SimConfig& config, const CentralityRanking* ranking = nullptr,
                         const std::vector<std::uint8_t>* initial = nullptr,
                         const DecisionObserver& observer = {});

} // namespace ugsim
