#include "ugsim/dynamics.hpp"

#include <cmath>
#include <string>

#include "ugsim/error.hpp"

namespace ugsim {

std::array<std::size_t, 4> PopulationState::counts() const noexcept {
    std::array<std::size_t, 4> c{};
    for (std::uint8_t s : strategies)
        ++c[s];
    return c;
}

Frequencies PopulationState::frequencies() const noexcept {
    const auto c = counts();
    const double n = static_cast<double>(strategies.size());
    return {c[0] / n, c[1] / n, c[2] / n, c[3] / n};
}

void SimConfig::validate() const {
    if (generations == 0)
        throw ParameterError("generations must be positive");
    if (window == 0 || window > generations)
        throw ParameterError("window must be in [1, generations] (window=" +
                             std::to_string(window) + ", generations=" +
                             std::to_string(generations) + ")");
    if (!(noise > 0.0) || !std::isfinite(noise))
        throw ParameterError("noise K must be positive");
}

PopulationState init_population(const Network& net, Rng& rng) {
    PopulationState state;
    state.strategies.resize(net.node_count());
    state.fitness.assign(net.node_count(), 0.0);
    std::uniform_int_distribution<int> pick(0, 3);
    for (auto& s : state.strategies)
        s = static_cast<std::uint8_t>(pick(rng));
    return state;
}

void compute_fitness(PopulationState& state, const Network& net, const PayoffMatrix& matrix,
                     ExecPolicy policy) {
    state.fitness.resize(net.node_count());
    kernels::compute_fitness(policy, net, state.strategies, matrix.entries(), state.fitness);
}

double fermi_probability(double focal, double model, double noise) {
    const double x = (focal - model) / noise;
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

namespace {

class Imitator {
public:
    Imitator(std::size_t n, double noise) : noise_(noise), next_(n) {}

    void synchronous(PopulationState& state, const Network& net, Rng& rng) {
        const auto& s = state.strategies;
        const auto& f = state.fitness;
        next_ = s;
        for (NodeId i = 0; i < s.size(); ++i) {
            auto nb = net.neighbours(i);
            if (nb.empty())
                continue;
            const NodeId j = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
            if (s[j] == s[i])
                continue;
            if (unit_(rng) < fermi_probability(f[i], f[j], noise_))
                next_[i] = s[j];
        }
        state.strategies.swap(next_);
    }

    // N random single-agent updates against current strategies. Endowments
    // decided at the start of the generation stay attached to their nodes.
    void asynchronous(PopulationState& state, const Network& net, const PayoffMatrix& matrix,
                      std::span<const std::uint8_t> invested, double theta, Rng& rng) {
        auto& s = state.strategies;
        const std::size_t n = s.size();
        std::uniform_int_distribution<std::size_t> pick_node(0, n - 1);
        auto local = [&](NodeId i) {
            double total = 0.0;
            for (NodeId j : net.neighbours(i))
                total += matrix(static_cast<Strategy>(s[i]), static_cast<Strategy>(s[j]));
            if (!invested.empty() && invested[i])
                total += theta;
            return total;
        };
        for (std::size_t step = 0; step < n; ++step) {
            const auto i = static_cast<NodeId>(pick_node(rng));
            auto nb = net.neighbours(i);
            if (nb.empty())
                continue;
            const NodeId j = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
            if (s[j] == s[i])
                continue;
            if (unit_(rng) < fermi_probability(local(i), local(j), noise_))
                s[i] = s[j];
        }
    }

private:
    double noise_;
    std::vector<std::uint8_t> next_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

} // namespace

void imitation_step(PopulationState& state, const Network& net, double noise, Rng& rng) {
    Imitator(state.strategies.size(), noise).synchronous(state, net, rng);
    ++state.generation;
}

RunResult run_simulation(const Network& net, const GameParams& game,
                         const std::optional<InterferenceConfig>& interference,
                         const SimConfig& config, const CentralityRanking* ranking,
                         const std::vector<std::uint8_t>* initial,
                         const DecisionObserver& observer) {
    config.validate();
    const std::size_t n = net.node_count();
    if (n == 0)
        throw ParameterError("cannot simulate on an empty network");
    const PayoffMatrix matrix(game);

    Rng rng(config.rng_seed);
    PopulationState state;
    if (initial != nullptr) {
        if (initial->size() != n)
            throw ParameterError("initial state size does not match the network");
        for (std::uint8_t s : *initial)
            if (s > 3)
                throw ParameterError("initial state holds an invalid strategy code");
        state.strategies = *initial;
        state.fitness.assign(n, 0.0);
    } else {
        state = init_population(net, rng);
    }

    std::optional<Investor> investor;
    if (interference)
        investor.emplace(*interference, net, ranking, config.policy);
    const double theta = interference ? interference->theta : 0.0;

    Imitator imitator(n, config.noise);
    std::vector<std::uint8_t> invested_flags;
    if (investor && config.update_mode == UpdateMode::Asynchronous)
        invested_flags.resize(n);

    const std::size_t window_start = config.generations - config.window;
    const std::size_t record_from = config.record_full ? 0 : window_start;

    RunResult result;
    result.first_recorded_generation = record_from;
    result.freq_trajectory.reserve(config.generations - record_from);
    if (investor)
        result.endowment_trajectory.reserve(config.generations - record_from);

    std::array<std::uint64_t, 4> window_counts{};
    std::uint64_t events = 0;

    for (std::size_t g = 0; g < config.generations; ++g) {
        compute_fitness(state, net, matrix, config.policy);

        std::size_t invested_now = 0;
        if (investor) {
            const InvestmentDecision& d = investor->decide(state.strategies);
            invested_now = apply(d, theta, state.fitness);
            events += invested_now;
            if (observer)
                observer(g, d);
            if (!invested_flags.empty()) {
                std::fill(invested_flags.begin(), invested_flags.end(), 0);
                for (NodeId i : d.invested_nodes)
                    invested_flags[i] = 1;
            }
        }

        if (config.update_mode == UpdateMode::Synchronous)
            imitator.synchronous(state, net, rng);
        else
            imitator.asynchronous(state, net, matrix, invested_flags, theta, rng);
        state.generation = g + 1;

        if (g >= record_from) {
            const auto c = state.counts();
            const double nd = static_cast<double>(n);
            result.freq_trajectory.push_back({c[0] / nd, c[1] / nd, c[2] / nd, c[3] / nd});
            if (investor)
                result.endowment_trajectory.push_back(static_cast<std::uint32_t>(invested_now));
            if (g >= window_start)
                for (std::size_t k = 0; k < 4; ++k)
                    window_counts[k] += c[k];
        }
    }

    const double denom = static_cast<double>(config.window) * static_cast<double>(n);
    for (std::size_t k = 0; k < 4; ++k)
        result.window_freq[k] = static_cast<double>(window_counts[k]) / denom;
    result.fairness = result.window_freq[0] + result.window_freq[1];
    result.endowment_events = events;
    result.total_cost = theta * static_cast<double>(events);
    return result;
}

} // namespace ugsim
