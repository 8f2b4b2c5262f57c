#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ugsim/centrality.hpp"
#include "ugsim/game.hpp"
#include "ugsim/kernels.hpp"
#include "ugsim/network.hpp"

namespace ugsim {

enum class Scheme { POP, NEB, NI_DEG, NI_EIG };

/// Strategies an investor regards as deserving an endowment.
enum class TargetSet {
    FairProposers, ///< HH, HL
    FairResponders, ///< HH, LH
    Strict,         ///< HH
};

/// "POP", "NEB", "NI-DEG", "NI-EIG" (CSV form).
std::string_view to_string(Scheme scheme);
/// "HH HL", "HH LH", "HH" (CSV form).
std::string_view to_string(TargetSet target);

/// Accepts lowercase CLI names (pop, neb, ni-deg, ni-eig) and CSV names.
Scheme parse_scheme(std::string_view text);
/// Accepts "hh", "hh,hl", "hh,lh" (any case; comma, '+' or space separated)
/// and the CSV forms. Any other combination is a ParameterError.
TargetSet parse_target(std::string_view text);

kernels::StrategyMask target_mask(TargetSet target);
bool eligible(Strategy strategy, TargetSet target);

struct InterferenceConfig {
    Scheme scheme = Scheme::NEB;
    TargetSet target = TargetSet::FairResponders;
    double threshold = 0.7; ///< p_f, n_f or i_f depending on scheme
    double theta = 56.23;

    /// threshold in [0,1], theta >= 0. A zero theta is legal here (it is the
    /// no-op endowment); user-facing entry points reject it.
    void validate() const;
};

struct InvestmentDecision {
    std::vector<NodeId> invested_nodes;
    double cost_delta = 0.0;
};

// Stand-alone decision rules. `strategies` holds Strategy values as bytes.

InvestmentDecision decide_pop(std::span<const std::uint8_t> strategies, TargetSet target,
                              double pop_threshold, double theta);

InvestmentDecision decide_neb(std::span<const std::uint8_t> strategies, const Network& net,
                              TargetSet target, double neb_threshold, double theta,
                              ExecPolicy policy = ExecPolicy::Serial);

/// Number of candidates selected by an influence threshold: ceil(i_f * N),
/// with a 1e-9 guard so 0.007 * 2000 gives 14 rather than 15.
std::size_t influence_candidate_count(double influence_threshold, std::size_t node_count);

InvestmentDecision decide_ni(std::span<const std::uint8_t> strategies,
                             const CentralityRanking& ranking, TargetSet target,
                             double influence_threshold, double theta);

/// Adds theta to each invested node's fitness. Returns the number of
/// endowments made.
std::size_t apply(const InvestmentDecision& decision, double theta, std::span<double> fitness);

/// Per-run investor: holds the static NI candidate list and a reusable
/// decision buffer so the generation loop does not allocate.
class Investor {
public:
    /// `ranking` is required for NI schemes and ignored otherwise.
    Investor(const InterferenceConfig& config, const Network& net,
             const CentralityRanking* ranking, ExecPolicy policy = ExecPolicy::Serial);

    const InvestmentDecision& decide(std::span<const std::uint8_t> strategies);

    const InterferenceConfig& config() const noexcept { return config_; }
    std::span<const NodeId> candidates() const noexcept { return candidates_; }

private:
    InterferenceConfig config_;
    const Network* net_;
    ExecPolicy policy_;
    kernels::StrategyMask mask_;
    std::vector<NodeId> candidates_;
    std::vector<std::uint8_t> flags_;
    InvestmentDecision decision_;
};

} // namespace ugsim
