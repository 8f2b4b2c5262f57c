#include "ugsim/interference.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "ugsim/error.hpp"

namespace ugsim {

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
    case Scheme::POP: return "POP";
    case Scheme::NEB: return "NEB";
    case Scheme::NI_DEG: return "NI-DEG";
    case Scheme::NI_EIG: return "NI-EIG";
    }
    return "?";
}

std::string_view to_string(TargetSet target) {
    switch (target) {
    case TargetSet::FairProposers: return "HH HL";
    case TargetSet::FairResponders: return "HH LH";
    case TargetSet::Strict: return "HH";
    }
    return "?";
}

namespace {

std::string lower(std::string_view text) {
    std::string out(text);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

Scheme parse_scheme(std::string_view text) {
    const std::string s = lower(text);
    if (s == "pop")
        return Scheme::POP;
    if (s == "neb")
        return Scheme::NEB;
    if (s == "ni-deg" || s == "ni_deg")
        return Scheme::NI_DEG;
    if (s == "ni-eig" || s == "ni_eig")
        return Scheme::NI_EIG;
    throw ParameterError("unknown scheme '" + std::string(text) +
                         "' (expected pop, neb, ni-deg or ni-eig)");
}

TargetSet parse_target(std::string_view text) {
    std::string s = lower(text);
    for (char& c : s)
        if (c == '+' || c == ' ')
            c = ',';
    if (s == "hh")
        return TargetSet::Strict;
    if (s == "hh,hl")
        return TargetSet::FairProposers;
    if (s == "hh,lh")
        return TargetSet::FairResponders;
    throw ParameterError("unsupported target '" + std::string(text) +
                         "' (expected hh, hh,hl or hh,lh)");
}

kernels::StrategyMask target_mask(TargetSet target) {
    constexpr auto bit = [](Strategy s) { return static_cast<kernels::StrategyMask>(1u << index(s)); };
    switch (target) {
    case TargetSet::FairProposers: return bit(Strategy::HH) | bit(Strategy::HL);
    case TargetSet::FairResponders: return bit(Strategy::HH) | bit(Strategy::LH);
    case TargetSet::Strict: return bit(Strategy::HH);
    }
    return 0;
}

bool eligible(Strategy strategy, TargetSet target) {
    return (target_mask(target) >> index(strategy)) & 1u;
}

void InterferenceConfig::validate() const {
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw ParameterError("interference threshold must lie in [0, 1]");
    if (!(theta >= 0.0) || !std::isfinite(theta))
        throw ParameterError("endowment theta must be finite and non-negative");
}

namespace {

void collect_pop(std::span<const std::uint8_t> strategies, kernels::StrategyMask mask,
                 double threshold, std::vector<NodeId>& out) {
    out.clear();
    std::size_t matching = 0;
    for (std::uint8_t s : strategies)
        matching += (mask >> s) & 1u;
    const double share = strategies.empty()
                             ? 0.0
                             : static_cast<double>(matching) / static_cast<double>(strategies.size());
    if (share > threshold)
        return;
    for (NodeId i = 0; i < strategies.size(); ++i)
        if ((mask >> strategies[i]) & 1u)
            out.push_back(i);
}

void collect_flags(std::span<const std::uint8_t> flags, std::vector<NodeId>& out) {
    out.clear();
    for (NodeId i = 0; i < flags.size(); ++i)
        if (flags[i])
            out.push_back(i);
}

void collect_candidates(std::span<const std::uint8_t> strategies, std::span<const NodeId> candidates,
                        kernels::StrategyMask mask, std::vector<NodeId>& out) {
    out.clear();
    for (NodeId i : candidates)
        if ((mask >> strategies[i]) & 1u)
            out.push_back(i);
    std::sort(out.begin(), out.end());
}

} // namespace

InvestmentDecision decide_pop(std::span<const std::uint8_t> strategies, TargetSet target,
                              double pop_threshold, double theta) {
    InvestmentDecision d;
    collect_pop(strategies, target_mask(target), pop_threshold, d.invested_nodes);
    d.cost_delta = theta * static_cast<double>(d.invested_nodes.size());
    return d;
}

InvestmentDecision decide_neb(std::span<const std::uint8_t> strategies, const Network& net,
                              TargetSet target, double neb_threshold, double theta,
                              ExecPolicy policy) {
    std::vector<std::uint8_t> flags(net.node_count());
    kernels::neighbourhood_eligibility(policy, net, strategies, target_mask(target), neb_threshold,
                                       flags);
    InvestmentDecision d;
    collect_flags(flags, d.invested_nodes);
    d.cost_delta = theta * static_cast<double>(d.invested_nodes.size());
    return d;
}

std::size_t influence_candidate_count(double influence_threshold, std::size_t node_count) {
    const double raw = influence_threshold * static_cast<double>(node_count);
    const double c = std::ceil(raw - 1e-9);
    return std::min(node_count, static_cast<std::size_t>(std::max(0.0, c)));
}

InvestmentDecision decide_ni(std::span<const std::uint8_t> strategies,
                             const CentralityRanking& ranking, TargetSet target,
                             double influence_threshold, double theta) {
    const auto candidates =
        ranking.top(influence_candidate_count(influence_threshold, strategies.size()));
    InvestmentDecision d;
    collect_candidates(strategies, candidates, target_mask(target), d.invested_nodes);
    d.cost_delta = theta * static_cast<double>(d.invested_nodes.size());
    return d;
}

std::size_t apply(const InvestmentDecision& decision, double theta, std::span<double> fitness) {
    for (NodeId i : decision.invested_nodes)
        fitness[i] += theta;
    return decision.invested_nodes.size();
}

Investor::Investor(const InterferenceConfig& config, const Network& net,
                   const CentralityRanking* ranking, ExecPolicy policy)
    : config_(config), net_(&net), policy_(policy), mask_(target_mask(config.target)) {
    config_.validate();
    if (config_.scheme == Scheme::NI_DEG || config_.scheme == Scheme::NI_EIG) {
        if (ranking == nullptr || ranking->order.size() != net.node_count())
            throw ParameterError("influence-based interference needs a centrality ranking");
        candidates_ = ranking->top(influence_candidate_count(config_.threshold, net.node_count()));
    }
    if (config_.scheme == Scheme::NEB)
        flags_.resize(net.node_count());
    decision_.invested_nodes.reserve(net.node_count());
}

const InvestmentDecision& Investor::decide(std::span<const std::uint8_t> strategies) {
    switch (config_.scheme) {
    case Scheme::POP:
        collect_pop(strategies, mask_, config_.threshold, decision_.invested_nodes);
        break;
    case Scheme::NEB:
        kernels::neighbourhood_eligibility(policy_, *net_, strategies, mask_, config_.threshold,
                                           flags_);
        collect_flags(flags_, decision_.invested_nodes);
        break;
    case Scheme::NI_DEG:
    case Scheme::NI_EIG:
        collect_candidates(strategies, candidates_, mask_, decision_.invested_nodes);
        break;
    }
    decision_.cost_delta = config_.theta * static_cast<double>(decision_.invested_nodes.size());
    return decision_;
}

} // namespace ugsim
