#include "ugsim/game.hpp"

#include <string>

#include "ugsim/error.hpp"

namespace ugsim {

std::string_view to_string(Strategy s) {
    switch (s) {
    case Strategy::HH: return "HH";
    case Strategy::HL: return "HL";
    case Strategy::LH: return "LH";
    case Strategy::LL: return "LL";
    }
    return "??";
}

void GameParams::validate() const {
    if (!(l >= 0.0 && h <= 1.0 && l < h))
        throw ParameterError("game parameters require 0 <= l < h <= 1 (l=" + std::to_string(l) +
                             ", h=" + std::to_string(h) + ")");
}

std::pair<double, double> one_shot_payoffs(Strategy proposer, Strategy responder,
                                           const GameParams& params) {
    const double offer = params.offer(proposer);
    if (offer >= params.threshold(responder))
        return {1.0 - offer, offer};
    return {0.0, 0.0};
}

double payoff_entry(Strategy row, Strategy col, const GameParams& params) {
    const double as_proposer = one_shot_payoffs(row, col, params).first;
    const double as_responder = one_shot_payoffs(col, row, params).second;
    return 0.5 * (as_proposer + as_responder);
}

PayoffMatrix::PayoffMatrix(const GameParams& params) : params_(params) {
    params.validate();
    for (Strategy r : kAllStrategies)
        for (Strategy c : kAllStrategies)
            entries_[index(r) * 4 + index(c)] = payoff_entry(r, c, params);
}

} // namespace ugsim
