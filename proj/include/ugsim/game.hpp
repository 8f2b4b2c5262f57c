#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>

namespace ugsim {

/// Ultimatum Game strategy. First letter is the offer level, second the
/// acceptance threshold. The numeric order matches every CSV column order.
enum class Strategy : std::uint8_t { HH = 0, HL = 1, LH = 2, LL = 3 };

inline constexpr std::array<Strategy, 4> kAllStrategies{Strategy::HH, Strategy::HL,
                                                        Strategy::LH, Strategy::LL};

constexpr std::size_t index(Strategy s) noexcept { return static_cast<std::size_t>(s); }
constexpr bool offers_high(Strategy s) noexcept { return s == Strategy::HH || s == Strategy::HL; }
constexpr bool demands_high(Strategy s) noexcept { return s == Strategy::HH || s == Strategy::LH; }

std::string_view to_string(Strategy s);

struct GameParams {
    double l = 0.1;
    double h = 0.6;

    /// Throws ParameterError unless 0 <= l < h <= 1.
    void validate() const;

    double offer(Strategy s) const noexcept { return offers_high(s) ? h : l; }
    double threshold(Strategy s) const noexcept { return demands_high(s) ? h : l; }
};

/// (proposer payoff, responder payoff) for one interaction. An offer equal to
/// the threshold is accepted.
std::pair<double, double> one_shot_payoffs(Strategy proposer, Strategy responder,
                                           const GameParams& params);

/// Row player's payoff averaged over both roles against `col`.
double payoff_entry(Strategy row, Strategy col, const GameParams& params);

/// Row-major 4x4 role-averaged payoffs, indexed [row * 4 + col].
class PayoffMatrix {
public:
    explicit PayoffMatrix(const GameParams& params);

    double operator()(Strategy row, Strategy col) const noexcept {
        return entries_[index(row) * 4 + index(col)];
    }
    const std::array<double, 16>& entries() const noexcept { return entries_; }
    const GameParams& params() const noexcept { return params_; }

private:
    GameParams params_;
    std::array<double, 16> entries_{};
};

inline PayoffMatrix payoff_matrix(const GameParams& params) { return PayoffMatrix(params); }

} // namespace ugsim
