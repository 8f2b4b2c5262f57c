#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ugsim/error.hpp"
#include "ugsim/game.hpp"

using namespace ugsim;

TEST_CASE("strategy encoding") {
    CHECK(offers_high(Strategy::HH));
    CHECK(offers_high(Strategy::HL));
    CHECK_FALSE(offers_high(Strategy::LH));
    CHECK(demands_high(Strategy::LH));
    CHECK_FALSE(demands_high(Strategy::HL));
    const GameParams p{0.1, 0.6};
    CHECK(p.offer(Strategy::HL) == 0.6);
    CHECK(p.threshold(Strategy::HL) == 0.1);
    CHECK(to_string(Strategy::LH) == "LH");
}

TEST_CASE("game parameter validation") {
    CHECK_NOTHROW(GameParams{0.0, 1.0}.validate());
    CHECK_THROWS_AS((GameParams{0.5, 0.5}.validate()), ParameterError);
    CHECK_THROWS_AS((GameParams{0.6, 0.1}.validate()), ParameterError);
    CHECK_THROWS_AS((GameParams{-0.1, 0.5}.validate()), ParameterError);
    CHECK_THROWS_AS((GameParams{0.1, 1.5}.validate()), ParameterError);
}

TEST_CASE("one-shot payoffs") {
    const GameParams p{0.1, 0.6};
    auto a = one_shot_payoffs(Strategy::HH, Strategy::LL, p);
    CHECK(a.first == doctest::Approx(0.4));
    CHECK(a.second == 0.6);
    auto b = one_shot_payoffs(Strategy::LH, Strategy::HH, p);
    CHECK(b.first == 0.0);
    CHECK(b.second == 0.0);
    auto c = one_shot_payoffs(Strategy::LL, Strategy::HL, p);
    CHECK(c.first == 0.9);
    CHECK(c.second == 0.1);
}

TEST_CASE("payoff entries") {
    const GameParams p{0.1, 0.6};
    CHECK(payoff_entry(Strategy::LH, Strategy::HL, p) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(payoff_entry(Strategy::HH, Strategy::LH, p) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(payoff_entry(Strategy::LL, Strategy::LH, p) == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(payoff_entry(Strategy::LH, Strategy::LH, p) == 0.0);
    CHECK(payoff_entry(Strategy::LL, Strategy::LL, p) == 0.5);
    CHECK(payoff_matrix({0.0, 1.0})(Strategy::HH, Strategy::HH) == 0.5);
    for (Strategy r : {Strategy::HH, Strategy::HL})
        for (Strategy c : {Strategy::HH, Strategy::HL})
            CHECK(payoff_entry(r, c, p) == 0.5);
}

TEST_CASE("matrix equals role enumeration and closed forms for random parameters") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int draw = 0; draw < 20; ++draw) {
        double l = u(rng), h = u(rng);
        if (l > h)
            std::swap(l, h);
        if (l == h)
            continue;
        const GameParams p{l, h};
        const PayoffMatrix m(p);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                const auto rs = static_cast<Strategy>(r), cs = static_cast<Strategy>(c);
                CHECK(std::abs(m(rs, cs) - oracle::role_average(r, c, l, h)) <= 1e-12);
                CHECK(m(rs, cs) >= 0.0);
                CHECK(m(rs, cs) <= 1.0);
                // Surplus conservation: rejected offers destroy surplus.
                const double both = m(rs, cs) + m(cs, rs);
                const bool accepted = p.offer(rs) >= p.threshold(cs) &&
                                      p.offer(cs) >= p.threshold(rs);
                if (accepted)
                    CHECK(both == doctest::Approx(1.0).epsilon(1e-12));
                else
                    CHECK(both < 1.0);
            }
        }
        // Closed forms of the row-player table.
        CHECK(m(Strategy::HL, Strategy::LH) == doctest::Approx((1 - h + l) / 2).epsilon(1e-12));
        CHECK(m(Strategy::LH, Strategy::HL) == doctest::Approx((1 + h - l) / 2).epsilon(1e-12));
        CHECK(m(Strategy::HH, Strategy::LH) == doctest::Approx((1 - h) / 2).epsilon(1e-12));
        CHECK(m(Strategy::LH, Strategy::HH) == doctest::Approx(h / 2).epsilon(1e-12));
        CHECK(m(Strategy::LL, Strategy::HH) == doctest::Approx(h / 2).epsilon(1e-12));
        CHECK(m(Strategy::HL, Strategy::LL) == doctest::Approx((1 - h + l) / 2).epsilon(1e-12));
        CHECK(m(Strategy::LL, Strategy::LH) == doctest::Approx(l / 2).epsilon(1e-12));
        CHECK(m(Strategy::LL, Strategy::LL) == 0.5);
    }
}
