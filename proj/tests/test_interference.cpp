#include <doctest.h>

#include <algorithm>
#include <random>

#include "graphs.hpp"
#include "ugsim/centrality.hpp"
#include "ugsim/error.hpp"
#include "ugsim/generators.hpp"
#include "ugsim/interference.hpp"

using namespace ugsim;

namespace {

constexpr std::uint8_t HH = 0, HL = 1, LH = 2, LL = 3;

bool subset(std::vector<NodeId> a, std::vector<NodeId> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

TEST_CASE("target sets") {
    CHECK(eligible(Strategy::HL, TargetSet::FairProposers));
    CHECK_FALSE(eligible(Strategy::HL, TargetSet::FairResponders));
    CHECK(eligible(Strategy::LH, TargetSet::FairResponders));
    CHECK(eligible(Strategy::HH, TargetSet::Strict));
    CHECK_FALSE(eligible(Strategy::LH, TargetSet::Strict));
    for (TargetSet t : {TargetSet::FairProposers, TargetSet::FairResponders, TargetSet::Strict})
        CHECK_FALSE(eligible(Strategy::LL, t));
}

TEST_CASE("scheme and target parsing") {
    CHECK(parse_scheme("neb") == Scheme::NEB);
    CHECK(parse_scheme("ni-eig") == Scheme::NI_EIG);
    CHECK(parse_scheme("NI-DEG") == Scheme::NI_DEG);
    CHECK(parse_scheme("POP") == Scheme::POP);
    CHECK_THROWS_AS(parse_scheme("ni"), ParameterError);
    CHECK(parse_target("hh,lh") == TargetSet::FairResponders);
    CHECK(parse_target("HH HL") == TargetSet::FairProposers);
    CHECK(parse_target("hh") == TargetSet::Strict);
    CHECK_THROWS_AS(parse_target("lh,hh"), ParameterError);
    CHECK_THROWS_AS(parse_target("hh,ll"), ParameterError);
    CHECK_THROWS_AS(parse_target("hl,lh"), ParameterError);
    CHECK_THROWS_AS(parse_target(""), ParameterError);
    CHECK(to_string(TargetSet::FairResponders) == "HH LH");
    CHECK(to_string(Scheme::NI_EIG) == "NI-EIG");
}

TEST_CASE("interference config validation") {
    CHECK_NOTHROW((InterferenceConfig{Scheme::POP, TargetSet::Strict, 0.0, 0.0}.validate()));
    CHECK_THROWS_AS((InterferenceConfig{Scheme::POP, TargetSet::Strict, 1.1, 1.0}.validate()),
                    ParameterError);
    CHECK_THROWS_AS((InterferenceConfig{Scheme::POP, TargetSet::Strict, 0.5, -1.0}.validate()),
                    ParameterError);
}

TEST_CASE("POP decisions") {
    // N = 10: 3 HH, 2 HL, rest LL.
    std::vector<std::uint8_t> s{HH, HH, HH, HL, HL, LL, LL, LL, LL, LL};
    SUBCASE("composition above threshold invests nothing") {
        auto d = decide_pop(s, TargetSet::Strict, 0.2, 1.0); // x_f = 0.3
        CHECK(d.invested_nodes.empty());
        CHECK(d.cost_delta == 0.0);
    }
    SUBCASE("boundary is inclusive") {
        std::vector<std::uint8_t> t{HH, HH, LL, LL, LL, LL, LL, LL, LL, LL}; // x_f = 0.2
        auto d = decide_pop(t, TargetSet::Strict, 0.2, 1.0);
        CHECK(d.invested_nodes == std::vector<NodeId>{0, 1});
    }
    SUBCASE("cost is count times theta") {
        auto d = decide_pop(s, TargetSet::Strict, 0.5, 2.0);
        CHECK(d.invested_nodes.size() == 3);
        CHECK(d.cost_delta == 6.0);
    }
    SUBCASE("threshold zero never invests") {
        CHECK(decide_pop(s, TargetSet::FairProposers, 0.0, 5.0).invested_nodes.empty());
        std::vector<std::uint8_t> none(10, LL);
        CHECK(decide_pop(none, TargetSet::FairProposers, 0.0, 5.0).invested_nodes.empty());
    }
}

TEST_CASE("NEB decisions") {
    SUBCASE("fully matching neighbourhood above threshold") {
        auto d = decide_neb(std::vector<std::uint8_t>{HH, HH, HH}, testing::complete(3),
                            TargetSet::Strict, 0.9, 1.0);
        CHECK(d.invested_nodes.empty());
    }
    SUBCASE("no matching neighbours is always eligible") {
        std::vector<std::uint8_t> s{LH, LL, LL, LL, LL};
        auto d = decide_neb(s, testing::star(5), TargetSet::FairResponders, 0.0, 3.0);
        CHECK(d.invested_nodes == std::vector<NodeId>{0});
        CHECK(d.cost_delta == 3.0);
    }
    SUBCASE("star with centre and two leaves HH") {
        std::vector<std::uint8_t> s{HH, HH, HH, LL, LL};
        auto d = decide_neb(s, testing::star(5), TargetSet::Strict, 0.5, 1.0);
        CHECK(d.invested_nodes == std::vector<NodeId>{0});
    }
    SUBCASE("serial and parallel policies agree") {
        const Network net = generate_ba({NetworkModel::BA, 2000, 2, 0, 2});
        std::mt19937_64 rng(1);
        std::uniform_int_distribution<int> pick(0, 3);
        std::vector<std::uint8_t> s(net.node_count());
        for (auto& x : s)
            x = static_cast<std::uint8_t>(pick(rng));
        auto a = decide_neb(s, net, TargetSet::FairProposers, 0.6, 10.0, ExecPolicy::Serial);
        auto b = decide_neb(s, net, TargetSet::FairProposers, 0.6, 10.0, ExecPolicy::Parallel);
        CHECK(a.invested_nodes == b.invested_nodes);
        CHECK(a.cost_delta == b.cost_delta);
    }
}

TEST_CASE("NI decisions") {
    SUBCASE("candidate counts") {
        CHECK(influence_candidate_count(0.001, 1000) == 1);
        CHECK(influence_candidate_count(0.007, 2000) == 14);
        CHECK(influence_candidate_count(0.0005, 1000) == 1);
        CHECK(influence_candidate_count(1.0, 37) == 37);
        CHECK(influence_candidate_count(0.0, 1000) == 0);
    }
    SUBCASE("single most influential node") {
        const Network net = generate_ba({NetworkModel::BA, 1000, 2, 0, 6});
        const auto ranking = degree_centrality(net);
        std::vector<std::uint8_t> all_hh(1000, HH);
        auto d = decide_ni(all_hh, ranking, TargetSet::Strict, 0.001, 1.0);
        REQUIRE(d.invested_nodes.size() == 1);
        const NodeId hub = d.invested_nodes[0];
        for (NodeId i = 0; i < net.node_count(); ++i)
            CHECK(net.degree(i) <= net.degree(hub));
    }
    SUBCASE("everyone is a candidate at threshold one") {
        const Network net = testing::cycle(8);
        const auto ranking = degree_centrality(net);
        std::vector<std::uint8_t> s{HH, HL, LH, LL, HH, HL, LH, LL};
        auto d = decide_ni(s, ranking, TargetSet::FairProposers, 1.0, 1.0);
        std::sort(d.invested_nodes.begin(), d.invested_nodes.end());
        CHECK(d.invested_nodes == std::vector<NodeId>{0, 1, 4, 5});
    }
    SUBCASE("path of ten, two candidates") {
        const Network net = testing::path(10);
        const auto ranking = degree_centrality(net);
        // Interior nodes tie on degree; the two highest indices rank on top.
        CHECK(ranking.top(2) == std::vector<NodeId>{8, 7});
        std::vector<std::uint8_t> s(10, HH);
        s[8] = LL;
        auto d = decide_ni(s, ranking, TargetSet::Strict, 0.2, 1.0);
        CHECK(d.invested_nodes == std::vector<NodeId>{7});
    }
    SUBCASE("threshold zero selects nobody") {
        const auto ranking = degree_centrality(testing::star(5));
        std::vector<std::uint8_t> s(5, HH);
        CHECK(decide_ni(s, ranking, TargetSet::Strict, 0.0, 1.0).invested_nodes.empty());
    }
}

TEST_CASE("apply adds theta and counts endowments") {
    std::vector<double> fitness{1.0, 2.0, 3.0, 4.0};
    InvestmentDecision empty;
    CHECK(apply(empty, 56.23, fitness) == 0);
    CHECK(fitness == std::vector<double>{1.0, 2.0, 3.0, 4.0});
    InvestmentDecision d{{0, 2, 3}, 3 * 56.23};
    CHECK(apply(d, 56.23, fitness) == 3);
    CHECK(fitness[0] == 1.0 + 56.23);
    CHECK(fitness[1] == 2.0);
    CHECK(d.cost_delta == doctest::Approx(168.69));
}

TEST_CASE("scheme-wide properties on random states") {
    const Network net = generate_dms({NetworkModel::DMS, 500, 2, 0, 9});
    const auto deg = degree_centrality(net);
    const auto eig = eigenvector_centrality(net).ranking;
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::uint8_t> s(net.node_count());
        for (auto& x : s)
            x = static_cast<std::uint8_t>(pick(rng));
        for (TargetSet t : {TargetSet::FairProposers, TargetSet::FairResponders, TargetSet::Strict}) {
            std::vector<NodeId> prev_pop, prev_neb, prev_deg, prev_eig;
            for (double th = 0.0; th <= 1.0 + 1e-12; th += 0.1) {
                auto pop = decide_pop(s, t, th, 1.0).invested_nodes;
                auto neb = decide_neb(s, net, t, th, 1.0).invested_nodes;
                auto nd = decide_ni(s, deg, t, th, 1.0).invested_nodes;
                auto ne = decide_ni(s, eig, t, th, 1.0).invested_nodes;
                for (const auto* set : {&pop, &neb, &nd, &ne})
                    for (NodeId i : *set)
                        CHECK(eligible(static_cast<Strategy>(s[i]), t));
                CHECK(subset(prev_pop, pop));
                CHECK(subset(prev_neb, neb));
                CHECK(subset(prev_deg, nd));
                CHECK(subset(prev_eig, ne));
                prev_pop = pop;
                prev_neb = neb;
                prev_deg = nd;
                prev_eig = ne;
            }
        }
    }
}

TEST_CASE("Investor keeps a static candidate list") {
    const Network net = testing::star(6);
    const auto ranking = degree_centrality(net);
    Investor inv({Scheme::NI_DEG, TargetSet::Strict, 0.2, 2.0}, net, &ranking);
    CHECK(inv.candidates().size() == 2);
    CHECK(inv.candidates()[0] == 0);
    std::vector<std::uint8_t> s(6, HH);
    const auto& d1 = inv.decide(s);
    CHECK(d1.invested_nodes.size() == 2);
    s[0] = LL;
    const auto& d2 = inv.decide(s);
    CHECK(d2.invested_nodes.size() == 1);
    CHECK(d2.cost_delta == 2.0);
    CHECK_THROWS_AS(Investor({Scheme::NI_EIG, TargetSet::Strict, 0.2, 2.0}, net, nullptr),
                    ParameterError);
}
