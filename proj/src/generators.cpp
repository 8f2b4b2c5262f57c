#include "ugsim/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "ugsim/error.hpp"

namespace ugsim {

std::string_view to_string(NetworkModel model) {
    return model == NetworkModel::BA ? "ba" : "dms";
}

NetworkModel parse_network_model(std::string_view text) {
    if (text == "ba" || text == "BA")
        return NetworkModel::BA;
    if (text == "dms" || text == "DMS")
        return NetworkModel::DMS;
    throw ParameterError("unknown network model '" + std::string(text) + "' (expected ba or dms)");
}

namespace {

using Edge = std::pair<NodeId, NodeId>;

} // namespace

Network generate_ba(const GenParams& params) {
    const std::size_t m = params.m;
    const std::size_t m0 = params.m0 == 0 ? m + 1 : params.m0;
    if (m < 1)
        throw ParameterError("BA requires m >= 1");
    if (m0 < m)
        throw ParameterError("BA requires m0 >= m (m0=" + std::to_string(m0) +
                             ", m=" + std::to_string(m) + ")");
    if (params.n < m0)
        throw ParameterError("BA requires n >= m0 (n=" + std::to_string(params.n) +
                             ", m0=" + std::to_string(m0) + ")");

    std::mt19937_64 rng(params.seed);
    std::vector<Edge> edges;
    edges.reserve(m0 * (m0 - 1) / 2 + m * (params.n - m0));

    // Every endpoint occurrence; a uniform draw from it is degree-proportional.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * edges.capacity());

    for (NodeId i = 0; i < m0; ++i)
        for (NodeId j = i + 1; j < m0; ++j) {
            edges.emplace_back(i, j);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }

    std::vector<NodeId> targets;
    targets.reserve(m);
    for (NodeId node = static_cast<NodeId>(m0); node < params.n; ++node) {
        targets.clear();
        if (endpoints.empty()) {
            // m0 == 1: the single core node has no degree yet.
            targets.push_back(0);
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
            while (targets.size() < m) {
                NodeId t = endpoints[pick(rng)];
                if (std::find(targets.begin(), targets.end(), t) == targets.end())
                    targets.push_back(t);
            }
        }
        for (NodeId t : targets) {
            edges.emplace_back(t, node);
            endpoints.push_back(t);
            endpoints.push_back(node);
        }
    }
    return Network::from_edges(params.n, edges);
}

Network generate_dms(const GenParams& params) {
    // m counts the links a new node brings (so z = 2m as for BA); they come
    // in pairs, one pair per chosen edge.
    if (params.m < 2 || params.m % 2 != 0)
        throw ParameterError("DMS requires an even m >= 2 (m=" + std::to_string(params.m) + ")");
    const std::size_t m = params.m / 2;
    if (params.n < 3)
        throw ParameterError("DMS requires n >= 3 (triangle core)");

    // Redraws allowed per edge slot before accepting an overlapping edge.
    constexpr int kMaxRetries = 32;

    std::mt19937_64 rng(params.seed);
    std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
    edges.reserve(3 + params.m * params.n);

    std::vector<std::size_t> chosen_edges;
    std::vector<NodeId> chosen_nodes;
    for (NodeId node = 3; node < params.n; ++node) {
        chosen_edges.clear();
        chosen_nodes.clear();
        const std::size_t available = edges.size();
        std::uniform_int_distribution<std::size_t> pick(0, available - 1);

        auto fresh = [&](NodeId v) {
            return std::find(chosen_nodes.begin(), chosen_nodes.end(), v) == chosen_nodes.end();
        };

        for (std::size_t slot = 0; slot < m && chosen_edges.size() < available; ++slot) {
            std::size_t best = available;
            int best_gain = -1;
            for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
                std::size_t e = pick(rng);
                if (std::find(chosen_edges.begin(), chosen_edges.end(), e) != chosen_edges.end())
                    continue;
                int gain = int(fresh(edges[e].first)) + int(fresh(edges[e].second));
                if (gain > best_gain) {
                    best = e;
                    best_gain = gain;
                }
                if (gain == 2)
                    break;
            }
            if (best == available) {
                // Only repeats were drawn; take the first unchosen edge.
                for (std::size_t e = 0; e < available; ++e)
                    if (std::find(chosen_edges.begin(), chosen_edges.end(), e) ==
                        chosen_edges.end()) {
                        best = e;
                        break;
                    }
            }
            chosen_edges.push_back(best);
            for (NodeId v : {edges[best].first, edges[best].second})
                if (fresh(v))
                    chosen_nodes.push_back(v);
        }
        for (NodeId v : chosen_nodes)
            edges.emplace_back(v, node);
    }
    return Network::from_edges(params.n, edges);
}

Network generate(const GenParams& params) {
    return params.model == NetworkModel::BA ? generate_ba(params) : generate_dms(params);
}

} // namespace ugsim
