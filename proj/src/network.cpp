#include "ugsim/network.hpp"

#include <algorithm>
#include <string>

#include "ugsim/error.hpp"

namespace ugsim {

Network Network::from_edges(std::size_t node_count,
                            std::span<const std::pair<NodeId, NodeId>> edges) {
    std::vector<std::size_t> degree(node_count, 0);
    for (auto [a, b] : edges) {
        if (a >= node_count || b >= node_count)
            throw ParameterError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                 ") out of range for " + std::to_string(node_count) + " nodes");
        if (a == b)
            throw ParameterError("self-loop at node " + std::to_string(a));
        ++degree[a];
        ++degree[b];
    }

    Network net;
    net.offsets_.assign(node_count + 1, 0);
    for (std::size_t i = 0; i < node_count; ++i)
        net.offsets_[i + 1] = net.offsets_[i] + degree[i];
    net.neighbours_.resize(net.offsets_.back());

    std::vector<std::size_t> cursor(net.offsets_.begin(), net.offsets_.end() - 1);
    for (auto [a, b] : edges) {
        net.neighbours_[cursor[a]++] = b;
        net.neighbours_[cursor[b]++] = a;
    }
    for (std::size_t i = 0; i < node_count; ++i) {
        auto first = net.neighbours_.begin() + static_cast<std::ptrdiff_t>(net.offsets_[i]);
        auto last = net.neighbours_.begin() + static_cast<std::ptrdiff_t>(net.offsets_[i + 1]);
        std::sort(first, last);
        if (auto dup = std::adjacent_find(first, last); dup != last)
            throw ParameterError("duplicate edge (" + std::to_string(i) + ", " +
                                 std::to_string(*dup) + ")");
    }
    return net;
}

bool Network::has_edge(NodeId i, NodeId j) const noexcept {
    auto nb = neighbours(i);
    return std::binary_search(nb.begin(), nb.end(), j);
}

bool Network::is_connected() const {
    const std::size_t n = node_count();
    if (n == 0)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (NodeId v : neighbours(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

std::vector<std::pair<NodeId, NodeId>> Network::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (NodeId i = 0; i < node_count(); ++i)
        for (NodeId j : neighbours(i))
            if (i < j)
                out.emplace_back(i, j);
    return out;
}

} // namespace ugsim
