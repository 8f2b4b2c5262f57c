#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ugsim {

using NodeId = std::uint32_t;

/// Immutable undirected simple graph in compressed sparse row form.
/// Neighbour lists are sorted ascending, with no self-loops or duplicates.
class Network {
public:
    Network() = default;

    /// Builds from an undirected edge list. Each edge may be given in either
    /// orientation; throws ParameterError on self-loops, duplicates or
    /// out-of-range endpoints.
    static Network from_edges(std::size_t node_count,
                              std::span<const std::pair<NodeId, NodeId>> edges);

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return neighbours_.size() / 2; }

    std::span<const NodeId> neighbours(NodeId i) const noexcept {
        return {neighbours_.data() + offsets_[i], neighbours_.data() + offsets_[i + 1]};
    }
    std::size_t degree(NodeId i) const noexcept { return offsets_[i + 1] - offsets_[i]; }

    bool has_edge(NodeId i, NodeId j) const noexcept;
    bool is_connected() const;

    /// Canonical edge list, each edge once with first < second, sorted.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    // Raw CSR arrays for the kernels.
    std::span<const std::size_t> offsets() const noexcept { return offsets_; }
    std::span<const NodeId> adjacency() const noexcept { return neighbours_; }

    friend bool operator==(const Network&, const Network&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> neighbours_;
};

} // namespace ugsim
