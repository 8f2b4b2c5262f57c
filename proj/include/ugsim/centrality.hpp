#pragma once

#include <cstddef>
#include <vector>

#include "ugsim/network.hpp"

namespace ugsim {

/// Per-node influence values plus the ascending order used for selection.
/// `order.back()` is the most influential node; ties go to the lower index
/// first, so among equals the highest index ranks most influential.
struct CentralityRanking {
    std::vector<double> values;
    std::vector<NodeId> order;

    /// The `count` most influential nodes, most influential first.
    std::vector<NodeId> top(std::size_t count) const;
};

enum class CentralityKind { Degree, Eigenvector };

/// k_i / (n - 1).
CentralityRanking degree_centrality(const Network& net);

struct EigenResult {
    CentralityRanking ranking;
    double eigenvalue = 0.0;
    std::size_t iterations = 0;
    double residual = 0.0; ///< max-norm of A x - lambda x at exit
};

/// Principal adjacency eigenvector (unit Euclidean norm, entrywise positive)
/// by power iteration on A + I from the uniform vector. The shift keeps
/// bipartite graphs from oscillating without changing the eigenvector.
/// Throws ConvergenceError when max_iter is exhausted.
EigenResult eigenvector_centrality(const Network& net, double tol = 1e-10,
                                   std::size_t max_iter = 100000);

CentralityRanking compute_centrality(const Network& net, CentralityKind kind);

} // namespace ugsim
