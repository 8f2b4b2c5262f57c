#include "ugsim/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ugsim/error.hpp"

namespace ugsim {

namespace {

// Eigenvector values closer than this are ranked as ties so that
// structurally equivalent nodes fall back to index order instead of
// rounding noise.
constexpr double kTieGrid = 1e-11;

template <typename Key>
std::vector<NodeId> ascending_order(std::size_t n, Key key) {
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return key(a) < key(b); });
    return order;
}

} // namespace

std::vector<NodeId> CentralityRanking::top(std::size_t count) const {
    count = std::min(count, order.size());
    return {order.rbegin(), order.rbegin() + static_cast<std::ptrdiff_t>(count)};
}

CentralityRanking degree_centrality(const Network& net) {
    const std::size_t n = net.node_count();
    if (n < 2)
        throw ParameterError("degree centrality needs at least two nodes");
    CentralityRanking r;
    r.values.resize(n);
    for (NodeId i = 0; i < n; ++i)
        r.values[i] = static_cast<double>(net.degree(i)) / static_cast<double>(n - 1);
    r.order = ascending_order(n, [&](NodeId i) { return net.degree(i); });
    return r;
}

EigenResult eigenvector_centrality(const Network& net, double tol, std::size_t max_iter) {
    const std::size_t n = net.node_count();
    if (n == 0)
        throw ParameterError("eigenvector centrality of an empty network");
    if (!(tol > 0))
        throw ParameterError("eigenvector centrality tolerance must be positive");

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(n), next(n);

    auto multiply = [&](const std::vector<double>& in, std::vector<double>& out) {
        for (NodeId i = 0; i < n; ++i) {
            double s = 0.0;
            for (NodeId j : net.neighbours(i))
                s += in[j];
            out[i] = s;
        }
    };

    EigenResult result;
    double residual = 0.0;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        multiply(x, ax);
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = ax[i] + x[i];
            norm += next[i] * next[i];
        }
        norm = std::sqrt(norm);
        double diff = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] /= norm;
            diff = std::max(diff, std::abs(next[i] - x[i]));
        }
        x.swap(next);

        if (diff < tol) {
            multiply(x, ax);
            double lambda = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                lambda += x[i] * ax[i];
            residual = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                residual = std::max(residual, std::abs(ax[i] - lambda * x[i]));
            if (residual < tol) {
                result.eigenvalue = lambda;
                result.iterations = it;
                result.residual = residual;
                result.ranking.values = std::move(x);
                const auto& v = result.ranking.values;
                result.ranking.order =
                    ascending_order(n, [&](NodeId i) { return std::llround(v[i] / kTieGrid); });
                return result;
            }
        }
    }
    multiply(x, ax);
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        lambda += x[i] * ax[i];
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        residual = std::max(residual, std::abs(ax[i] - lambda * x[i]));
    throw ConvergenceError("eigenvector centrality did not converge in " +
                               std::to_string(max_iter) + " iterations",
                           residual);
}

CentralityRanking compute_centrality(const Network& net, CentralityKind kind) {
    if (kind == CentralityKind::Degree)
        return degree_centrality(net);
    return eigenvector_centrality(net).ranking;
}

} // namespace ugsim
