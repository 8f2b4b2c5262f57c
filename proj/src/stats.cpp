#include "ugsim/stats.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "ugsim/kernels.hpp"

namespace ugsim {

namespace {

// Hurwitz zeta sum_{k>=0} (k + q)^-s for s > 1, q >= 1: direct head plus an
// Euler-Maclaurin tail.
double hurwitz_zeta(double s, double q) {
    constexpr int kHead = 64;
    double sum = 0.0;
    for (int k = 0; k < kHead; ++k)
        sum += std::pow(k + q, -s);
    const double a = kHead + q;
    sum += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s) +
           s / 12.0 * std::pow(a, -s - 1.0) -
           s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(a, -s - 3.0);
    return sum;
}

} // namespace

double fit_power_law_exponent(std::span<const std::size_t> degrees, std::size_t k_min) {
    if (k_min < 1)
        k_min = 1;
    double sum_log = 0.0;
    std::size_t count = 0;
    for (std::size_t k : degrees)
        if (k >= k_min) {
            sum_log += std::log(static_cast<double>(k));
            ++count;
        }
    if (count < 2)
        return std::numeric_limits<double>::quiet_NaN();

    const double q = static_cast<double>(k_min);
    const double nd = static_cast<double>(count);
    auto neg_log_likelihood = [&](double gamma) {
        return nd * std::log(hurwitz_zeta(gamma, q)) + gamma * sum_log;
    };
    auto [gamma, value] = boost::math::tools::brent_find_minima(neg_log_likelihood, 1.0001, 8.0,
                                                                std::numeric_limits<double>::digits / 2);
    (void)value;
    return gamma;
}

std::size_t count_triangles(const Network& net) {
    return kernels::omp::count_triangles(net);
}

double global_clustering(const Network& net) {
    double triples = 0.0;
    for (NodeId i = 0; i < net.node_count(); ++i) {
        const double k = static_cast<double>(net.degree(i));
        triples += k * (k - 1.0) / 2.0;
    }
    if (triples == 0.0)
        return 0.0;
    return 3.0 * static_cast<double>(count_triangles(net)) / triples;
}

NetworkStats network_stats(const Network& net, std::size_t k_min) {
    NetworkStats s;
    const std::size_t n = net.node_count();
    if (n == 0)
        return s;
    s.mean_degree = 2.0 * static_cast<double>(net.edge_count()) / static_cast<double>(n);
    s.global_clustering = global_clustering(net);
    std::vector<std::size_t> degrees(n);
    for (NodeId i = 0; i < n; ++i) {
        degrees[i] = net.degree(i);
        ++s.degree_histogram[degrees[i]];
    }
    s.fitted_exponent = fit_power_law_exponent(degrees, k_min);
    return s;
}

std::string stats_csv_header() { return "n,m,model,seed,mean_degree,clustering,gamma"; }

std::string stats_csv_row(const GenParams& params, const NetworkStats& stats) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%zu,%zu,%s,%llu,%.6g,%.6g,%.6g", params.n, params.m,
                  std::string(to_string(params.model)).c_str(),
                  static_cast<unsigned long long>(params.seed), stats.mean_degree,
                  stats.global_clustering, stats.fitted_exponent);
    return buf;
}

} // namespace ugsim
