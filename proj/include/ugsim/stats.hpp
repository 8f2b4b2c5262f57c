#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "ugsim/generators.hpp"
#include "ugsim/network.hpp"

namespace ugsim {

struct NetworkStats {
    double mean_degree = 0.0;
    double global_clustering = 0.0;
    std::map<std::size_t, std::size_t> degree_histogram;
    double fitted_exponent = 0.0; ///< NaN when fewer than two degrees reach k_min
};

/// Discrete power-law maximum-likelihood exponent for samples >= k_min,
/// maximising the Hurwitz-zeta normalised likelihood.
double fit_power_law_exponent(std::span<const std::size_t> degrees, std::size_t k_min = 4);

/// Triangle count and 3*T / connected-triples transitivity.
std::size_t count_triangles(const Network& net);
double global_clustering(const Network& net);

NetworkStats network_stats(const Network& net, std::size_t k_min = 4);

/// "n,m,model,seed,mean_degree,clustering,gamma"
std::string stats_csv_header();
std::string stats_csv_row(const GenParams& params, const NetworkStats& stats);

} // namespace ugsim
