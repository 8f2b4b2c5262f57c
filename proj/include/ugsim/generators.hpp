#pragma once

#include <cstdint>
#include <string_view>

#include "ugsim/network.hpp"

namespace ugsim {

enum class NetworkModel { BA, DMS };

std::string_view to_string(NetworkModel model);
NetworkModel parse_network_model(std::string_view text);

struct GenParams {
    NetworkModel model = NetworkModel::BA;
    std::size_t n = 2000;
    std::size_t m = 2;
    /// BA core size; 0 selects the default m + 1. Ignored for DMS (triangle core).
    std::size_t m0 = 0;
    std::uint64_t seed = 1;
};

/// Barabasi-Albert growth from a complete core of m0 nodes. Each new node
/// links to m distinct existing nodes drawn proportionally to degree.
Network generate_ba(const GenParams& params);

/// Dorogovtsev-Mendes-Samukhin growth from a triangle. Each new node links to
/// both endpoints of m/2 distinct uniformly drawn edges, so it brings m links
/// and z = 2m as for BA. m must be even.
Network generate_dms(const GenParams& params);

/// Dispatches on params.model.
Network generate(const GenParams& params);

} // namespace ugsim
