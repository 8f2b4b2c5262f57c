#include "ugsim/edgelist.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>

#include "ugsim/error.hpp"

namespace ugsim {

void save_edgelist(const Network& net, std::ostream& out) {
    out << "# nodes " << net.node_count() << '\n';
    for (auto [i, j] : net.edges())
        out << i << ' ' << j << '\n';
}

void save_edgelist(const Network& net, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    save_edgelist(net, out);
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::optional<std::uint64_t> parse_index(std::string_view token) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        return std::nullopt;
    return value;
}

} // namespace

Network load_edgelist(std::istream& in) {
    std::optional<std::size_t> declared;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::set<std::pair<NodeId, NodeId>> seen;
    std::uint64_t max_index = 0;
    bool any = false;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            std::string_view body = trim(line.substr(1));
            if (body.starts_with("nodes")) {
                auto n = parse_index(trim(body.substr(5)));
                if (!n)
                    throw FormatError("malformed node-count comment", line_no);
                declared = *n;
            }
            continue;
        }
        auto space = line.find_first_of(" \t");
        if (space == std::string_view::npos)
            throw FormatError("expected two node indices", line_no);
        auto a = parse_index(line.substr(0, space));
        auto b = parse_index(trim(line.substr(space)));
        if (!a || !b)
            throw FormatError("expected two non-negative integer indices", line_no);
        if (*a == *b)
            throw FormatError("self-loop at node " + std::to_string(*a), line_no);
        if (*a > std::numeric_limits<NodeId>::max() - 1 ||
            *b > std::numeric_limits<NodeId>::max() - 1)
            throw FormatError("node index out of range", line_no);
        if (declared && (*a >= *declared || *b >= *declared))
            throw FormatError("node index out of range for " + std::to_string(*declared) +
                                  " nodes",
                              line_no);
        const auto lo = static_cast<NodeId>(std::min(*a, *b));
        const auto hi = static_cast<NodeId>(std::max(*a, *b));
        const std::pair<NodeId, NodeId> key{lo, hi};
        if (!seen.insert(key).second)
            throw FormatError("duplicate edge " + std::to_string(key.first) + " " +
                                  std::to_string(key.second),
                              line_no);
        edges.emplace_back(key);
        max_index = std::max({max_index, *a, *b});
        any = true;
    }
    if (declared && any && max_index >= *declared)
        throw FormatError("node-count comment smaller than largest index", line_no);
    std::size_t n = declared ? *declared : (any ? static_cast<std::size_t>(max_index) + 1 : 0);
    return Network::from_edges(n, edges);
}

Network load_edgelist(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open network file '" + path + "'");
    return load_edgelist(in);
}

} // namespace ugsim
