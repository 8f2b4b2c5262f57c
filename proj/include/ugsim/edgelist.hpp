#pragma once

#include <iosfwd>
#include <string>

#include "ugsim/network.hpp"

namespace ugsim {

/// ASCII edge list: one "i j" per line with i < j, zero-based, '#' comments.
/// An optional "# nodes N" comment pins the node count (isolated trailing
/// nodes would otherwise be lost); without it N = max index + 1.
void save_edgelist(const Network& net, std::ostream& out);
void save_edgelist(const Network& net, const std::string& path);

/// Throws FormatError (with the offending line) on malformed lines,
/// self-loops, duplicate edges or indices beyond a declared node count.
Network load_edgelist(std::istream& in);
Network load_edgelist(const std::string& path);

} // namespace ugsim
