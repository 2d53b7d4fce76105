#ifndef BINEDGE_GRAPH_IO_HPP
#define BINEDGE_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "binedge/graph.hpp"

namespace binedge {

/// Text format: first significant line `n`, then one `i j` edge per line.
/// `#` starts a comment; blank lines are ignored. Throws ParseError.
SimpleGraph parse_graph(std::string_view text);
SimpleGraph read_graph_file(const std::string& path);

/// Canonical form: `n` followed by the edges in lexicographic order.
std::string format_graph(const SimpleGraph& g);

}  // namespace binedge

#endif  // BINEDGE_GRAPH_IO_HPP
