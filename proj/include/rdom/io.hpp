#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rdom/graph.hpp"

namespace rdom {

/// Machine output format; insertion-ordered so dumps are stable.
using Json = nlohmann::ordered_json;

/// Edge-list text: one `u v` pair per line, `#` starts a comment, and an
/// optional `vertices: a b c` (or comma-separated) line declares vertices
/// that may be isolated. Throws ParseError with the offending line number.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

/// Canonical JSON {n, edges:[[u,v],...], ids:[...]} in external ids, edges
/// sorted by (min, max).
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

}  // namespace rdom
