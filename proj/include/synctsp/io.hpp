#pragma once

#include <string>

#include "synctsp/agency.hpp"
#include "synctsp/graph.hpp"

namespace synctsp {

/// Parses either the JSON form {"n":..,"edges":[[u,v],..]} or the plain
/// text form "n m" followed by m lines "u v". Errors carry the line or
/// byte position and the offending edge.
Graph load_graph(const std::string& text);
Graph load_graph_file(const std::string& path);

Agency load_agency(const std::string& text);
Agency load_agency_file(const std::string& path);

/// Byte-stable canonical JSON: UTF-8, LF, sorted keys, no extra
/// whitespace, trailing newline.
std::string graph_to_json(const Graph& g);
std::string agency_to_json(const Agency& a);

/// One row per agent, one column per time unit, with a header row.
std::string agency_to_csv(const Agency& a);

std::string graph_to_dot(const Graph& g);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace synctsp
