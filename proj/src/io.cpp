#include "synctsp/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "synctsp/errors.hpp"

namespace synctsp {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InputError("graph JSON needs fields \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw InputError("field \"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (!j["edges"].is_array()) throw InputError("field \"edges\" must be an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const auto& e = j["edges"][i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw InputError("edge #" + std::to_string(i) + " must be a pair of integers");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Graph(n, edges);
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (n < 0) {
      if (!(ls >> n >> m))
        throw InputError("line " + std::to_string(lineno) + ": expected \"n m\"");
      continue;
    }
    int u, v;
    if (!(ls >> u >> v))
      throw InputError("line " + std::to_string(lineno) + ": expected \"u v\"");
    edges.push_back({u, v});
  }
  if (n < 0) throw InputError("empty graph file");
  if (static_cast<int>(edges.size()) != m)
    throw InputError("header announced " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  return Graph(n, edges);
}

}  // namespace

Graph load_graph(const std::string& text) {
  return looks_like_json(text) ? graph_from_json(parse_json(text))
                               : graph_from_text(text);
}

Graph load_graph_file(const std::string& path) { return load_graph(read_file(path)); }

Agency load_agency(const std::string& text) {
  const json j = parse_json(text);
  for (const char* field : {"T", "k", "allow_parking", "schedule"})
    if (!j.contains(field))
      throw InputError(std::string("agency JSON needs field \"") + field + "\"");
  Agency a;
  a.T = j["T"].get<int>();
  a.k = j["k"].get<int>();
  a.allow_parking = j["allow_parking"].get<bool>();
  if (!j["schedule"].is_array())
    throw InputError("field \"schedule\" must be an array of rows");
  for (const auto& row : j["schedule"]) {
    if (!row.is_array()) throw InputError("schedule rows must be arrays");
    a.schedule.emplace_back();
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw InputError("schedule entries must be integers");
      a.schedule.back().push_back(x.get<int>());
    }
  }
  return a;
}

Agency load_agency_file(const std::string& path) { return load_agency(read_file(path)); }

std::string graph_to_json(const Graph& g) {
  std::ostringstream out;
  out << "{\"edges\":[";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) out << ",";
    out << "[" << g.edges()[i].first << "," << g.edges()[i].second << "]";
  }
  out << "],\"n\":" << g.n() << "}\n";
  return out.str();
}

std::string agency_to_json(const Agency& a) {
  std::ostringstream out;
  out << "{\"T\":" << a.T << ",\"allow_parking\":" << (a.allow_parking ? "true" : "false")
      << ",\"k\":" << a.k << ",\"schedule\":[";
  for (std::size_t i = 0; i < a.schedule.size(); ++i) {
    if (i) out << ",";
    out << "[";
    for (std::size_t t = 0; t < a.schedule[i].size(); ++t) {
      if (t) out << ",";
      out << a.schedule[i][t];
    }
    out << "]";
  }
  out << "]}\n";
  return out.str();
}

std::string agency_to_csv(const Agency& a) {
  std::ostringstream out;
  out << "agent";
  for (int t = 0; t <= a.T; ++t) out << "," << t;
  out << "\n";
  for (int i = 0; i < a.k; ++i) {
    out << i;
    for (int v : a.schedule[i]) out << "," << v;
    out << "\n";
  }
  return out.str();
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  std::vector<char> touched(g.n(), 0);
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v << ";\n";
    touched[u] = touched[v] = 1;
  }
  for (int v = 0; v < g.n(); ++v)
    if (!touched[v]) out << "  " << v << ";\n";
  out << "}\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace synctsp
