#include "synctsp/agency.hpp"

#include <algorithm>
#include <map>

#include "synctsp/errors.hpp"

namespace synctsp {

std::optional<WalkViolation> validate_walk(const Graph& g, const std::vector<int>& nodes,
                                           bool allow_parking) {
  if (nodes.empty()) return WalkViolation{0, "empty walk"};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!g.has_node(nodes[i]))
      return WalkViolation{static_cast<int>(i),
                           "node id " + std::to_string(nodes[i]) + " out of range"};
  }
  for (std::size_t t = 0; t + 1 < nodes.size(); ++t) {
    const int a = nodes[t], b = nodes[t + 1];
    if (a == b) {
      if (!allow_parking)
        return WalkViolation{static_cast<int>(t), "parking not allowed"};
    } else if (!g.has_edge(a, b)) {
      return WalkViolation{static_cast<int>(t),
                           "(" + std::to_string(a) + "," + std::to_string(b) +
                               ") is not an edge"};
    }
  }
  return std::nullopt;
}

bool is_tour(const Graph& g, const std::vector<int>& nodes, bool allow_parking) {
  if (nodes.size() < 2) return false;
  if (validate_walk(g, nodes, allow_parking)) return false;
  if (nodes.front() != nodes.back()) return false;
  std::vector<char> seen(g.n(), 0);
  for (int v : nodes) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::optional<std::string> agency_structure_error(const Graph& g, const Agency& a) {
  if (a.k < 1) return "agency needs at least one agent";
  if (a.T < 1) return "agency needs a positive time horizon";
  if (static_cast<int>(a.schedule.size()) != a.k)
    return "schedule has " + std::to_string(a.schedule.size()) + " rows, expected k=" +
           std::to_string(a.k);
  for (int i = 0; i < a.k; ++i) {
    if (static_cast<int>(a.schedule[i].size()) != a.T + 1)
      return "row " + std::to_string(i) + " has " +
             std::to_string(a.schedule[i].size()) + " entries, expected T+1=" +
             std::to_string(a.T + 1);
    for (int v : a.schedule[i])
      if (!g.has_node(v))
        return "row " + std::to_string(i) + " contains node id " + std::to_string(v) +
               " outside 0.." + std::to_string(g.n() - 1);
  }
  return std::nullopt;
}

std::vector<CrashEvent> find_crashes(const Graph& g, const Agency& a) {
  if (auto err = agency_structure_error(g, a)) throw InputError(*err);
  std::vector<CrashEvent> out;
  // Node crashes over t in 0..T-1 (t = T repeats t = 0); per-time occupancy
  // map so triples at one node report every pair.
  for (int t = 0; t < a.T; ++t) {
    std::map<int, std::vector<int>> at_node;
    for (int i = 0; i < a.k; ++i) at_node[a.schedule[i][t]].push_back(i);
    for (const auto& [node, agents] : at_node) {
      for (std::size_t x = 0; x < agents.size(); ++x)
        for (std::size_t y = x + 1; y < agents.size(); ++y)
          out.push_back({CrashEvent::Kind::Node, agents[x], agents[y], t, node, node});
    }
    // Edge crashes on the step t -> t+1 (the last step is the wrap back to
    // the start, since row[T] == row[0] for well-formed tours).
    std::map<Edge, std::vector<std::pair<int, int>>> movers;  // edge -> (agent, from)
    for (int i = 0; i < a.k; ++i) {
      const int from = a.schedule[i][t], to = a.schedule[i][t + 1];
      if (from != to) movers[make_edge(from, to)].push_back({i, from});
    }
    for (const auto& [edge, list] : movers) {
      for (std::size_t x = 0; x < list.size(); ++x)
        for (std::size_t y = x + 1; y < list.size(); ++y)
          if (list[x].second != list[y].second)
            out.push_back({CrashEvent::Kind::Edge, std::min(list[x].first, list[y].first),
                           std::max(list[x].first, list[y].first), t, edge.first,
                           edge.second});
    }
  }
  std::sort(out.begin(), out.end(), [](const CrashEvent& a, const CrashEvent& b) {
    if (a.time != b.time) return a.time < b.time;
    if (a.agent_a != b.agent_a) return a.agent_a < b.agent_a;
    if (a.agent_b != b.agent_b) return a.agent_b < b.agent_b;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  return out;
}

bool is_feasible(const Graph& g, const Agency& a) {
  if (agency_structure_error(g, a)) return false;
  for (const auto& row : a.schedule)
    if (!is_tour(g, row, a.allow_parking)) return false;
  return find_crashes(g, a).empty();
}

StrengthReport strength(const Graph& g, const Agency& a) {
  if (!is_feasible(g, a)) throw InfeasibleError("strength requires a feasible agency");
  StrengthReport r;
  r.alpha1 = Rational(g.n(), a.k);
  r.alpha2 = Rational(a.T, g.n());
  r.alpha = rational_max(r.alpha1, r.alpha2);
  // alpha1 * alpha2 == T/k and both factors are >= 1, which pins alpha
  // between sqrt(T/k) and T/k; checked squared to stay exact.
  const Rational ratio(a.T, a.k);
  if (r.alpha * r.alpha < ratio || ratio < r.alpha)
    throw InfeasibleError("strength sandwich violated");  // unreachable for feasible input
  return r;
}

Agency rotate_agency(const Agency& a, int offset) {
  Agency out = a;
  const int T = a.T;
  offset = ((offset % T) + T) % T;
  for (int i = 0; i < a.k; ++i)
    for (int t = 0; t <= T; ++t)
      out.schedule[i][t] = a.schedule[i][(t + offset) % T];
  return out;
}

}  // namespace synctsp
