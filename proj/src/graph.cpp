#include "synctsp/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

#include "synctsp/errors.hpp"

namespace synctsp {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw InputError("graph must have at least one node");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    if (u == v)
      throw InputError("self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] == edges[i - 1])
      throw InputError("duplicate edge (" + std::to_string(edges[i].first) + "," +
                       std::to_string(edges[i].second) + ")");
  }
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  if (!has_node(u) || !has_node(v) || u == v) return false;
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> TwoFactor::edge_set() const {
  std::vector<Edge> out;
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out.push_back(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int count_components(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(n, 0);
  int components = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return components;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n());
  for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
  return count_components(g.n(), adj) == 1;
}

bool is_tree(const Graph& g) {
  return g.m() == g.n() - 1 && is_connected(g);
}

std::vector<Edge> bridges(const Graph& g) {
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> out;
  int timer = 0;

  // Iterative low-link DFS; parent tracked as the node we arrived from.
  struct Frame {
    int v;
    int parent;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        int w = nbrs[f.next++];
        if (w == f.parent) {
          // Skip the tree edge back to the parent once; simple graphs have
          // no parallel edges, so one skip is exact.
          f.parent = -2;
          continue;
        }
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) out.push_back(make_edge(p, v));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_two_edge_connected(const Graph& g) {
  return g.n() >= 2 && is_connected(g) && bridges(g).empty();
}

bool is_three_edge_connected(const Graph& g) {
  if (!is_two_edge_connected(g)) return false;
  // Edge connectivity >= 3 iff deleting any single edge leaves no bridge.
  for (const Edge& e : g.edges()) {
    std::vector<Edge> rest;
    rest.reserve(g.edges().size() - 1);
    for (const Edge& f : g.edges())
      if (f != e) rest.push_back(f);
    Graph h(g.n(), rest);
    if (!is_connected(h) || !bridges(h).empty()) return false;
  }
  return true;
}

bool is_regular(const Graph& g, int degree) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != degree) return false;
  return true;
}

namespace {

// BFS with ascending-neighbor tie-breaks; returns (farthest node, parents).
std::pair<int, std::vector<int>> bfs_farthest(const Graph& g, int start) {
  std::vector<int> dist(g.n(), -1), parent(g.n(), -1);
  std::vector<int> queue{start};
  dist[start] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.neighbors(v)) {
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  int best = start;
  for (int v = 0; v < g.n(); ++v)
    if (dist[v] > dist[best]) best = v;
  return {best, parent};
}

}  // namespace

StarEdge find_star_edge(const Graph& g) {
  if (!is_tree(g) || g.n() < 3)
    throw InputError("find_star_edge requires a tree with at least 3 nodes");
  auto [a, parent_a] = bfs_farthest(g, 0);
  auto [b, parent_b] = bfs_farthest(g, a);
  // Path from a to b; its last three nodes are u, v, z.
  std::vector<int> path;
  for (int v = b; v != -1; v = parent_b[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  // A tree with n >= 3 has diameter >= 2, so the path has >= 3 nodes.
  const int u = path[path.size() - 3];
  const int v = path[path.size() - 2];
  StarEdge result{u, v, {}};
  for (int w : g.neighbors(v))
    if (w != u) result.leaves.push_back(w);
  return result;
}

void check_two_factor(const Graph& g, const TwoFactor& f) {
  std::vector<char> seen(g.n(), 0);
  for (const auto& cycle : f.cycles) {
    if (cycle.size() < 3)
      throw InputError("two-factor cycle shorter than 3 nodes");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
      if (!g.has_node(u) || seen[u])
        throw InputError("two-factor cycles are not disjoint node covers");
      seen[u] = 1;
      if (!g.has_edge(u, v))
        throw InputError("two-factor uses non-edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (!seen[v]) throw InputError("two-factor misses node " + std::to_string(v));
}

namespace {

// Canonical cycle decomposition of a 2-regular edge subset.
std::vector<std::vector<int>> cycles_of_subset(int n, const std::vector<Edge>& chosen) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : chosen) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  std::vector<char> used(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int s = 0; s < n; ++s) {
    if (used[s]) continue;
    std::vector<int> cycle{s};
    used[s] = 1;
    int prev = -1, cur = s;
    while (true) {
      int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
      if (next == s) break;
      cycle.push_back(next);
      used[next] = 1;
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

struct FactorEnumerator {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t steps = 0;
  bool budget_hit = false;
  std::vector<int> chosen_deg;
  std::vector<int> remaining;  // incident edges not yet decided, per node
  std::vector<Edge> chosen;
  std::function<bool(const TwoFactor&)> emit;  // returns false to stop
  bool stopped = false;

  FactorEnumerator(const Graph& graph, std::uint64_t step_budget)
      : g(graph), budget(step_budget), chosen_deg(graph.n(), 0),
        remaining(graph.n(), 0) {
    for (const auto& [u, v] : g.edges()) {
      ++remaining[u];
      ++remaining[v];
    }
  }

  bool viable(int v) const { return chosen_deg[v] + remaining[v] >= 2; }

  void run(std::size_t idx) {
    if (stopped || budget_hit) return;
    if (++steps > budget) {
      budget_hit = true;
      return;
    }
    if (idx == g.edges().size()) {
      for (int v = 0; v < g.n(); ++v)
        if (chosen_deg[v] != 2) return;
      TwoFactor f{cycles_of_subset(g.n(), chosen)};
      if (!emit(f)) stopped = true;
      return;
    }
    const auto& [u, v] = g.edges()[idx];
    --remaining[u];
    --remaining[v];
    if (chosen_deg[u] < 2 && chosen_deg[v] < 2) {
      ++chosen_deg[u];
      ++chosen_deg[v];
      chosen.push_back({u, v});
      run(idx + 1);
      chosen.pop_back();
      --chosen_deg[u];
      --chosen_deg[v];
    }
    if (!stopped && !budget_hit && viable(u) && viable(v)) run(idx + 1);
    ++remaining[u];
    ++remaining[v];
  }
};

}  // namespace

std::vector<TwoFactor> enumerate_two_factors(const Graph& g, std::size_t limit,
                                             int max_n) {
  if (g.n() > max_n)
    throw CapExceededError("two-factor enumeration capped at n <= " +
                           std::to_string(max_n));
  std::vector<TwoFactor> out;
  FactorEnumerator en(g, 50'000'000);
  en.emit = [&](const TwoFactor& f) {
    out.push_back(f);
    return out.size() < limit;
  };
  en.run(0);
  if (en.budget_hit)
    throw CapExceededError("two-factor enumeration step budget exhausted");
  return out;
}

FactorSearchResult find_girth5_two_factor(const Graph& g, std::uint64_t step_budget) {
  FactorSearchResult result{FactorSearchStatus::ProvenAbsent, std::nullopt};
  FactorEnumerator en(g, step_budget);
  en.emit = [&](const TwoFactor& f) {
    for (const auto& cycle : f.cycles)
      if (cycle.size() < 5) return true;  // keep searching
    result = {FactorSearchStatus::Found, f};
    return false;
  };
  en.run(0);
  if (result.status != FactorSearchStatus::Found && en.budget_hit)
    result.status = FactorSearchStatus::CapExceeded;
  return result;
}

ContractedForest contract_cycles(const Graph& g, const TwoFactor& f) {
  check_two_factor(g, f);
  if (!is_connected(g)) throw InputError("contract_cycles requires a connected graph");
  ContractedForest out;
  out.cycle_of.assign(g.n(), -1);
  for (std::size_t c = 0; c < f.cycles.size(); ++c)
    for (int v : f.cycles[c]) out.cycle_of[v] = static_cast<int>(c);

  const auto factor_edges = f.edge_set();
  // Kruskal over non-factor edges, smallest edge first.
  std::vector<int> comp(f.cycles.size());
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (std::binary_search(factor_edges.begin(), factor_edges.end(), e)) continue;
    int cu = find(out.cycle_of[e.first]);
    int cv = find(out.cycle_of[e.second]);
    if (cu == cv) continue;
    comp[cu] = cv;
    out.tree_edges.push_back(e);
  }
  return out;
}

namespace {

bool exists_two_factor_with_edge(const Graph& g, const Edge& forced,
                                 std::uint64_t budget) {
  bool found = false;
  FactorEnumerator en(g, budget);
  // Force the edge by seeding its endpoints' chosen degree and dropping it
  // from the remaining counts, then enumerate the rest.
  en.chosen_deg[forced.first] = 1;
  en.chosen_deg[forced.second] = 1;
  --en.remaining[forced.first];
  --en.remaining[forced.second];
  en.chosen.push_back(forced);
  en.emit = [&](const TwoFactor&) {
    found = true;
    return false;
  };
  // Walk the edge list but skip the forced edge by marking it decided:
  // easiest is to enumerate over a filtered recursion; instead re-run over
  // all edges and treat the forced one as already included.
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (en.stopped || en.budget_hit) return;
    if (idx < g.edges().size() && g.edges()[idx] == forced) {
      rec(idx + 1);
      return;
    }
    if (++en.steps > en.budget) {
      en.budget_hit = true;
      return;
    }
    if (idx == g.edges().size()) {
      for (int v = 0; v < g.n(); ++v)
        if (en.chosen_deg[v] != 2) return;
      TwoFactor f{cycles_of_subset(g.n(), en.chosen)};
      if (!en.emit(f)) en.stopped = true;
      return;
    }
    const auto& [u, v] = g.edges()[idx];
    --en.remaining[u];
    --en.remaining[v];
    if (en.chosen_deg[u] < 2 && en.chosen_deg[v] < 2) {
      ++en.chosen_deg[u];
      ++en.chosen_deg[v];
      en.chosen.push_back({u, v});
      rec(idx + 1);
      en.chosen.pop_back();
      --en.chosen_deg[u];
      --en.chosen_deg[v];
    }
    if (!en.stopped && !en.budget_hit && en.viable(u) && en.viable(v)) rec(idx + 1);
    ++en.remaining[u];
    ++en.remaining[v];
  };
  rec(0);
  if (en.budget_hit && !found)
    throw CapExceededError("two-factor membership search budget exhausted");
  return found;
}

}  // namespace

std::vector<Edge> two_factor_edge_union(const Graph& g, int max_n) {
  if (g.n() > max_n)
    throw CapExceededError("two-factor union check capped at n <= " +
                           std::to_string(max_n));
  std::vector<Edge> out;
  if (g.n() < 3) return out;  // no cycle, hence no 2-factor
  for (const Edge& e : g.edges())
    if (exists_two_factor_with_edge(g, e, 50'000'000)) out.push_back(e);
  return out;
}

bool two_factor_union_spans(const Graph& g, int max_n) {
  const auto edges = two_factor_edge_union(g, max_n);
  if (edges.empty()) return false;
  std::vector<std::vector<int>> adj(g.n());
  for (const Edge& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  return count_components(g.n(), adj) == 1;
}

StretchReport stretch_metrics(const Graph& g) {
  if (!is_tree(g) || g.n() < 2)
    throw InputError("stretch_metrics requires a tree with at least 2 nodes");
  StretchReport report;
  bool has_joint = false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) >= 3) has_joint = true;
  if (!has_joint) {
    // Max degree <= 2 and connected: the tree is a path.
    report.ll = g.n();
    return report;
  }
  // Maximal chains whose interior nodes all have degree 2, classified by
  // their endpoint types.
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 2) continue;
    for (int next : g.neighbors(v)) {
      int prev = v, cur = next, nodes = 2;
      while (g.degree(cur) == 2) {
        int step = (g.neighbors(cur)[0] != prev) ? g.neighbors(cur)[0]
                                                 : g.neighbors(cur)[1];
        prev = cur;
        cur = step;
        ++nodes;
      }
      if (cur < v && g.degree(cur) != 2) continue;  // each chain once
      const bool v_joint = g.degree(v) >= 3;
      const bool c_joint = g.degree(cur) >= 3;
      if (v_joint && c_joint) {
        if (!report.yy || nodes > *report.yy) report.yy = nodes;
      } else if (v_joint != c_joint) {
        if (!report.ly || nodes > *report.ly) report.ly = nodes;
      }
      // Leaf-to-leaf chains cannot occur in a tree that has a joint.
    }
  }
  return report;
}

}  // namespace synctsp
