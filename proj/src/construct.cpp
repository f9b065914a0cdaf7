#include "synctsp/construct.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "synctsp/errors.hpp"

namespace synctsp {

namespace {

// Rows follow a single base walk at fixed delays: agent i runs
// base[(t - delay*i) mod T].
Agency delayed_copies(const std::vector<int>& base, int k, int delay, bool parking) {
  const int T = static_cast<int>(base.size());
  Agency a;
  a.k = k;
  a.T = T;
  a.allow_parking = parking;
  a.schedule.assign(k, std::vector<int>(T + 1));
  for (int i = 0; i < k; ++i)
    for (int t = 0; t <= T; ++t)
      a.schedule[i][t] = base[((t - delay * i) % T + T) % T];
  return a;
}

// Drops the duplicated terminal node of a closed walk.
std::vector<int> cyclic_base(std::vector<int> walk) {
  if (walk.size() < 2 || walk.front() != walk.back())
    throw InputError("closed walk expected");
  walk.pop_back();
  return walk;
}

void require_feasible(const Graph& g, const Agency& a, const char* what) {
  if (!is_feasible(g, a))
    throw InfeasibleError(std::string(what) + ": constructed schedule failed verification");
}

}  // namespace

Agency hamiltonian_delay_agency(const Graph& g, std::vector<int> cycle) {
  const int n = g.n();
  if (static_cast<int>(cycle.size()) == n + 1 && cycle.front() == cycle.back())
    cycle.pop_back();
  if (static_cast<int>(cycle.size()) != n)
    throw InputError("cycle must list all n nodes");
  std::vector<char> seen(n, 0);
  for (int v : cycle) {
    if (v < 0 || v >= n || seen[v]) throw InputError("cycle is not a permutation of the nodes");
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % n]))
      throw InputError("cycle step (" + std::to_string(cycle[i]) + "," +
                       std::to_string(cycle[(i + 1) % n]) + ") is not an edge");
  Agency a = delayed_copies(cycle, n, 1, true);
  require_feasible(g, a, "hamiltonian_delay_agency");
  return a;
}

BuiltAgency build_example1(int r) {
  if (r < 1) throw InputError("r must be >= 1");
  const int n = 7 * r + 6;
  // Internal path 0..r-1 of degree-4 nodes; each carries leaves so that the
  // ends host 3 (4 when r = 1) and interior nodes 2. Every leaf gets two
  // pendant children; the first pendant absorbs one parking unit.
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < r; ++i) edges.push_back({i, i + 1});
  std::vector<std::vector<int>> leaves_of(r);
  int next_leaf = r;
  for (int i = 0; i < r; ++i) {
    int count = (r == 1) ? 4 : (i == 0 || i == r - 1) ? 3 : 2;
    for (int c = 0; c < count; ++c) {
      leaves_of[i].push_back(next_leaf);
      edges.push_back({i, next_leaf});
      ++next_leaf;
    }
  }
  const int first_pendant = next_leaf;  // == 3r + 2
  auto pendants = [&](int leaf) {
    int j = leaf - r;
    return std::pair<int, int>{first_pendant + 2 * j, first_pendant + 2 * j + 1};
  };
  for (int leaf = r; leaf < first_pendant; ++leaf) {
    auto [p1, p2] = pendants(leaf);
    edges.push_back({leaf, p1});
    edges.push_back({leaf, p2});
  }
  Graph g(n, edges);

  // One closed walk: at each internal node do every leaf block
  // (leaf, pendant1 twice, leaf, pendant2, leaf, back) before advancing,
  // then return straight along the internal path.
  std::vector<int> walk{0};
  for (int i = 0; i < r; ++i) {
    if (i > 0) walk.push_back(i);
    for (int leaf : leaves_of[i]) {
      auto [p1, p2] = pendants(leaf);
      walk.insert(walk.end(), {leaf, p1, p1, leaf, p2, leaf, i});
    }
  }
  for (int i = r - 2; i >= 0; --i) walk.push_back(i);

  auto base = cyclic_base(walk);
  const int T = static_cast<int>(base.size());
  if (T != 16 * r + 12) throw InfeasibleError("example1 walk has wrong horizon");
  const int k = 4 * r + 3;
  Agency a = delayed_copies(base, k, 4, true);
  require_feasible(g, a, "build_example1");
  return {g, a};
}

BuiltAgency build_example2(int q) {
  if (q < 1) throw InputError("q must be >= 1");
  const int n = 5 * q + 6;
  // Spine 0..2q. Even spine nodes (except the last) carry a pendant node,
  // odd spine nodes a 2-path; node 0 carries an extra 2-path and the last
  // spine node three leaves.
  std::vector<Edge> edges;
  for (int j = 0; j + 1 <= 2 * q; ++j) edges.push_back({j, j + 1});
  auto pendant = [&](int i) { return 2 * q + 1 + i; };          // at spine 2i
  auto chain1 = [&](int i) { return 3 * q + 1 + 2 * i; };       // at spine 2i+1
  auto chain2 = [&](int i) { return 3 * q + 2 + 2 * i; };
  const int b1 = 5 * q + 1, b2 = 5 * q + 2;
  const int c1 = 5 * q + 3, c2 = 5 * q + 4, c3 = 5 * q + 5;
  for (int i = 0; i < q; ++i) {
    edges.push_back({2 * i, pendant(i)});
    edges.push_back({2 * i + 1, chain1(i)});
    edges.push_back({chain1(i), chain2(i)});
  }
  edges.push_back({0, b1});
  edges.push_back({b1, b2});
  for (int c : {c1, c2, c3}) edges.push_back({2 * q, c});
  Graph g(n, edges);

  // Out along the spine taking each pendant, the three leaves at the far
  // end, then back taking each 2-path, finishing with the 2-path at node 0.
  // Every edge is walked exactly twice and no step parks.
  std::vector<int> walk;
  for (int i = 0; i < q; ++i)
    walk.insert(walk.end(), {2 * i, pendant(i), 2 * i, 2 * i + 1});
  walk.push_back(2 * q);
  walk.insert(walk.end(), {c1, 2 * q, c2, 2 * q, c3, 2 * q});
  for (int i = q - 1; i >= 0; --i)
    walk.insert(walk.end(),
                {2 * i + 1, chain1(i), chain2(i), chain1(i), 2 * i + 1, 2 * i});
  walk.insert(walk.end(), {b1, b2, b1, 0});

  auto base = cyclic_base(walk);
  const int T = static_cast<int>(base.size());
  if (T != 10 * q + 10 || T != 2 * n - 2)
    throw InfeasibleError("example2 walk has wrong horizon");
  const int k = 2 * q + 2;
  Agency a = delayed_copies(base, k, 5, false);
  require_feasible(g, a, "build_example2");
  return {g, a};
}

int ParkingVector::cycle_sum(const std::vector<int>& cycle_nodes) const {
  int sum = 0;
  for (int v : cycle_nodes) {
    auto it = park.find(v);
    if (it != park.end()) sum += it->second;
  }
  return sum;
}

int minimal_cycle_budget(int s) { return 4 * ((s + 3) / 4); }

ParkingVector minimal_parking_vector(const Graph& g, const TwoFactor& f,
                                     const ContractedForest& cf) {
  check_two_factor(g, f);
  if (static_cast<int>(cf.cycle_of.size()) != g.n())
    throw InputError("contracted forest does not match the graph");
  std::vector<char> in_tree(g.n(), 0);
  for (const auto& [u, v] : cf.tree_edges) in_tree[u] = in_tree[v] = 1;
  ParkingVector p;
  for (const auto& cycle : f.cycles) {
    std::vector<int> outside;
    for (int v : cycle)
      if (!in_tree[v]) outside.push_back(v);
    std::sort(outside.begin(), outside.end());
    if (outside.empty()) continue;
    const int s = static_cast<int>(outside.size());
    const int budget = minimal_cycle_budget(s);
    const int remainder = budget - (s - 1);
    if (remainder < 1 || remainder > 4)
      throw InfeasibleError("parking remainder out of range");  // cannot occur
    p.park[outside.front()] = remainder;
    for (std::size_t i = 1; i < outside.size(); ++i) p.park[outside[i]] = 1;
  }
  return p;
}

CubicAgencyResult cubic_agency(const Graph& g, std::uint64_t factor_budget) {
  if (!is_regular(g, 3)) throw InputError("cubic_agency requires a 3-regular graph");
  if (!is_three_edge_connected(g))
    throw InputError("cubic_agency requires a 3-edge-connected graph");

  auto search = find_girth5_two_factor(g, factor_budget);
  if (search.status == FactorSearchStatus::CapExceeded)
    throw CapExceededError("2-factor search budget exhausted before a girth-5 factor was found");
  if (search.status == FactorSearchStatus::ProvenAbsent)
    throw InfeasibleError("no 2-factor with all cycles of length >= 5 exists");
  const TwoFactor factor = *search.factor;
  const ContractedForest forest = contract_cycles(g, factor);

  // In a cubic graph the non-factor edges form a perfect matching, so each
  // node has at most one tree-edge partner.
  std::vector<int> partner(g.n(), -1);
  for (const auto& [u, v] : forest.tree_edges) {
    partner[u] = v;
    partner[v] = u;
  }

  // Base tour: ride each cycle once; detour over a tree edge the first
  // time its far cycle is seen, which occupies both endpoints twice.
  std::vector<char> cycle_done(factor.cycles.size(), 0);
  std::vector<int> pos_in_cycle(g.n(), -1);
  for (const auto& cycle : factor.cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i)
      pos_in_cycle[cycle[i]] = static_cast<int>(i);

  std::vector<int> tour;
  std::function<void(int, int, bool)> ride = [&](int c, int entry, bool close) {
    cycle_done[c] = 1;
    const auto& ring = factor.cycles[c];
    const int len = static_cast<int>(ring.size());
    const int start = pos_in_cycle[entry];
    for (int j = 0; j < len; ++j) {
      const int x = ring[(start + j) % len];
      tour.push_back(x);
      const int y = partner[x];
      if (y >= 0 && !cycle_done[forest.cycle_of[y]]) {
        ride(forest.cycle_of[y], y, true);
        tour.push_back(x);
      }
    }
    if (close) tour.push_back(entry);
  };
  ride(forest.cycle_of[0], 0, false);

  const auto minimal = minimal_parking_vector(g, factor, forest);

  // Pad the parking vector by whole multiples of 4 per cycle, largest
  // cycle first, raising nodes toward 4, until the horizon is exactly 2n.
  ParkingVector padded = minimal;
  int horizon = 4 * static_cast<int>(forest.tree_edges.size());
  for (const auto& cycle : factor.cycles) horizon += padded.cycle_sum(cycle);
  int delta = 2 * g.n() - horizon;
  if (delta < 0 || delta % 4 != 0)
    throw InfeasibleError("minimal parking horizon not a 4-step below 2n");
  std::vector<std::size_t> order(factor.cycles.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (factor.cycles[a].size() != factor.cycles[b].size())
      return factor.cycles[a].size() > factor.cycles[b].size();
    return factor.cycles[a].front() < factor.cycles[b].front();
  });
  for (std::size_t ci : order) {
    if (delta == 0) break;
    std::vector<int> outside;
    for (int v : factor.cycles[ci])
      if (padded.park.count(v)) outside.push_back(v);
    std::sort(outside.begin(), outside.end());
    int headroom = 0;
    for (int v : outside) headroom += 4 - padded.park[v];
    int add = std::min(delta, headroom - headroom % 4);
    delta -= add;
    for (int v : outside) {
      if (add == 0) break;
      int inc = std::min(4 - padded.park[v], add);
      padded.park[v] += inc;
      add -= inc;
    }
  }
  if (delta != 0)
    throw InfeasibleError("could not pad parking to T = 2n; achieved T = " +
                          std::to_string(2 * g.n() - delta));

  std::vector<int> base;
  for (int x : tour) {
    auto it = padded.park.find(x);
    const int copies = (it == padded.park.end()) ? 1 : it->second;
    for (int c = 0; c < copies; ++c) base.push_back(x);
  }
  const int T = static_cast<int>(base.size());
  if (T != 2 * g.n()) throw InfeasibleError("padded tour has wrong horizon");
  const int k = T / 4;

  CubicAgencyResult result{delayed_copies(base, k, 4, true), factor, forest,
                           minimal, padded, tour};
  require_feasible(g, result.agency, "cubic_agency");
  return result;
}

namespace {

// Open walk over a spanning tree visiting every node: the doubled DFS tour
// truncated after the last first visit.
std::vector<int> open_cover_route(const std::vector<std::vector<int>>& tree_adj,
                                  int start) {
  std::vector<int> tour;
  std::vector<char> seen(tree_adj.size(), 0);
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    seen[v] = 1;
    tour.push_back(v);
    for (int w : tree_adj[v]) {
      if (w == parent || seen[w]) continue;
      dfs(w, v);
      tour.push_back(v);
    }
  };
  dfs(start, -1);
  std::size_t last_first = 0;
  std::vector<char> seen2(tree_adj.size(), 0);
  for (std::size_t i = 0; i < tour.size(); ++i) {
    if (!seen2[tour[i]]) {
      seen2[tour[i]] = 1;
      last_first = i;
    }
  }
  tour.resize(last_first + 1);
  return tour;
}

std::vector<std::vector<int>> spanning_tree_adj(const Graph& g,
                                                const std::vector<Edge>& allowed) {
  std::vector<std::vector<int>> adj(g.n());
  for (const auto& [u, v] : allowed) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  // DFS tree edges only.
  std::vector<std::vector<int>> tree(g.n());
  std::vector<char> seen(g.n(), 0);
  std::function<void(int)> dfs = [&](int v) {
    seen[v] = 1;
    for (int w : adj[v]) {
      if (seen[w]) continue;
      tree[v].push_back(w);
      tree[w].push_back(v);
      dfs(w);
    }
  };
  dfs(0);
  for (int v = 0; v < g.n(); ++v)
    if (!seen[v]) throw InputError("spanning tree requires a connected edge set");
  for (auto& nb : tree) std::sort(nb.begin(), nb.end());
  return tree;
}

}  // namespace

Agency full_occupancy_agency(const Graph& g) {
  if (!is_two_edge_connected(g))
    throw InfeasibleError("a k = n agency with parking requires a 2-edge-connected graph");
  const int n = g.n();

  // Shortest cycle through an edge, deterministic BFS.
  auto cycle_through = [&](int u, int v) {
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> queue{v};
    seen[v] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (int w : g.neighbors(x)) {
        if (seen[w] || (x == v && w == u)) continue;  // skip the edge itself
        seen[w] = 1;
        parent[w] = x;
        queue.push_back(w);
      }
    }
    if (!seen[u]) throw InfeasibleError("edge lies on no cycle");  // bridge; unreachable here
    std::vector<int> path;  // u back to v
    for (int x = u; x != -1; x = parent[x]) path.push_back(x);
    // Rotation order u -> v -> ... -> u.
    std::vector<int> rotation{u, v};
    for (auto it = path.rbegin() + 1; it != path.rend() - 1; ++it) rotation.push_back(*it);
    return rotation;
  };

  auto tree = spanning_tree_adj(g, g.edges());

  std::vector<int> node_of(n), agent_at(n);
  std::iota(node_of.begin(), node_of.end(), 0);
  std::iota(agent_at.begin(), agent_at.end(), 0);
  std::vector<std::vector<int>> timeline{node_of};
  std::vector<std::vector<int>> rotations;

  auto apply_rotation = [&](const std::vector<int>& rot) {
    const int len = static_cast<int>(rot.size());
    std::vector<int> movers(len);
    for (int j = 0; j < len; ++j) movers[j] = agent_at[rot[j]];
    for (int j = 0; j < len; ++j) {
      const int dest = rot[(j + 1) % len];
      agent_at[dest] = movers[j];
      node_of[movers[j]] = dest;
    }
    timeline.push_back(node_of);
  };

  for (int agent = 0; agent < n; ++agent) {
    auto route = open_cover_route(tree, node_of[agent]);
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
      auto rot = cycle_through(route[i], route[i + 1]);
      rotations.push_back(rot);
      apply_rotation(rot);
    }
  }
  // Undo everything to close all tours.
  for (auto it = rotations.rbegin(); it != rotations.rend(); ++it) {
    std::vector<int> reversed(it->rbegin(), it->rend());
    apply_rotation(reversed);
  }

  Agency a;
  a.k = n;
  a.T = static_cast<int>(timeline.size()) - 1;
  a.allow_parking = true;
  a.schedule.assign(n, std::vector<int>(a.T + 1));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t <= a.T; ++t) a.schedule[i][t] = timeline[t][i];
  require_feasible(g, a, "full_occupancy_agency");
  return a;
}

Agency full_occupancy_noparking_agency(const Graph& g, std::int64_t q_cap) {
  const auto usable = two_factor_edge_union(g);
  {
    std::vector<std::vector<int>> adj(g.n());
    for (const auto& [u, v] : usable) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (usable.empty() || reached != g.n())
      throw InfeasibleError(
          "a k = n agency without parking requires the 2-factor edges to span the graph");
  }
  const int n = g.n();

  // First enumerated 2-factor containing a given edge, cached.
  std::map<Edge, TwoFactor> factor_cache;
  auto factor_for = [&](const Edge& e) -> const TwoFactor& {
    auto it = factor_cache.find(e);
    if (it != factor_cache.end()) return it->second;
    TwoFactor found;
    bool ok = false;
    for (const auto& f : enumerate_two_factors(g, 1u << 20)) {
      const auto fe = f.edge_set();
      if (std::binary_search(fe.begin(), fe.end(), e)) {
        found = f;
        ok = true;
        break;
      }
    }
    if (!ok) throw InfeasibleError("edge unexpectedly lies in no 2-factor");
    return factor_cache.emplace(e, std::move(found)).first->second;
  };

  auto tree = spanning_tree_adj(g, usable);

  std::vector<int> node_of(n);
  std::iota(node_of.begin(), node_of.end(), 0);
  std::vector<std::vector<int>> step_perms;  // per step: node -> next node

  auto apply_factor = [&](const TwoFactor& f, const Edge& oriented_u_to_v) {
    std::vector<int> perm(n, -1);
    for (const auto& ring : f.cycles) {
      const int len = static_cast<int>(ring.size());
      // Rings not holding the guided edge rotate in stored order; the one
      // that does is oriented so the guided agent steps from u to v.
      int dir = 1;
      for (int j = 0; j < len; ++j) {
        if (ring[j] == oriented_u_to_v.second &&
            ring[(j + 1) % len] == oriented_u_to_v.first) {
          dir = -1;
          break;
        }
        if (ring[j] == oriented_u_to_v.first &&
            ring[(j + 1) % len] == oriented_u_to_v.second)
          break;
      }
      for (int j = 0; j < len; ++j)
        perm[ring[j]] = ring[((j + dir) % len + len) % len];
    }
    step_perms.push_back(perm);
    for (int& x : node_of) x = perm[x];
  };

  for (int agent = 0; agent < n; ++agent) {
    auto route = open_cover_route(tree, node_of[agent]);
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
      const int u = route[i], v = route[i + 1];
      apply_factor(factor_for(make_edge(u, v)), {u, v});
    }
  }

  const std::int64_t t1 = static_cast<std::int64_t>(step_perms.size());
  // Repeat the whole phase until the induced permutation closes.
  std::vector<char> visited(n, 0);
  std::int64_t q = 1;
  for (int s = 0; s < n; ++s) {
    if (visited[s]) continue;
    int len = 0, x = s;
    do {
      visited[x] = 1;
      x = node_of[x];
      ++len;
    } while (x != s);
    q = std::lcm(q, static_cast<std::int64_t>(len));
  }
  const std::int64_t total = q * t1;
  if (total > q_cap)
    throw CapExceededError("agency exists but needs " + std::to_string(total) +
                           " steps, over the cap of " + std::to_string(q_cap));

  Agency a;
  a.k = n;
  a.T = static_cast<int>(total);
  a.allow_parking = false;
  a.schedule.assign(n, std::vector<int>(a.T + 1));
  for (int i = 0; i < n; ++i) {
    int x = i;
    a.schedule[i][0] = x;
    for (int t = 0; t < a.T; ++t) {
      x = step_perms[t % t1][x];
      a.schedule[i][t + 1] = x;
    }
  }
  require_feasible(g, a, "full_occupancy_noparking_agency");
  return a;
}

int tree_max_agents(const Graph& g) {
  if (!is_tree(g)) throw InputError("tree_max_agents requires a tree");
  if (g.n() <= 2) return 1;
  const auto s = stretch_metrics(g);
  int best = g.n();  // every candidate below is smaller
  if (s.yy) best = std::min(best, g.n() - *s.yy - 1);
  if (s.ly) best = std::min(best, g.n() - *s.ly);
  if (s.ll) best = std::min(best, g.n() - *s.ll + 1);
  return best;
}

namespace {

// Labeled configuration-space BFS on a tree: one agent slides into an
// adjacent vacancy per step.
struct ConfigSpace {
  const Graph& g;
  int k;

  explicit ConfigSpace(const Graph& graph, int agents) : g(graph), k(agents) {
    if (g.n() > 15) throw CapExceededError("configuration search capped at n <= 15");
    std::int64_t states = 1;
    for (int i = 0; i < k; ++i) states *= g.n() - i;
    if (states > 4'000'000)
      throw CapExceededError("configuration space too large: " + std::to_string(states));
  }

  std::uint64_t key(const std::vector<int>& pos) const {
    std::uint64_t out = 0;
    for (int i = 0; i < k; ++i) out |= static_cast<std::uint64_t>(pos[i]) << (4 * i);
    return out;
  }

  void for_each_move(const std::vector<int>& pos,
                     const std::function<void(int agent, int to)>& fn) const {
    std::vector<char> occupied(g.n(), 0);
    for (int v : pos) occupied[v] = 1;
    for (int i = 0; i < k; ++i)
      for (int w : g.neighbors(pos[i]))
        if (!occupied[w]) fn(i, w);
  }

  // BFS until `target` holds; returns the move path, or nullopt.
  std::optional<std::vector<PuzzleMove>> path_to(
      const std::vector<int>& start,
      const std::function<bool(const std::vector<int>&)>& target) const {
    if (target(start)) return std::vector<PuzzleMove>{};
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, PuzzleMove>> parent;
    std::deque<std::vector<int>> queue{start};
    parent[key(start)] = {key(start), {-1, -1, -1}};
    while (!queue.empty()) {
      auto pos = queue.front();
      queue.pop_front();
      std::optional<std::vector<int>> hit;
      for_each_move(pos, [&](int agent, int to) {
        if (hit) return;
        auto next = pos;
        next[agent] = to;
        const auto nk = key(next);
        if (parent.count(nk)) return;
        parent[nk] = {key(pos), {agent, pos[agent], to}};
        if (target(next))
          hit = next;
        else
          queue.push_back(next);
      });
      if (hit) {
        std::vector<PuzzleMove> moves;
        std::uint64_t cur = key(*hit);
        while (parent[cur].second.agent != -1) {
          moves.push_back(parent[cur].second);
          cur = parent[cur].first;
        }
        std::reverse(moves.begin(), moves.end());
        return moves;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

TreePuzzleResult tree_puzzle_agency(const Graph& g, int k) {
  if (!is_tree(g)) throw InputError("tree_puzzle_agency requires a tree");
  const int max_k = tree_max_agents(g);
  if (k < 1 || k > max_k)
    throw InputError("k = " + std::to_string(k) + " refused: the stretch formula allows at most " +
                     std::to_string(max_k) + " agents on this tree");
  const int n = g.n();

  if (n == 1) {
    Agency a{1, 1, true, {{0, 0}}};
    return {a, {}};
  }

  ConfigSpace space(g, k);
  // Find a start whose component lets every agent reach every node; scan
  // placements in lexicographic order, skipping components already seen.
  std::set<std::uint64_t> rejected;
  std::vector<int> start;
  {
    std::vector<int> pos(k);
    std::function<bool(int)> choose = [&](int i) -> bool {
      if (i == k) {
        const auto k0 = space.key(pos);
        if (rejected.count(k0)) return false;
        // Explore the component, tracking which (agent, node) pairs occur.
        std::vector<std::uint32_t> realized(k, 0);
        std::set<std::uint64_t> seen{k0};
        std::deque<std::vector<int>> queue{pos};
        while (!queue.empty()) {
          auto cur = queue.front();
          queue.pop_front();
          for (int a = 0; a < k; ++a) realized[a] |= 1u << cur[a];
          space.for_each_move(cur, [&](int agent, int to) {
            auto next = cur;
            next[agent] = to;
            if (seen.insert(space.key(next)).second) queue.push_back(next);
          });
        }
        const std::uint32_t full = (1u << n) - 1;
        bool good = true;
        for (int a = 0; a < k; ++a)
          if (realized[a] != full) good = false;
        if (good) {
          start = pos;
          return true;
        }
        rejected.insert(seen.begin(), seen.end());
        return false;
      }
      for (int v = 0; v < n; ++v) {
        if (std::find(pos.begin(), pos.begin() + i, v) != pos.begin() + i) continue;
        pos[i] = v;
        if (choose(i + 1)) return true;
      }
      return false;
    };
    if (!choose(0))
      throw InfeasibleError("no placement of " + std::to_string(k) +
                            " agents admits full coverage on this tree");
  }

  std::vector<PuzzleMove> moves;
  std::vector<std::uint32_t> covered(k, 0);
  std::vector<int> pos = start;
  auto absorb = [&](const std::vector<PuzzleMove>& path) {
    for (const auto& mv : path) {
      moves.push_back(mv);
      pos[mv.agent] = mv.to;
      covered[mv.agent] |= 1u << mv.to;
    }
  };
  for (int a = 0; a < k; ++a) covered[a] |= 1u << pos[a];

  const std::uint32_t full = (1u << n) - 1;
  for (int a = 0; a < k; ++a) {
    while (covered[a] != full) {
      const std::uint32_t missing = full & ~covered[a];
      auto path = space.path_to(
          pos, [&](const std::vector<int>& p) { return (missing >> p[a]) & 1; });
      if (!path) throw InfeasibleError("coverage search failed unexpectedly");
      absorb(*path);
    }
  }
  // Return everyone to the start.
  auto back = space.path_to(pos, [&](const std::vector<int>& p) { return p == start; });
  if (!back) throw InfeasibleError("return path missing despite reversible moves");
  absorb(*back);

  const int T = static_cast<int>(moves.size());
  Agency a;
  a.k = k;
  a.T = std::max(T, 1);
  a.allow_parking = true;
  a.schedule.assign(k, std::vector<int>(a.T + 1));
  std::vector<int> cur = start;
  for (int i = 0; i < k; ++i) a.schedule[i][0] = cur[i];
  for (int t = 0; t < a.T; ++t) {
    if (t < T) cur[moves[t].agent] = moves[t].to;
    for (int i = 0; i < k; ++i) a.schedule[i][t + 1] = cur[i];
  }
  require_feasible(g, a, "tree_puzzle_agency");

  TreePuzzleResult result;
  result.agency = a;
  for (const auto& mv : moves) result.plan.push_back({mv});
  return result;
}

}  // namespace synctsp
