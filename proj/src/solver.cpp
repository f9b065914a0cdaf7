#include "synctsp/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "synctsp/enumerate.hpp"
#include "synctsp/errors.hpp"

namespace synctsp {

SolverCaps caps_from_env(SolverCaps base) {
  const char* env = std::getenv("SYNCTSP_CAPS");
  if (!env) return base;
  int n, k, t;
  if (std::sscanf(env, "%d,%d,%d", &n, &k, &t) != 3)
    throw InputError("SYNCTSP_CAPS must be 'n,k,t'");
  base.max_n = n;
  base.max_k = k;
  base.max_t = t;
  return base;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
    return std::hash<std::uint64_t>()(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
  }
};

struct Instance {
  const Graph& g;
  int k;
  int T;
  bool parking;
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<int>> options;  // per node: parking first, then neighbors
  bool tree = false;
  std::vector<std::uint32_t> edge_side;   // per tree edge: node mask of one side
  std::uint32_t full_mask = 0;

  Instance(const Graph& graph, int agents, int horizon, bool allow_parking)
      : g(graph), k(agents), T(horizon), parking(allow_parking) {
    const int n = g.n();
    full_mask = (n >= 32) ? ~0u : ((1u << n) - 1);
    dist.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
      std::vector<int> queue{s};
      dist[s][s] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v))
          if (dist[s][w] == -1) {
            dist[s][w] = dist[s][v] + 1;
            queue.push_back(w);
          }
      }
    }
    options.resize(n);
    for (int v = 0; v < n; ++v) {
      if (parking) options[v].push_back(v);
      for (int w : g.neighbors(v)) options[v].push_back(w);
    }
    tree = is_tree(g);
    if (tree) {
      // For each tree edge, the node set on the first-endpoint side after
      // removing it; drives the subtree-visit lower bound.
      for (const auto& [u, v] : g.edges()) {
        std::uint32_t mask = 1u << u;
        std::vector<int> stack{u};
        std::vector<char> seen(n, 0);
        seen[u] = seen[v] = 1;
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          for (int w : g.neighbors(x)) {
            if (seen[w]) continue;
            seen[w] = 1;
            mask |= 1u << w;
            stack.push_back(w);
          }
        }
        edge_side.push_back(mask);
      }
    }
  }

  // Lossless lower bound on the time agent still needs: it must reach every
  // uncovered node and finish at its start. On trees, a closed-up route
  // touching node set S crosses every edge separating S twice, minus the
  // direct way home.
  int needed(int pos, int start, std::uint32_t covered) const {
    const std::uint32_t uncovered = full_mask & ~covered;
    int bound;
    if (uncovered == 0) {
      bound = dist[pos][start];
    } else {
      int md = 0;
      for (int x = 0; x < g.n(); ++x)
        if (uncovered >> x & 1) md = std::max(md, dist[pos][x] + dist[x][start]);
      // Each step covers at most one new node and the final step lands on
      // the already-covered start, so one extra step is forced.
      bound = std::max(md, std::popcount(uncovered) + 1);
    }
    if (tree) {
      const std::uint32_t s_mask = uncovered | (1u << pos) | (1u << start);
      int steiner = 0;
      for (std::uint32_t side : edge_side)
        if ((s_mask & side) && (s_mask & ~side)) ++steiner;
      bound = std::max(bound, 2 * steiner - dist[pos][start]);
    }
    return bound;
  }
};

struct StartSearch {
  const Instance& inst;
  const std::vector<int>& start;
  std::atomic<int>* best_found;  // smallest start index with a witness, or INT_MAX
  int my_index;
  std::uint64_t expanded = 0;
  bool aborted = false;
  std::vector<std::vector<int>> history;
  std::vector<std::uint32_t> covered;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> memo;
  bool memo_usable;
  std::optional<Agency> witness;

  StartSearch(const Instance& instance, const std::vector<int>& s,
              std::atomic<int>* best, int index)
      : inst(instance), start(s), best_found(best), my_index(index) {
    covered.resize(inst.k);
    for (int i = 0; i < inst.k; ++i) covered[i] = 1u << start[i];
    history.reserve(inst.T + 2);  // references into it stay valid across push_back
    history.push_back(start);
    memo_usable = inst.g.n() <= 16 && inst.T <= 31 && 4 * inst.k + 5 <= 64 &&
                  static_cast<std::int64_t>(inst.g.n()) * inst.k <= 64;
  }

  std::pair<std::uint64_t, std::uint64_t> key(int t) const {
    std::uint64_t a = static_cast<std::uint64_t>(t);
    const auto& pos = history.back();
    for (int i = 0; i < inst.k; ++i)
      a |= static_cast<std::uint64_t>(pos[i]) << (5 + 4 * i);
    std::uint64_t b = 0;
    for (int i = 0; i < inst.k; ++i)
      b |= static_cast<std::uint64_t>(covered[i]) << (inst.g.n() * i);
    return {a, b};
  }

  bool run() { return dfs(0); }

  bool dfs(int t) {
    if (best_found && best_found->load(std::memory_order_relaxed) < my_index) {
      aborted = true;
      return false;
    }
    ++expanded;
    const auto& pos = history.back();
    if (t == inst.T) {
      if (pos != start) return false;
      for (int i = 0; i < inst.k; ++i)
        if (covered[i] != inst.full_mask) return false;
      Agency a;
      a.k = inst.k;
      a.T = inst.T;
      a.allow_parking = inst.parking;
      a.schedule.assign(inst.k, std::vector<int>(inst.T + 1));
      for (int i = 0; i < inst.k; ++i)
        for (int tt = 0; tt <= inst.T; ++tt) a.schedule[i][tt] = history[tt][i];
      witness = a;
      return true;
    }
    for (int i = 0; i < inst.k; ++i)
      if (inst.needed(pos[i], start[i], covered[i]) > inst.T - t) return false;
    if (memo_usable && !memo.insert(key(t)).second) return false;
    std::vector<int> next(inst.k);
    return assign(t, 0, next);
  }

  // Choose agent `i`'s next node; earlier agents' choices are in next[0..i).
  bool assign(int t, int i, std::vector<int>& next) {
    const auto& pos = history.back();
    if (i == inst.k) {
      std::vector<std::uint32_t> saved = covered;
      for (int j = 0; j < inst.k; ++j) covered[j] |= 1u << next[j];
      history.push_back(next);
      const bool hit = dfs(t + 1);
      history.pop_back();
      if (!hit) covered = saved;
      return hit;
    }
    for (int cand : inst.options[pos[i]]) {
      // Per-candidate coverage bound: the agent must still finish from the
      // candidate node within the remaining T - t - 1 steps.
      if (inst.needed(cand, start[i], covered[i] | (1u << cand)) > inst.T - t - 1)
        continue;
      bool ok = true;
      for (int j = 0; j < i; ++j) {
        if (next[j] == cand) {
          ok = false;
          break;
        }
        if (cand == pos[j] && next[j] == pos[i] && pos[i] != pos[j]) {
          ok = false;  // head-on swap across an edge
          break;
        }
      }
      if (!ok) continue;
      next[i] = cand;
      if (assign(t, i + 1, next)) return true;
    }
    return false;
  }
};

std::vector<std::vector<int>> canonical_starts(const Graph& g, int k) {
  const auto auts = graph_automorphisms(g);
  std::vector<std::vector<int>> starts;
  std::vector<int> combo(k);
  std::function<void(int, int)> gen = [&](int idx, int from) {
    if (idx == k) {
      // Keep the tuple only if it is minimal in its automorphism orbit.
      std::vector<int> image(k);
      for (const auto& sigma : auts) {
        for (int i = 0; i < k; ++i) image[i] = sigma[combo[i]];
        std::sort(image.begin(), image.end());
        if (image < combo) return;
      }
      starts.push_back(combo);
      return;
    }
    for (int v = from; v < g.n(); ++v) {
      combo[idx] = v;
      gen(idx + 1, v + 1);
    }
  };
  gen(0, 0);
  return starts;
}

}  // namespace

SolveResult decide_agency(const Graph& g, int k, int T, bool allow_parking,
                          const SolverCaps& caps, int threads) {
  if (k < 1 || T < 1) throw InputError("decide_agency needs k >= 1 and T >= 1");
  if (!caps.force && (g.n() > caps.max_n || k > caps.max_k || T > caps.max_t))
    return {SolveStatus::CapExceeded, std::nullopt, 0};
  if (g.n() > 31)
    throw CapExceededError("exhaustive search limited to n <= 31 even with --force");

  // Cheap certified absences: more agents than nodes collide at t = 0; a
  // covering closed walk needs at least n steps; a tree tour crosses every
  // edge twice.
  if (k > g.n() || T < g.n() || !is_connected(g))
    return {SolveStatus::ProvenAbsent, std::nullopt, 0};
  if (is_tree(g) && T < 2 * g.n() - 2)
    return {SolveStatus::ProvenAbsent, std::nullopt, 0};

  Instance inst(g, k, T, allow_parking);
  const auto starts = canonical_starts(g, k);
  std::atomic<int> best_found{std::numeric_limits<int>::max()};
  std::vector<std::optional<Agency>> found(starts.size());
  std::atomic<std::uint64_t> total_expanded{0};
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= starts.size()) return;
      if (best_found.load() < static_cast<int>(idx)) continue;
      StartSearch search(inst, starts[idx], &best_found, static_cast<int>(idx));
      if (search.run()) {
        found[idx] = search.witness;
        int expect = best_found.load();
        while (expect > static_cast<int>(idx) &&
               !best_found.compare_exchange_weak(expect, static_cast<int>(idx))) {
        }
      }
      total_expanded.fetch_add(search.expanded);
    }
  };

  threads = std::max(1, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SolveResult result;
  result.nodes_expanded = total_expanded.load();
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (found[i]) {
      result.status = SolveStatus::Witness;
      result.witness = found[i];
      if (!is_feasible(g, *result.witness))
        throw InfeasibleError("solver produced an infeasible witness");
      return result;
    }
  }
  result.status = SolveStatus::ProvenAbsent;
  return result;
}

std::optional<int> min_horizon(const Graph& g, int k, int t_max, bool allow_parking,
                               const SolverCaps& caps, int threads) {
  for (int T = 1; T <= t_max; ++T) {
    const auto r = decide_agency(g, k, T, allow_parking, caps, threads);
    if (r.status == SolveStatus::CapExceeded)
      throw CapExceededError("min_horizon: instance over solver caps at T = " +
                             std::to_string(T));
    if (r.status == SolveStatus::Witness) return T;
  }
  return std::nullopt;
}

int max_agents_for_horizon(const Graph& g, int T, int k_max, bool allow_parking,
                           const SolverCaps& caps, int threads) {
  int best = 0;
  for (int k = 1; k <= k_max; ++k) {
    const auto r = decide_agency(g, k, T, allow_parking, caps, threads);
    if (r.status == SolveStatus::CapExceeded)
      throw CapExceededError("max_agents_for_horizon: instance over solver caps at k = " +
                             std::to_string(k));
    if (r.status != SolveStatus::Witness) break;  // feasibility is monotone in k
    best = k;
  }
  return best;
}

int config_reachability_max_k(const Graph& g, int max_n) {
  if (!is_tree(g)) throw InputError("config_reachability_max_k requires a tree");
  if (g.n() > max_n)
    throw CapExceededError("configuration reachability capped at n <= " +
                           std::to_string(max_n));
  const int n = g.n();
  const std::uint32_t full = (1u << n) - 1;

  for (int k = n; k >= 1; --k) {
    auto key = [&](const std::vector<int>& pos) {
      std::uint64_t out = 0;
      for (int i = 0; i < k; ++i) out |= static_cast<std::uint64_t>(pos[i]) << (4 * i);
      return out;
    };
    std::unordered_set<std::uint64_t> visited;
    bool good = false;

    std::function<bool(std::vector<int>&, std::uint32_t, int)> scan =
        [&](std::vector<int>& pos, std::uint32_t used, int idx) -> bool {
      if (idx == k) {
        if (visited.count(key(pos))) return false;
        // Flood the component, recording which node each agent can occupy.
        std::vector<std::uint32_t> realized(k, 0);
        std::deque<std::vector<int>> queue{pos};
        visited.insert(key(pos));
        while (!queue.empty()) {
          auto cur = queue.front();
          queue.pop_front();
          std::uint32_t occ = 0;
          for (int i = 0; i < k; ++i) {
            realized[i] |= 1u << cur[i];
            occ |= 1u << cur[i];
          }
          for (int i = 0; i < k; ++i) {
            for (int w : g.neighbors(cur[i])) {
              if (occ >> w & 1) continue;
              auto nxt = cur;
              nxt[i] = w;
              if (visited.insert(key(nxt)).second) queue.push_back(nxt);
            }
          }
        }
        for (int i = 0; i < k; ++i)
          if (realized[i] != full) return false;
        return true;
      }
      for (int v = 0; v < n; ++v) {
        if (used >> v & 1) continue;
        pos[idx] = v;
        if (scan(pos, used | (1u << v), idx + 1)) return true;
      }
      return false;
    };

    std::vector<int> pos(k);
    if (scan(pos, 0, 0)) good = true;
    if (good) return k;
  }
  return 1;  // unreachable: k = 1 on a connected tree always succeeds
}

}  // namespace synctsp
