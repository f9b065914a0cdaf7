#include "synctsp/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "synctsp/errors.hpp"

namespace synctsp {

namespace {

Graph tree_from_pruefer(const std::vector<int>& code, int n) {
  std::vector<int> deg(n, 1);
  for (int v : code) ++deg[v];
  std::vector<Edge> edges;
  std::vector<char> used(n, 0);
  for (int v : code) {
    int leaf = -1;
    for (int u = 0; u < n; ++u)
      if (deg[u] == 1 && !used[u]) {
        leaf = u;
        break;
      }
    edges.push_back(make_edge(leaf, v));
    used[leaf] = 1;
    --deg[v];
  }
  int a = -1, b = -1;
  for (int u = 0; u < n; ++u)
    if (!used[u] && deg[u] == 1) (a == -1 ? a : b) = u;
  edges.push_back(make_edge(a, b));
  return Graph(n, edges);
}

// AHU encoding of a rooted tree; isomorphic rooted trees get equal strings.
std::string ahu_encode(const Graph& g, int root, int parent) {
  std::vector<std::string> child_codes;
  for (int w : g.neighbors(root))
    if (w != parent) child_codes.push_back(ahu_encode(g, w, root));
  std::sort(child_codes.begin(), child_codes.end());
  std::string out = "(";
  for (const auto& c : child_codes) out += c;
  out += ")";
  return out;
}

std::vector<int> tree_centers(const Graph& g) {
  const int n = g.n();
  if (n == 1) return {0};
  std::vector<int> deg(n), layer, next;
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int left = n;
  while (left > 2) {
    next.clear();
    for (int v : layer) {
      removed[v] = 1;
      --left;
      for (int w : g.neighbors(v))
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = next;
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string tree_canonical_key(const Graph& g) {
  auto centers = tree_centers(g);
  if (centers.size() == 1) return ahu_encode(g, centers[0], -1);
  std::string a = ahu_encode(g, centers[0], centers[1]);
  std::string b = ahu_encode(g, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

}  // namespace

std::vector<Graph> all_trees(int n) {
  if (n < 1) throw InputError("all_trees needs n >= 1");
  if (n == 1) return {Graph(1, {})};
  if (n == 2) return {Graph(2, {{0, 1}})};
  // Enumerate labeled trees via Pruefer codes, dedupe by canonical key.
  // TODO: switch to the rooted-tree successor generator if n > 10 is ever
  // needed; n^(n-2) labeled trees is fine up to desk scale.
  std::map<std::string, Graph> seen;
  std::vector<int> code(n - 2, 0);
  while (true) {
    Graph t = tree_from_pruefer(code, n);
    seen.emplace(tree_canonical_key(t), t);
    int i = n - 3;
    while (i >= 0 && code[i] == n - 1) code[i--] = 0;
    if (i < 0) break;
    ++code[i];
  }
  std::vector<Graph> out;
  for (auto& [key, tree] : seen) out.push_back(std::move(tree));
  return out;
}

std::vector<Graph> all_connected_graphs(int n) {
  if (n < 1) throw InputError("all_connected_graphs needs n >= 1");
  if (n > 7)
    throw CapExceededError("connected-graph enumeration capped at n <= 7");
  // Edge index table for the bitmask representation.
  std::vector<Edge> all_edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_edges.push_back({u, v});
  const int m = static_cast<int>(all_edges.size());
  std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i)
    idx[all_edges[i].first][all_edges[i].second] =
        idx[all_edges[i].second][all_edges[i].first] = i;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto connected_mask = [&](std::uint32_t mask) {
    std::uint32_t reached = 1;  // node 0
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < m; ++i) {
        if (!(mask >> i & 1)) continue;
        const auto& [u, v] = all_edges[i];
        std::uint32_t bits = (1u << u) | (1u << v);
        if ((reached & bits) && (reached & bits) != bits) {
          reached |= bits;
          grew = true;
        }
      }
    }
    return reached == (n >= 32 ? ~0u : (1u << n) - 1);
  };

  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (!connected_mask(mask)) continue;
    std::uint32_t best = mask;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) image |= 1u << idx[p[all_edges[i].first]][p[all_edges[i].second]];
      best = std::min(best, image);
    }
    if (best != mask) continue;  // not the canonical representative
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) edges.push_back(all_edges[i]);
    out.emplace_back(n, edges);
  }
  return out;
}

std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g) {
  const int n = g.n();
  if (n == 1) return std::nullopt;  // a cycle needs length >= 3
  if (n == 2) return std::nullopt;
  std::vector<int> path{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, int v) -> bool {
    if (static_cast<int>(path.size()) == n) {
      if (g.has_edge(v, 0)) {
        auto cycle = path;
        cycle.push_back(0);
        found = cycle;
        return true;
      }
      return false;
    }
    for (int w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (self(self, w)) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

std::vector<std::vector<int>> graph_automorphisms(const Graph& g) {
  const int n = g.n();
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (n > 8) return {identity};
  std::vector<std::vector<int>> out;
  std::vector<int> perm = identity;
  do {
    bool ok = true;
    for (const auto& [u, v] : g.edges())
      if (!g.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    // Edge count is preserved by a bijection, so mapping edges to edges
    // suffices for automorphism.
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace synctsp
