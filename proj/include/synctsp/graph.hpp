#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace synctsp {

/// Unordered node pair, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on nodes 0..n-1. Edges are canonicalized
/// (ordered pairs, sorted, duplicates rejected), so equal graphs compare
/// equal. Immutable after construction.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  bool has_node(int v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Node-disjoint cycles covering every node of the host graph; each cycle
/// is listed starting at its smallest node, second element the smaller
/// neighbor, cycles ordered by smallest node.
struct TwoFactor {
  std::vector<std::vector<int>> cycles;

  std::vector<Edge> edge_set() const;
};

/// Spanning tree of the graph obtained by shrinking every cycle of a
/// two-factor to a single super-node. tree_edges are original graph edges
/// disjoint from the two-factor; cycle_of maps node -> cycle index.
struct ContractedForest {
  std::vector<Edge> tree_edges;
  std::vector<int> cycle_of;
};

/// Longest degree-2-interior path metrics of a tree, by endpoint type
/// (joint = degree >= 3, leaf = degree 1). Values count nodes. An absent
/// field means no such path exists.
struct StretchReport {
  std::optional<int> yy;
  std::optional<int> ly;
  std::optional<int> ll;
};

struct StarEdge {
  int u;
  int v;                    // deleting uv leaves v's component a star centered at v
  std::vector<int> leaves;  // the star's leaves, ascending
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Edges whose removal increases the number of connected components.
std::vector<Edge> bridges(const Graph& g);

bool is_two_edge_connected(const Graph& g);
bool is_three_edge_connected(const Graph& g);
bool is_regular(const Graph& g, int degree);

/// For a tree with n >= 3: an edge uv such that deleting it leaves the
/// component of v a star centered at v. Found from an endpoint of a
/// longest path.
StarEdge find_star_edge(const Graph& g);

void check_two_factor(const Graph& g, const TwoFactor& f);  // throws InputError

/// All 2-factors of g in deterministic order, at most `limit` of them.
/// Enumeration backtracks over the sorted edge list; instances beyond
/// max_n are refused.
std::vector<TwoFactor> enumerate_two_factors(const Graph& g, std::size_t limit,
                                             int max_n = 16);

enum class FactorSearchStatus { Found, ProvenAbsent, CapExceeded };

struct FactorSearchResult {
  FactorSearchStatus status;
  std::optional<TwoFactor> factor;
};

/// First 2-factor (in enumeration order) all of whose cycles have length
/// >= 5. ProvenAbsent means the full enumeration finished with no hit;
/// CapExceeded means the step budget ran out first.
FactorSearchResult find_girth5_two_factor(const Graph& g,
                                          std::uint64_t step_budget = 50'000'000);

/// Deterministic spanning tree of the cycle-contracted graph, built from
/// non-factor edges taken smallest-first.
ContractedForest contract_cycles(const Graph& g, const TwoFactor& f);

/// Edges of g that lie in at least one 2-factor.
std::vector<Edge> two_factor_edge_union(const Graph& g, int max_n = 16);

/// True iff the union of all edges lying in at least one 2-factor is a
/// connected spanning subgraph of g.
bool two_factor_union_spans(const Graph& g, int max_n = 16);

StretchReport stretch_metrics(const Graph& g);

}  // namespace synctsp
