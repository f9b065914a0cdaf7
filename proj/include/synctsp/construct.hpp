#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "synctsp/agency.hpp"
#include "synctsp/graph.hpp"

namespace synctsp {

struct BuiltAgency {
  Graph graph;
  Agency agency;
};

/// k = n agents following a given Hamiltonian cycle at delays 0..n-1.
/// The cycle may be given open (n nodes) or closed (n+1 nodes).
Agency hamiltonian_delay_agency(const Graph& g, std::vector<int> cycle);

/// Tree family with r internal degree-4 nodes arranged on a path, every
/// other node a leaf that carries two pendant children; the schedule walks
/// each edge twice, parks once at every first pendant, and staggers
/// k = 4r+3 agents at delays of 4. Achieves T/k = 4 with T = 16r+12.
BuiltAgency build_example1(int r);

/// Tree family on a spine of 2q edges with pendant paths, scheduled with
/// no parking at T = 2n-2 and k = 2q+2 = T/5 agents at delays of 5.
BuiltAgency build_example2(int q);

/// Per-node parking durations in 1..4 for nodes outside the contracted
/// spanning tree; each cycle's sum is a multiple of 4.
struct ParkingVector {
  std::map<int, int> park;

  int cycle_sum(const std::vector<int>& cycle_nodes) const;
};

/// Smallest per-cycle budget: 4 * ceil(s/4) time units over the s cycle
/// nodes that are not tree-edge endpoints.
int minimal_cycle_budget(int s);

/// All-ones except one designated node per cycle absorbing the remainder,
/// so each cycle sum equals minimal_cycle_budget(s).
ParkingVector minimal_parking_vector(const Graph& g, const TwoFactor& f,
                                     const ContractedForest& cf);

struct CubicAgencyResult {
  Agency agency;
  TwoFactor factor;
  ContractedForest forest;
  ParkingVector minimal;
  ParkingVector padded;
  std::vector<int> base_tour;  // before parking expansion
};

/// For a 3-regular 3-edge-connected graph: a girth->=5 2-factor plus a
/// contracted spanning tree give a base tour (tree edges twice, cycle
/// edges once); a padded 4-cyclic parking vector stretches it to T = 2n
/// exactly, and k = n/2 agents run it at delays of 4.
CubicAgencyResult cubic_agency(const Graph& g, std::uint64_t factor_budget = 50'000'000);

/// k = n agency with parking; exists iff the graph is 2-edge-connected.
/// Each unit step rotates one cycle through the guided agent's next edge;
/// the whole move sequence is replayed backwards to restore positions.
Agency full_occupancy_agency(const Graph& g);

/// k = n agency without parking; exists iff the edges contained in some
/// 2-factor form a connected spanning subgraph. Each unit step rotates a
/// full 2-factor; the coverage phase is repeated until the induced node
/// permutation closes. Refuses (cap) if the total exceeds q_cap steps.
Agency full_occupancy_noparking_agency(const Graph& g, std::int64_t q_cap = 1'000'000);

/// Largest k admitting a feasible agency with parking on a tree, from the
/// stretch metrics: min { n-YY-1, n-LY, n-LL+1 }, absent terms imposing no
/// constraint; n <= 2 gives 1.
int tree_max_agents(const Graph& g);

struct PuzzleMove {
  int agent;
  int from;
  int to;
};

/// Move plan plus the resulting agency: one agent slides into an adjacent
/// vacancy per time unit while the rest park.
struct TreePuzzleResult {
  Agency agency;
  std::vector<std::vector<PuzzleMove>> plan;
};

/// k agents on a tree (k <= tree_max_agents) each visiting every node and
/// returning; relocations are found by breadth-first search over the
/// labeled configuration space.
TreePuzzleResult tree_puzzle_agency(const Graph& g, int k);

}  // namespace synctsp
