#pragma once

#include <optional>
#include <vector>

#include "synctsp/graph.hpp"

namespace synctsp {

/// All non-isomorphic trees on n nodes (n >= 1), deterministic order.
std::vector<Graph> all_trees(int n);

/// All non-isomorphic connected graphs on n nodes; capped at n <= 7
/// (brute-force canonicalization over all node permutations).
std::vector<Graph> all_connected_graphs(int n);

/// First Hamiltonian cycle in deterministic search order, as a closed node
/// sequence of length n+1, or nullopt if none exists.
std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g);

/// All automorphisms of g as node permutations; brute force, n <= 8
/// recommended (larger inputs return just the identity).
std::vector<std::vector<int>> graph_automorphisms(const Graph& g);

}  // namespace synctsp
