#pragma once

#include <vector>

#include "synctsp/graph.hpp"

// Independent brute-force reference implementations used to pin expected
// values. These must stay separate from the library code paths they check.
namespace oracles {

/// Bridges by deletion: an edge is a bridge iff removing it increases the
/// number of connected components.
std::vector<synctsp::Edge> naive_bridges(const synctsp::Graph& g);

/// All 2-factors as sorted edge lists, found by filtering every edge
/// subset for spanning 2-regularity. Exponential; n and m stay tiny.
std::vector<std::vector<synctsp::Edge>> brute_two_factors(const synctsp::Graph& g);

/// Hamiltonicity by scanning all node permutations.
bool brute_hamiltonian(const synctsp::Graph& g);

}  // namespace oracles
