#pragma once

#include <cstdint>
#include <optional>

#include "synctsp/agency.hpp"
#include "synctsp/graph.hpp"

namespace synctsp {

/// Instance-size limits for the exhaustive search. `force` lifts them
/// (with a stderr warning from the CLI). SYNCTSP_CAPS="n,k,t" overrides
/// the defaults.
struct SolverCaps {
  int max_n = 8;
  int max_k = 4;
  int max_t = 16;
  bool force = false;
};

SolverCaps caps_from_env(SolverCaps base = {});

enum class SolveStatus { Witness, ProvenAbsent, CapExceeded };

struct SolveResult {
  SolveStatus status = SolveStatus::ProvenAbsent;
  std::optional<Agency> witness;
  std::uint64_t nodes_expanded = 0;
};

/// Exhaustive decision of "is there a feasible agency of k agents under
/// horizon T": depth-first search over crash-free joint steps with
/// per-agent coverage masks, start configurations reduced by agent
/// relabeling and graph automorphisms, and lossless distance/coverage
/// pruning. ProvenAbsent certifies the whole reduced space was searched.
SolveResult decide_agency(const Graph& g, int k, int T, bool allow_parking,
                          const SolverCaps& caps = {}, int threads = 1);

/// Smallest T <= t_max admitting a feasible agency, if any.
std::optional<int> min_horizon(const Graph& g, int k, int t_max,
                               bool allow_parking = true, const SolverCaps& caps = {},
                               int threads = 1);

/// Largest k <= k_max admitting a feasible agency (0 if none); monotone
/// in k because dropping agents preserves feasibility.
int max_agents_for_horizon(const Graph& g, int T, int k_max,
                           bool allow_parking = true, const SolverCaps& caps = {},
                           int threads = 1);

/// Brute-force optimum of the unbounded-horizon tree problem: the largest
/// k for which some component of the labeled configuration graph (one
/// slide into a vacancy per step; slides are reversible) lets every agent
/// reach every node.
int config_reachability_max_k(const Graph& g, int max_n = 9);

}  // namespace synctsp
