#pragma once

#include <optional>
#include <string>
#include <vector>

#include "synctsp/graph.hpp"
#include "synctsp/rational.hpp"

namespace synctsp {

/// k synchronized closed walks over a host graph, one row per agent, each
/// of length T+1 with row[T] == row[0]. Time indices are read modulo T.
struct Agency {
  int k = 0;
  int T = 0;
  bool allow_parking = true;
  std::vector<std::vector<int>> schedule;
};

struct WalkViolation {
  int step;            // first offending index t
  std::string reason;
};

/// Checks the walk condition against g: each step either parks (if
/// allowed) or follows an edge. Returns the first violation, if any.
std::optional<WalkViolation> validate_walk(const Graph& g, const std::vector<int>& nodes,
                                           bool allow_parking);

/// Valid walk that is closed and visits every node of g at least once.
bool is_tour(const Graph& g, const std::vector<int>& nodes, bool allow_parking);

struct CrashEvent {
  enum class Kind { Node, Edge };
  Kind kind;
  int agent_a;  // agent_a < agent_b
  int agent_b;
  int time;
  int u;  // node crash: u == v == the node; edge crash: the edge endpoints, u < v
  int v;
};

/// Structural sanity of an agency against its host graph (row count, row
/// lengths, node ids in range). Returns a message on failure.
std::optional<std::string> agency_structure_error(const Graph& g, const Agency& a);

/// Every node crash (same node, same time) and edge crash (opposite
/// traversals of one edge in the same step), cyclically over t in 0..T-1,
/// sorted by (time, agent_a, agent_b). Empty iff the agency is crash-free.
std::vector<CrashEvent> find_crashes(const Graph& g, const Agency& a);

/// True iff every row is a tour and no crash exists.
bool is_feasible(const Graph& g, const Agency& a);

/// alpha1 = n/k, alpha2 = T/n, alpha = max of the two, all exact.
struct StrengthReport {
  Rational alpha1;
  Rational alpha2;
  Rational alpha;
};

/// Requires a feasible agency; also asserts the sandwich
/// sqrt(T/k) <= alpha <= T/k in exact arithmetic (squared form).
StrengthReport strength(const Graph& g, const Agency& a);

/// Rotate every row of a by the same cyclic offset (used by tests and by
/// the delay-based constructions).
Agency rotate_agency(const Agency& a, int offset);

}  // namespace synctsp
