#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "synctsp/construct.hpp"
#include "synctsp/enumerate.hpp"
#include "synctsp/errors.hpp"
#include "synctsp/solver.hpp"

// Acceptance criteria. Each case prints exactly one PASS/FAIL line, with
// the measured runtime, and detail lines for any violations found.

using namespace synctsp;
using namespace testgraphs;

namespace {

struct Criterion {
  const char* id;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
  bool ok = true;
  std::vector<std::string> details;

  explicit Criterion(const char* name) : id(name) {}

  void require(bool condition, const std::string& detail) {
    if (!condition) {
      ok = false;
      details.push_back(detail);
    }
  }

  void finish(double budget_seconds) {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::printf("[%s] %s (%.2fs, budget %.0fs)\n", id, ok ? "PASS" : "FAIL", elapsed,
                budget_seconds);
    for (const auto& d : details) std::printf("    %s\n", d.c_str());
    CHECK_MESSAGE(ok, std::string(id));
    CHECK_MESSAGE(elapsed < budget_seconds, (std::string(id) + " runtime"));
  }
};

SolverCaps lifted_caps() {
  SolverCaps caps;
  caps.force = true;
  return caps;
}

// The claim-7 sandwich, exact: alpha <= T/k and alpha^2 >= T/k.
bool sandwich_holds(const Graph& g, const Agency& a) {
  const auto s = strength(g, a);
  const Rational ratio(a.T, a.k);
  return s.alpha <= ratio && s.alpha * s.alpha >= ratio;
}

}  // namespace

TEST_CASE("criterion 01: tight T/k = 4 tree family reproduction") {
  Criterion c("criterion 01");
  for (int r = 1; r <= 3; ++r) {
    const auto [g, a] = build_example1(r);
    c.require(g.n() == 7 * r + 6, "wrong n at r=" + std::to_string(r));
    c.require(a.T == 16 * r + 12, "wrong T at r=" + std::to_string(r));
    c.require(a.k == 4 * r + 3, "wrong k at r=" + std::to_string(r));
    c.require(is_feasible(g, a), "infeasible at r=" + std::to_string(r));
    c.require(Rational(a.T, a.k) == Rational(4), "T/k != 4 at r=" + std::to_string(r));
  }
  c.finish(1.0);
}

TEST_CASE("criterion 02: no-parking T = 2n-2, k = T/5 tree family reproduction") {
  Criterion c("criterion 02");
  for (int q = 1; q <= 3; ++q) {
    const auto [g, a] = build_example2(q);
    c.require(g.n() == 5 * q + 6, "wrong n at q=" + std::to_string(q));
    c.require(a.T == 10 * q + 10 && a.T == 2 * g.n() - 2,
              "wrong T at q=" + std::to_string(q));
    c.require(a.k == 2 * q + 2 && 5 * a.k == a.T, "wrong k at q=" + std::to_string(q));
    c.require(!a.allow_parking && is_feasible(g, a),
              "not no-parking feasible at q=" + std::to_string(q));
    for (const auto& row : a.schedule) {
      std::map<Edge, int> uses;
      for (int t = 0; t < a.T; ++t) {
        if (row[t] == row[t + 1]) c.require(false, "parking step at q=" + std::to_string(q));
        ++uses[make_edge(row[t], row[t + 1])];
      }
      bool twice = uses.size() == static_cast<std::size_t>(g.m());
      for (const auto& [e, count] : uses) twice = twice && count == 2;
      c.require(twice, "edge not traversed exactly twice at q=" + std::to_string(q));
    }
  }
  c.finish(1.0);
}

TEST_CASE("criterion 03: cubic 3-edge-connected construction on K33 and Petersen") {
  Criterion c("criterion 03");
  for (const auto& g : {k33(), petersen()}) {
    const auto r = cubic_agency(g);
    c.require(r.agency.T == 2 * g.n(), "T != 2n");
    c.require(r.agency.k == g.n() / 2, "k != n/2");
    c.require(is_feasible(g, r.agency), "infeasible");
    const auto s = strength(g, r.agency);
    c.require(s.alpha == Rational(2) && s.alpha1 == Rational(2) && s.alpha2 == Rational(2),
              "alpha != 2");
    std::vector<char> in_tree(g.n(), 0);
    for (const auto& [u, v] : r.forest.tree_edges) in_tree[u] = in_tree[v] = 1;
    for (const auto& cyc : r.factor.cycles) {
      int outside = 0;
      for (int v : cyc)
        if (!in_tree[v]) ++outside;
      c.require(r.minimal.cycle_sum(cyc) == minimal_cycle_budget(outside),
                "minimal cycle sum is not r(s)");
      c.require(r.minimal.cycle_sum(cyc) % 4 == 0, "minimal cycle sum not 0 mod 4");
      c.require(r.padded.cycle_sum(cyc) % 4 == 0, "padded cycle sum not 0 mod 4");
    }
  }
  c.finish(30.0);
}

TEST_CASE("criterion 04: tree horizon bound sweep (T/k < 4 expected absent)") {
  Criterion c("criterion 04");
  const auto caps = lifted_caps();
  int instances = 0;
  for (int n = 4; n <= 7; ++n) {
    int index = 0;
    for (const auto& tree : all_trees(n)) {
      for (int k = 1; k <= 3; ++k) {
        for (int T = 1; T <= std::min(15, 4 * k - 1); ++T) {
          ++instances;
          const auto r = decide_agency(tree, k, T, true, caps);
          c.require(r.status == SolveStatus::ProvenAbsent,
                    "feasible agency with T/k < 4: tree n=" + std::to_string(n) + " #" +
                        std::to_string(index) + " k=" + std::to_string(k) +
                        " T=" + std::to_string(T));
        }
      }
      ++index;
    }
  }
  c.details.push_back(std::to_string(instances) + " instances swept");
  c.finish(600.0);
}

TEST_CASE("criterion 05: shortest-horizon tree bound sweep (T = 2n-2, k > T/5)") {
  Criterion c("criterion 05");
  const auto caps = lifted_caps();
  int instances = 0;
  for (int n = 4; n <= 7; ++n) {
    const int T = 2 * n - 2;
    int index = 0;
    for (const auto& tree : all_trees(n)) {
      for (int k = T / 5 + 1; k <= 4; ++k) {
        ++instances;
        const auto r = decide_agency(tree, k, T, true, caps);
        c.require(r.status == SolveStatus::ProvenAbsent,
                  "feasible agency with T = 2n-2, k > T/5: tree n=" + std::to_string(n) +
                      " #" + std::to_string(index) + " k=" + std::to_string(k) +
                      " T=" + std::to_string(T));
      }
      ++index;
    }
  }
  c.details.push_back(std::to_string(instances) + " instances swept");
  c.finish(600.0);
}

TEST_CASE("criterion 06: alpha = 1 iff Hamiltonian, over all connected graphs n <= 6") {
  Criterion c("criterion 06");
  const auto caps = lifted_caps();
  int graphs = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& g : all_connected_graphs(n)) {
      ++graphs;
      const bool search_hit =
          decide_agency(g, g.n(), g.n(), true, caps).status == SolveStatus::Witness;
      const bool has_cycle = find_hamiltonian_cycle(g).has_value();
      c.require(search_hit == has_cycle,
                "disagreement on a graph with n=" + std::to_string(n) +
                    " m=" + std::to_string(g.m()));
    }
  }
  c.details.push_back(std::to_string(graphs) + " graphs checked");
  c.finish(600.0);
}

TEST_CASE("criterion 07: strength sandwich over every agency the suite produces") {
  Criterion c("criterion 07");
  const auto caps = lifted_caps();
  int agencies = 0;
  auto check = [&](const Graph& g, const Agency& a, const std::string& what) {
    ++agencies;
    if (!is_feasible(g, a)) {
      c.require(false, what + ": not feasible");
      return;
    }
    c.require(sandwich_holds(g, a), what + ": sandwich violated");
  };
  for (int r = 1; r <= 3; ++r) {
    const auto b = build_example1(r);
    check(b.graph, b.agency, "example1 r=" + std::to_string(r));
  }
  for (int q = 1; q <= 3; ++q) {
    const auto b = build_example2(q);
    check(b.graph, b.agency, "example2 q=" + std::to_string(q));
  }
  for (const auto& g : {k33(), petersen(), prism()})
    check(g, cubic_agency(g).agency, "cubic");
  check(complete(3), hamiltonian_delay_agency(complete(3), {0, 1, 2, 0}), "ham-delay K3");
  check(cycle(5), hamiltonian_delay_agency(cycle(5), {0, 1, 2, 3, 4}), "ham-delay C5");
  for (int n = 3; n <= 5; ++n)
    for (const auto& g : all_connected_graphs(n))
      if (is_two_edge_connected(g)) check(g, full_occupancy_agency(g), "full-occupancy");
  check(cycle(6), full_occupancy_noparking_agency(cycle(6)), "noparking C6");
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : all_trees(n))
      check(t, tree_puzzle_agency(t, tree_max_agents(t)).agency, "tree-puzzle");
  // Solver witnesses, including the ones the bound sweeps uncover.
  for (auto [g, k, T] : std::initializer_list<std::tuple<Graph, int, int>>{
           {complete(3), 3, 3}, {star(3), 2, 6}, {star(4), 2, 8}, {path(3), 1, 4}}) {
    const auto r = decide_agency(g, k, T, true, caps);
    if (r.status == SolveStatus::Witness) check(g, *r.witness, "solver witness");
  }
  c.details.push_back(std::to_string(agencies) + " agencies checked");
  c.finish(600.0);
}

TEST_CASE("criterion 08: k = n with parking iff 2-edge-connected, over all connected n <= 6") {
  Criterion c("criterion 08");
  int graphs = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : all_connected_graphs(n)) {
      ++graphs;
      const bool expected = is_two_edge_connected(g);
      bool built = false;
      Agency a;
      try {
        a = full_occupancy_agency(g);
        built = true;
      } catch (const InfeasibleError&) {
      }
      c.require(built == expected, "characterization mismatch at n=" + std::to_string(n));
      if (!built) continue;
      c.require(is_feasible(g, a), "infeasible output");
      c.require(a.T <= 2 * n * (2 * n - 3), "horizon bound exceeded");
      bool bijective = a.k == n;
      for (int t = 0; t <= a.T && bijective; ++t) {
        std::set<int> occ;
        for (int i = 0; i < a.k; ++i) occ.insert(a.schedule[i][t]);
        bijective = occ.size() == static_cast<std::size_t>(n);
      }
      c.require(bijective, "occupancy not a bijection at every tick");
    }
  }
  c.details.push_back(std::to_string(graphs) + " graphs checked");
  c.finish(300.0);
}

TEST_CASE("criterion 09: stretch formula equals configuration reachability on trees n <= 8") {
  Criterion c("criterion 09");
  int trees = 0;
  for (int n = 1; n <= 8; ++n) {
    int index = 0;
    for (const auto& t : all_trees(n)) {
      ++trees;
      const int formula = tree_max_agents(t);
      const int oracle = config_reachability_max_k(t);
      c.require(formula == oracle, "mismatch on tree n=" + std::to_string(n) + " #" +
                                       std::to_string(index) + ": formula " +
                                       std::to_string(formula) + ", oracle " +
                                       std::to_string(oracle));
      ++index;
    }
  }
  // The closed-form special cases.
  c.require(tree_max_agents(Graph(1, {})) == 1, "n=1 should give 1");
  c.require(tree_max_agents(path(2)) == 1, "n=2 should give 1");
  c.require(tree_max_agents(star(3)) == 2 && tree_max_agents(star(7)) == 6,
            "stars should give n-2");
  c.require(tree_max_agents(double_star()) == 3, "degree-2-free non-star should give n-3");
  c.details.push_back(std::to_string(trees) + " trees checked");
  c.finish(900.0);
}

TEST_CASE("criterion 10: strength corollaries on the tree agencies found in the sweeps") {
  Criterion c("criterion 10");
  const auto caps = lifted_caps();
  int found = 0;
  auto inspect = [&](const Graph& tree, int k, int T, const std::string& where) {
    const auto r = decide_agency(tree, k, T, true, caps);
    if (r.status != SolveStatus::Witness) return;
    ++found;
    const auto s = strength(tree, *r.witness);
    c.require(s.alpha >= Rational(2), where + ": alpha < 2");
    if (T == 2 * tree.n() - 2)
      c.require(s.alpha * s.alpha >= Rational(5),
                where + ": alpha^2 = " + (s.alpha * s.alpha).str() + " < 5 at T = 2n-2");
  };
  for (int n = 4; n <= 7; ++n) {
    int index = 0;
    for (const auto& tree : all_trees(n)) {
      const std::string name = "tree n=" + std::to_string(n) + " #" + std::to_string(index);
      for (int k = 1; k <= 3; ++k)
        for (int T = 1; T <= std::min(15, 4 * k - 1); ++T) inspect(tree, k, T, name);
      const int T = 2 * n - 2;
      for (int k = T / 5 + 1; k <= 4; ++k) inspect(tree, k, T, name);
      ++index;
    }
  }
  c.details.push_back(std::to_string(found) + " feasible tree agencies inspected");
  c.finish(600.0);
}
