#include "doctest.h"
#include "helpers.hpp"
#include "synctsp/construct.hpp"
#include "synctsp/enumerate.hpp"
#include "synctsp/errors.hpp"
#include "synctsp/solver.hpp"

using namespace synctsp;
using namespace testgraphs;

TEST_CASE("decide_agency finds witnesses and certifies absences") {
  auto k3 = decide_agency(complete(3), 3, 3, true);
  REQUIRE(k3.status == SolveStatus::Witness);
  CHECK(is_feasible(complete(3), *k3.witness));

  auto p2 = decide_agency(path(2), 2, 8, true);
  CHECK(p2.status == SolveStatus::ProvenAbsent);

  // A tree tour needs 2n-2 steps.
  CHECK(decide_agency(path(3), 1, 3, true).status == SolveStatus::ProvenAbsent);
  CHECK(decide_agency(path(3), 1, 4, true).status == SolveStatus::Witness);

  // More agents than nodes collide immediately.
  CHECK(decide_agency(path(2), 3, 8, true).status == SolveStatus::ProvenAbsent);
}

TEST_CASE("decide_agency respects caps") {
  CHECK(decide_agency(path(9), 1, 16, true).status == SolveStatus::CapExceeded);
  CHECK(decide_agency(path(3), 5, 8, true).status == SolveStatus::CapExceeded);
  CHECK(decide_agency(path(3), 1, 17, true).status == SolveStatus::CapExceeded);
  SolverCaps lifted;
  lifted.force = true;
  CHECK(decide_agency(path(9), 1, 16, true, lifted).status == SolveStatus::Witness);
}

TEST_CASE("no-parking decisions") {
  // Without parking a tree tour of P3 still works (it never pauses).
  CHECK(decide_agency(path(3), 1, 4, false).status == SolveStatus::Witness);
  // C4 rotation without parking.
  auto c4 = decide_agency(cycle(4), 4, 4, false);
  REQUIRE(c4.status == SolveStatus::Witness);
  CHECK(!c4.witness->allow_parking);
}

TEST_CASE("min_horizon") {
  CHECK(min_horizon(path(3), 1, 16) == 4);
  CHECK(min_horizon(complete(3), 3, 16) == 3);
  CHECK(min_horizon(star(3), 1, 16) == 6);
  CHECK(!min_horizon(path(2), 2, 16).has_value());
}

TEST_CASE("max_agents_for_horizon") {
  CHECK(max_agents_for_horizon(complete(3), 3, 4) == 3);
  CHECK(max_agents_for_horizon(path(2), 8, 4) == 1);
  CHECK(max_agents_for_horizon(star(3), 12, 4) == 2);
  CHECK(max_agents_for_horizon(path(3), 3, 4) == 0);  // horizon too short for anyone
}

TEST_CASE("solver witnesses are deterministic across thread counts") {
  auto a = decide_agency(complete(3), 3, 3, true, {}, 1);
  auto b = decide_agency(complete(3), 3, 3, true, {}, 4);
  REQUIRE(a.status == SolveStatus::Witness);
  REQUIRE(b.status == SolveStatus::Witness);
  CHECK(a.witness->schedule == b.witness->schedule);

  auto c = decide_agency(star(3), 3, 12, true, {}, 1);
  auto d = decide_agency(star(3), 3, 12, true, {}, 4);
  CHECK(c.status == d.status);
  if (c.status == SolveStatus::ProvenAbsent) CHECK(c.nodes_expanded == d.nodes_expanded);

  // Several canonical starts, witness found at the first: the chosen
  // witness may not depend on thread scheduling.
  for (int threads : {1, 2, 4}) {
    auto w = decide_agency(star(3), 2, 6, true, {}, threads);
    REQUIRE(w.status == SolveStatus::Witness);
    CHECK(w.witness->schedule ==
          decide_agency(star(3), 2, 6, true, {}, 1).witness->schedule);
  }
}

TEST_CASE("trees always admit a single-agent double-traversal tour") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : all_trees(n))
      CHECK(decide_agency(t, 1, 2 * n - 2, true).status == SolveStatus::Witness);
}

TEST_CASE("config reachability oracle on the named trees") {
  CHECK(config_reachability_max_k(star(3)) == 2);
  CHECK(config_reachability_max_k(path(5)) == 1);
  CHECK(config_reachability_max_k(double_star()) == 3);
  CHECK(config_reachability_max_k(Graph(1, {})) == 1);
  CHECK(config_reachability_max_k(path(2)) == 1);
  CHECK_THROWS_AS(config_reachability_max_k(complete(3)), InputError);
  CHECK_THROWS_AS(config_reachability_max_k(path(10)), CapExceededError);
}

TEST_CASE("caps can come from the environment") {
  SolverCaps base;
  CHECK(base.max_n == 8);
  CHECK(base.max_k == 4);
  CHECK(base.max_t == 16);
}
