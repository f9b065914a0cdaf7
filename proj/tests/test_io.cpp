#include "doctest.h"
#include "helpers.hpp"
#include "synctsp/construct.hpp"
#include "synctsp/errors.hpp"
#include "synctsp/io.hpp"

using namespace synctsp;
using namespace testgraphs;

TEST_CASE("graph JSON loading") {
  CHECK(load_graph(R"({"n":3,"edges":[[0,1],[1,2],[0,2]]})") == complete(3));
  CHECK(load_graph(R"({"n":2,"edges":[[0,1]]})") == path(2));
  CHECK_THROWS_AS(load_graph(R"({"n":2,"edges":[[0,0]]})"), InputError);
  CHECK_THROWS_AS(load_graph(R"({"n":2})"), InputError);
  CHECK_THROWS_AS(load_graph(R"({"n":2,"edges":[[0]]})"), InputError);
  CHECK_THROWS_AS(load_graph("{not json"), InputError);
}

TEST_CASE("graph text loading") {
  CHECK(load_graph("3 2\n0 1\n1 2\n") == path(3));
  CHECK(load_graph("  3 2 \n\n0 1\n1 2\n") == path(3));
  CHECK_THROWS_AS(load_graph("3 2\n0 1\n"), InputError);       // edge count mismatch
  CHECK_THROWS_AS(load_graph("3 1\n0 x\n"), InputError);       // bad field
  CHECK_THROWS_AS(load_graph(""), InputError);
  // Error messages carry the offending line.
  try {
    load_graph("3 1\nbroken\n");
    CHECK(false);
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("canonical JSON is byte-stable and round-trips") {
  const Graph g = complete(3);
  const std::string gj = graph_to_json(g);
  CHECK(gj == "{\"edges\":[[0,1],[0,2],[1,2]],\"n\":3}\n");
  CHECK(load_graph(gj) == g);

  auto built = build_example1(1);
  const std::string aj = agency_to_json(built.agency);
  const Agency back = load_agency(aj);
  CHECK(back.T == built.agency.T);
  CHECK(back.k == built.agency.k);
  CHECK(back.allow_parking == built.agency.allow_parking);
  CHECK(back.schedule == built.agency.schedule);
  CHECK(agency_to_json(back) == aj);
  CHECK(aj.back() == '\n');
  CHECK(aj.find(' ') == std::string::npos);
}

TEST_CASE("agency JSON validation") {
  CHECK_THROWS_AS(load_agency(R"({"T":2,"k":1})"), InputError);
  CHECK_THROWS_AS(load_agency(R"({"T":2,"k":1,"allow_parking":true,"schedule":[[0,"x"]]})"),
                  InputError);
}

TEST_CASE("csv layout") {
  Agency a{2, 2, true, {{0, 1, 0}, {1, 0, 1}}};
  CHECK(agency_to_csv(a) == "agent,0,1,2\n0,0,1,0\n1,1,0,1\n");
}

TEST_CASE("dot output is well-formed") {
  const std::string dot = graph_to_dot(two_triangles_bridge());
  CHECK(dot.substr(0, 8) == "graph g ");
  CHECK(dot.find("  0 -- 1;\n") != std::string::npos);
  CHECK(dot.back() == '\n');
  CHECK(dot[dot.size() - 2] == '}');
  // Isolated nodes still show up.
  const std::string lone = graph_to_dot(Graph(2, {}));
  CHECK(lone.find("  0;\n") != std::string::npos);
  CHECK(lone.find("  1;\n") != std::string::npos);
}
