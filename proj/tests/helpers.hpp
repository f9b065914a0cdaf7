#pragma once

#include "synctsp/graph.hpp"

namespace testgraphs {

inline synctsp::Graph path(int n) {
  std::vector<synctsp::Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return synctsp::Graph(n, e);
}

inline synctsp::Graph cycle(int n) {
  std::vector<synctsp::Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(synctsp::make_edge(i, (i + 1) % n));
  return synctsp::Graph(n, e);
}

/// K_{1,m} with center 0.
inline synctsp::Graph star(int m) {
  std::vector<synctsp::Edge> e;
  for (int i = 1; i <= m; ++i) e.push_back({0, i});
  return synctsp::Graph(m + 1, e);
}

inline synctsp::Graph complete(int n) {
  std::vector<synctsp::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return synctsp::Graph(n, e);
}

inline synctsp::Graph k33() {
  return synctsp::Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                            {2, 3}, {2, 4}, {2, 5}});
}

inline synctsp::Graph petersen() {
  return synctsp::Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                             {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

/// Two triangles plus three rungs; 3-regular and 3-edge-connected.
inline synctsp::Graph prism() {
  return synctsp::Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                            {0, 3}, {1, 4}, {2, 5}});
}

/// Triangles {0,1,2} and {3,4,5} joined by the single edge 2-3.
inline synctsp::Graph two_triangles_bridge() {
  return synctsp::Graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
}

/// Adjacent degree-3 joints 0-1 with leaves 2,3 and 4,5.
inline synctsp::Graph double_star() {
  return synctsp::Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

/// Center 0 with three legs of two edges each (n = 7).
inline synctsp::Graph spider22() {
  return synctsp::Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

/// Joints 0 and 2 linked through the degree-2 node 1, with leaves 3,4 on 0
/// and 5,6 on 2 (n = 7).
inline synctsp::Graph two_joints_spaced() {
  return synctsp::Graph(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}});
}

/// Cubic graph with a bridge: two K4-with-a-subdivided-edge gadgets whose
/// degree-2 hubs are joined.
inline synctsp::Graph cubic_with_bridge() {
  return synctsp::Graph(10, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4},
                             {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}, {5, 9}, {6, 9},
                             {4, 9}});
}

/// 14-node cubic girth-6 graph: the 14-cycle plus the [5,-5]^7 chords.
inline synctsp::Graph heawood() {
  std::vector<synctsp::Edge> e;
  for (int i = 0; i < 14; ++i) e.push_back(synctsp::make_edge(i, (i + 1) % 14));
  for (int i = 0; i < 14; i += 2) e.push_back(synctsp::make_edge(i, (i + 5) % 14));
  return synctsp::Graph(14, e);
}

}  // namespace testgraphs
