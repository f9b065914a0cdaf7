#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "synctsp/construct.hpp"
#include "synctsp/enumerate.hpp"
#include "synctsp/errors.hpp"
#include "synctsp/io.hpp"
#include "synctsp/solver.hpp"

namespace {

using namespace synctsp;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // infeasible / proven absent
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

std::string crash_line(const CrashEvent& c) {
  std::string s = "t=" + std::to_string(c.time) + " agents=(" + std::to_string(c.agent_a) +
                  "," + std::to_string(c.agent_b) + ") ";
  if (c.kind == CrashEvent::Kind::Node)
    s += "node=" + std::to_string(c.u);
  else
    s += "edge=(" + std::to_string(c.u) + "," + std::to_string(c.v) + ")";
  return s;
}

int run_check(const std::string& graph_path, const std::string& agency_path) {
  const Graph g = load_graph_file(graph_path);
  const Agency a = load_agency_file(agency_path);
  if (auto err = agency_structure_error(g, a)) throw InputError(*err);
  int problems = 0;
  for (int i = 0; i < a.k; ++i) {
    if (auto v = validate_walk(g, a.schedule[i], a.allow_parking)) {
      std::cout << "walk agent=" << i << " step=" << v->step << ": " << v->reason << "\n";
      ++problems;
      continue;
    }
    if (a.schedule[i].front() != a.schedule[i].back()) {
      std::cout << "walk agent=" << i << ": not closed\n";
      ++problems;
    } else if (!is_tour(g, a.schedule[i], a.allow_parking)) {
      std::cout << "walk agent=" << i << ": does not visit every node\n";
      ++problems;
    }
  }
  const auto crashes = find_crashes(g, a);
  for (const auto& c : crashes) std::cout << "crash " << crash_line(c) << "\n";
  if (problems == 0 && crashes.empty()) {
    std::cout << "feasible\n";
    return kExitOk;
  }
  std::cout << "infeasible: " << crashes.size() << " crash(es), " << problems
            << " invalid walk(s)\n";
  return kExitNegative;
}

int run_strength(const std::string& graph_path, const std::string& agency_path) {
  const Graph g = load_graph_file(graph_path);
  const Agency a = load_agency_file(agency_path);
  const auto s = strength(g, a);
  char buf[64];
  auto line = [&](const char* name, const Rational& r) {
    std::snprintf(buf, sizeof buf, "%.9f", r.approx());
    std::cout << name << " = " << r.str() << " (" << buf << ")\n";
  };
  line("alpha1", s.alpha1);
  line("alpha2", s.alpha2);
  line("alpha", s.alpha);
  return kExitOk;
}

int run_solve_decide(const Graph& g, int k, int t, bool parking, const SolverCaps& caps,
                     int threads, const std::string& out_path) {
  const auto r = decide_agency(g, k, t, parking, caps, threads);
  if (r.status == SolveStatus::CapExceeded) {
    std::cerr << "instance over solver caps (n<=" << caps.max_n << ", k<=" << caps.max_k
              << ", T<=" << caps.max_t << "); use --force or SYNCTSP_CAPS\n";
    return kExitCap;
  }
  if (r.status == SolveStatus::Witness) {
    emit(agency_to_json(*r.witness), out_path);
    return kExitOk;
  }
  emit("{\"nodes_expanded\":" + std::to_string(r.nodes_expanded) +
           ",\"result\":\"absent\"}\n",
       out_path);
  return kExitNegative;
}

struct BoundSweep {
  int instances = 0;
  std::vector<std::string> counterexamples;
};

// Horizons with T/k < 4 on trees, within the solver's default envelope.
BoundSweep sweep_ratio4(int max_n, const SolverCaps& caps, int threads) {
  BoundSweep sweep;
  for (int n = 4; n <= max_n; ++n) {
    int index = 0;
    for (const auto& tree : all_trees(n)) {
      for (int k = 1; k <= 3; ++k) {
        for (int T = 1; T <= std::min(15, 4 * k - 1); ++T) {
          const auto r = decide_agency(tree, k, T, true, caps, threads);
          ++sweep.instances;
          if (r.status == SolveStatus::Witness)
            sweep.counterexamples.push_back("tree n=" + std::to_string(n) + " #" +
                                            std::to_string(index) + " k=" + std::to_string(k) +
                                            " T=" + std::to_string(T));
        }
      }
      ++index;
    }
  }
  return sweep;
}

// Shortest horizons T = 2n-2 with k > T/5 on trees.
BoundSweep sweep_shortest_ratio5(int max_n, const SolverCaps& caps, int threads) {
  BoundSweep sweep;
  for (int n = 4; n <= max_n; ++n) {
    const int T = 2 * n - 2;
    int index = 0;
    for (const auto& tree : all_trees(n)) {
      for (int k = T / 5 + 1; k <= 4; ++k) {
        const auto r = decide_agency(tree, k, T, true, caps, threads);
        ++sweep.instances;
        if (r.status == SolveStatus::Witness)
          sweep.counterexamples.push_back("tree n=" + std::to_string(n) + " #" +
                                          std::to_string(index) + " k=" + std::to_string(k) +
                                          " T=" + std::to_string(T));
      }
      ++index;
    }
  }
  return sweep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synctsp: construct and verify synchronized multi-agent tours on unit-capacity graphs"};
  app.require_subcommand(1);

  std::string graph_path, agency_path, out_path, graph_out_path, format = "json";
  std::string check_graph_pos, check_agency_pos;
  int r_param = 1, q_param = 1, k_param = 1, t_param = 1, kk_param = 4;
  int max_n = 7, threads = 1;
  bool no_parking = false, force = false, with_oracle = false;
  std::int64_t q_cap = 1'000'000;

  auto* check = app.add_subcommand("check", "verify an agency against a graph");
  check->add_option("graph_file", check_graph_pos, "graph file");
  check->add_option("agency_file", check_agency_pos, "agency file");
  check->add_option("--graph", graph_path, "graph file");
  check->add_option("--agency", agency_path, "agency file");

  auto* strength_cmd = app.add_subcommand("strength", "exact strength of a feasible agency");
  strength_cmd->add_option("--graph", graph_path)->required();
  strength_cmd->add_option("--agency", agency_path)->required();

  auto* construct = app.add_subcommand("construct", "build an agency");
  construct->require_subcommand(1);
  auto* c_ham = construct->add_subcommand("ham-delay", "delayed copies of a Hamiltonian cycle");
  c_ham->add_option("--graph", graph_path)->required();
  auto* c_ex1 = construct->add_subcommand("example1", "tight T/k = 4 tree family");
  c_ex1->add_option("--r", r_param)->required();
  auto* c_ex2 = construct->add_subcommand("example2", "no-parking T = 2n-2, k = T/5 tree family");
  c_ex2->add_option("--q", q_param)->required();
  auto* c_cubic = construct->add_subcommand("cubic", "T = 2n, k = n/2 on a cubic 3-edge-connected graph");
  c_cubic->add_option("--graph", graph_path)->required();
  auto* c_full = construct->add_subcommand("full-occupancy", "k = n agency with parking");
  c_full->add_option("--graph", graph_path)->required();
  auto* c_fullnp = construct->add_subcommand("full-occupancy-noparking", "k = n agency without parking");
  c_fullnp->add_option("--graph", graph_path)->required();
  c_fullnp->add_option("--q-cap", q_cap, "total step cap");
  auto* c_puzzle = construct->add_subcommand("tree-puzzle", "k agents covering a tree");
  c_puzzle->add_option("--graph", graph_path)->required();
  c_puzzle->add_option("--k", k_param)->required();
  for (auto* c : {c_ham, c_ex1, c_ex2, c_cubic, c_full, c_fullnp, c_puzzle}) {
    c->add_option("--out", out_path, "agency JSON output (default stdout)");
    c->add_option("--graph-out", graph_out_path, "write the graph JSON here");
  }

  auto* solve = app.add_subcommand("solve", "exhaustive search");
  solve->require_subcommand(1);
  auto* s_decide = solve->add_subcommand("decide", "witness or proven-absent");
  s_decide->add_option("--graph", graph_path)->required();
  s_decide->add_option("--k", k_param)->required();
  s_decide->add_option("--t", t_param)->required();
  auto* s_mint = solve->add_subcommand("min-t", "smallest feasible horizon");
  s_mint->add_option("--graph", graph_path)->required();
  s_mint->add_option("--k", k_param)->required();
  s_mint->add_option("--t", t_param, "largest horizon to try")->required();
  auto* s_maxk = solve->add_subcommand("max-k", "largest feasible agent count");
  s_maxk->add_option("--graph", graph_path)->required();
  s_maxk->add_option("--t", t_param)->required();
  s_maxk->add_option("--kk", kk_param, "largest k to try");
  for (auto* s : {s_decide, s_mint, s_maxk}) {
    s->add_flag("--no-parking", no_parking, "forbid parking");
    s->add_flag("--force", force, "lift the solver caps");
    s->add_option("--threads", threads, "fan out over start configurations");
    s->add_option("--out", out_path);
  }

  auto* maxk_tree = app.add_subcommand("maxk-tree", "stretch-formula agent maximum on a tree");
  maxk_tree->add_option("--graph", graph_path)->required();
  maxk_tree->add_flag("--oracle", with_oracle, "cross-check by configuration reachability");

  auto* verify = app.add_subcommand("verify-bounds", "sweep the tree horizon bounds");
  verify->add_option("--max-n", max_n, "largest tree size (default 7)");
  verify->add_flag("--force", force);
  verify->add_option("--threads", threads);

  auto* render = app.add_subcommand("render", "emit dot/csv/json views");
  render->add_option("--graph", graph_path);
  render->add_option("--agency", agency_path);
  render->add_option("--format", format, "dot|csv|json")->required();
  render->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    SolverCaps caps = caps_from_env();
    caps.force = force;
    if (force) std::cerr << "warning: solver caps lifted; runtime is exponential\n";

    if (*check) {
      const std::string gp = !check_graph_pos.empty() ? check_graph_pos : graph_path;
      const std::string ap = !check_agency_pos.empty() ? check_agency_pos : agency_path;
      if (gp.empty() || ap.empty()) throw InputError("check needs a graph and an agency");
      return run_check(gp, ap);
    }
    if (*strength_cmd) return run_strength(graph_path, agency_path);

    if (*construct) {
      Agency agency;
      std::optional<Graph> graph;
      if (*c_ham) {
        graph = load_graph_file(graph_path);
        auto cycle = find_hamiltonian_cycle(*graph);
        if (!cycle) {
          std::cerr << "graph has no Hamiltonian cycle\n";
          return kExitNegative;
        }
        agency = hamiltonian_delay_agency(*graph, *cycle);
      } else if (*c_ex1) {
        auto built = build_example1(r_param);
        graph = built.graph;
        agency = built.agency;
      } else if (*c_ex2) {
        auto built = build_example2(q_param);
        graph = built.graph;
        agency = built.agency;
      } else if (*c_cubic) {
        graph = load_graph_file(graph_path);
        agency = cubic_agency(*graph).agency;
      } else if (*c_full) {
        graph = load_graph_file(graph_path);
        agency = full_occupancy_agency(*graph);
      } else if (*c_fullnp) {
        graph = load_graph_file(graph_path);
        agency = full_occupancy_noparking_agency(*graph, q_cap);
      } else if (*c_puzzle) {
        graph = load_graph_file(graph_path);
        agency = tree_puzzle_agency(*graph, k_param).agency;
      }
      if (!graph_out_path.empty()) write_file(graph_out_path, graph_to_json(*graph));
      emit(agency_to_json(agency), out_path);
      return kExitOk;
    }

    if (*solve) {
      const Graph g = load_graph_file(graph_path);
      if (*s_decide)
        return run_solve_decide(g, k_param, t_param, !no_parking, caps, threads, out_path);
      if (*s_mint) {
        const auto t = min_horizon(g, k_param, t_param, !no_parking, caps, threads);
        if (!t) {
          std::cout << "no feasible horizon up to " << t_param << "\n";
          return kExitNegative;
        }
        std::cout << "min T = " << *t << "\n";
        return kExitOk;
      }
      if (*s_maxk) {
        const int k = max_agents_for_horizon(g, t_param, kk_param, !no_parking, caps, threads);
        if (k == 0) {
          std::cout << "no feasible agency at T = " << t_param << "\n";
          return kExitNegative;
        }
        std::cout << "max k = " << k << "\n";
        return kExitOk;
      }
    }

    if (*maxk_tree) {
      const Graph g = load_graph_file(graph_path);
      const int formula = tree_max_agents(g);
      std::cout << "formula k = " << formula << "\n";
      if (with_oracle) {
        const int oracle = config_reachability_max_k(g);
        std::cout << "oracle k = " << oracle << "\n";
        if (oracle != formula) {
          std::cout << "DISAGREEMENT\n";
          return kExitNegative;
        }
        std::cout << "agree\n";
      }
      return kExitOk;
    }

    if (*verify) {
      const auto s4 = sweep_ratio4(max_n, caps, threads);
      std::cout << s4.counterexamples.size() << " counterexamples to T/k >= 4 (trees, 4 <= n <= "
                << max_n << ", " << s4.instances << " instances)\n";
      for (const auto& c : s4.counterexamples) std::cout << "  " << c << "\n";
      const auto s5 = sweep_shortest_ratio5(max_n, caps, threads);
      std::cout << s5.counterexamples.size()
                << " counterexamples to T/k >= 5 at T = 2n-2 (trees, 4 <= n <= " << max_n << ", "
                << s5.instances << " instances)\n";
      for (const auto& c : s5.counterexamples) std::cout << "  " << c << "\n";
      return (s4.counterexamples.empty() && s5.counterexamples.empty()) ? kExitOk
                                                                        : kExitNegative;
    }

    if (*render) {
      if (format == "dot") {
        if (graph_path.empty()) throw InputError("render --format dot needs --graph");
        emit(graph_to_dot(load_graph_file(graph_path)), out_path);
      } else if (format == "csv") {
        if (agency_path.empty()) throw InputError("render --format csv needs --agency");
        emit(agency_to_csv(load_agency_file(agency_path)), out_path);
      } else if (format == "json") {
        if (!agency_path.empty())
          emit(agency_to_json(load_agency_file(agency_path)), out_path);
        else if (!graph_path.empty())
          emit(graph_to_json(load_graph_file(graph_path)), out_path);
        else
          throw InputError("render --format json needs --graph or --agency");
      } else {
        throw InputError("unknown format: " + format);
      }
      return kExitOk;
    }
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
