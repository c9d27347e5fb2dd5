#pragma once

// First-improvement hill climbing: repeatedly apply the first improving move
// until the solution is locally optimal.

#include <optional>
#include <vector>

#include "locopt/error.hpp"
#include "locopt/problem.hpp"

namespace locopt {

struct ClimbOptions {
  bool keep_trace = false;
  CheckOptions check;
};

struct ClimbReport {
  Solution final_solution;
  Count steps = 0;
  std::optional<std::vector<Move>> trace;  // set iff keep_trace
};

// Deterministic feasible start: greedy by ascending id for independent set
// and clique, greedy edge scan for matching, the full vertex set for the
// shrinking problems, all vertices on one side for cut, all-true for SAT.
inline Solution canonical_start(Problem p, const Instance& inst) {
  switch (p) {
    case Problem::independent_set:
    case Problem::clique: {
      const Graph& g = as_graph(inst);
      std::vector<Vertex> s;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        bool ok = true;
        for (Vertex w : s)
          if (g.adjacent(v, w) != (p == Problem::clique)) ok = false;
        if (ok) s.push_back(v);
      }
      return VertexSet(std::move(s));
    }
    case Problem::vertex_cover:
    case Problem::dominating_set:
    case Problem::feedback_vertex_set: return VertexSet::all(as_graph(inst).num_vertices());
    case Problem::matching: {
      const Graph& g = as_graph(inst);
      std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
      std::vector<Edge> m;
      for (const Edge& e : g.edges()) {
        if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) continue;
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
        m.push_back(e);
      }
      return Matching(std::move(m));
    }
    case Problem::cut: return Cut::all_one_side(ground_size(inst));
    case Problem::sat:
    case Problem::nae_sat: return Assignment::constant(as_formula(inst).num_vars(), true);
  }
  throw InvalidArgument("unknown problem kind");
}

// Upper bound on the number of improving steps from any feasible start.
inline Count step_bound(Problem p, const Instance& inst) {
  switch (p) {
    case Problem::independent_set:
    case Problem::clique:
    case Problem::vertex_cover:
    case Problem::dominating_set:
    case Problem::feedback_vertex_set: return as_graph(inst).num_vertices();
    case Problem::matching: return as_graph(inst).num_vertices() / 2;
    case Problem::cut: return as_multigraph(inst).total_multiplicity();
    case Problem::sat:
    case Problem::nae_sat: return static_cast<Count>(as_formula(inst).num_clauses());
  }
  throw InvalidArgument("unknown problem kind");
}

inline ClimbReport climb(Problem p, const Instance& inst, int k, std::optional<Solution> start = {},
                         ClimbOptions opts = {}) {
  Solution current = start ? std::move(*start) : canonical_start(p, inst);
  if (!is_feasible(p, inst, current)) throw InvalidArgument("start solution is infeasible");
  ClimbReport report;
  if (opts.keep_trace) report.trace.emplace();
  while (auto move = find_improvement(p, inst, current, k, opts.check)) {
    current = apply_move(current, *move);
    ++report.steps;
    if (report.trace) report.trace->push_back(std::move(*move));
  }
  report.final_solution = std::move(current);
  return report;
}

}  // namespace locopt
