#pragma once

// Uniform view over the nine local-search problems: which instance and
// solution kinds they use, feasibility, objective, and move dispatch.

#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "locopt/cnf.hpp"
#include "locopt/error.hpp"
#include "locopt/graph.hpp"
#include "locopt/local_optimality.hpp"

namespace locopt {

enum class Problem {
  independent_set,
  clique,
  vertex_cover,
  dominating_set,
  feedback_vertex_set,
  matching,
  cut,
  sat,
  nae_sat,
};

inline constexpr Problem kAllProblems[] = {
    Problem::independent_set, Problem::clique,   Problem::vertex_cover,
    Problem::dominating_set,  Problem::feedback_vertex_set,
    Problem::matching,        Problem::cut,      Problem::sat,
    Problem::nae_sat,
};

using Instance = std::variant<Graph, MultiGraph, CnfFormula>;
using Solution = std::variant<VertexSet, Matching, Cut, Assignment>;
using Move = std::variant<VertexSwap, EdgeSwap, FlipMove>;

inline std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::independent_set: return "is";
    case Problem::clique: return "clique";
    case Problem::vertex_cover: return "vc";
    case Problem::dominating_set: return "ds";
    case Problem::feedback_vertex_set: return "fvs";
    case Problem::matching: return "matching";
    case Problem::cut: return "cut";
    case Problem::sat: return "sat";
    case Problem::nae_sat: return "naesat";
  }
  return "?";
}

inline std::optional<Problem> parse_problem(std::string_view name) {
  for (Problem p : kAllProblems)
    if (to_string(p) == name) return p;
  return std::nullopt;
}

inline bool uses_vertex_set(Problem p) {
  return p == Problem::independent_set || p == Problem::clique || p == Problem::vertex_cover ||
         p == Problem::dominating_set || p == Problem::feedback_vertex_set;
}
inline bool uses_formula(Problem p) { return p == Problem::sat || p == Problem::nae_sat; }
// Minimization problems shrink the solution with each move.
inline bool is_shrinking(Problem p) {
  return p == Problem::vertex_cover || p == Problem::dominating_set ||
         p == Problem::feedback_vertex_set;
}

inline const Graph& as_graph(const Instance& inst) {
  if (const auto* g = std::get_if<Graph>(&inst)) return *g;
  throw InvalidArgument("problem needs a simple graph instance");
}
inline MultiGraph as_multigraph(const Instance& inst) {
  if (const auto* mg = std::get_if<MultiGraph>(&inst)) return *mg;
  if (const auto* g = std::get_if<Graph>(&inst)) return MultiGraph::from_graph(*g);
  throw InvalidArgument("problem needs a graph or multigraph instance");
}
inline const CnfFormula& as_formula(const Instance& inst) {
  if (const auto* f = std::get_if<CnfFormula>(&inst)) return *f;
  throw InvalidArgument("problem needs a CNF formula instance");
}

template <class T>
const T& solution_as(const Solution& s) {
  if (const auto* v = std::get_if<T>(&s)) return *v;
  throw InvalidArgument("solution kind does not match problem");
}

// Size of the instance's ground set: vertices, or variables.
inline int ground_size(const Instance& inst) {
  return std::visit(
      [](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, CnfFormula>)
          return x.num_vars();
        else
          return x.num_vertices();
      },
      inst);
}

inline bool is_feasible(Problem p, const Instance& inst, const Solution& s) {
  switch (p) {
    case Problem::independent_set: return is_independent_set(as_graph(inst), solution_as<VertexSet>(s));
    case Problem::clique: return is_clique(as_graph(inst), solution_as<VertexSet>(s));
    case Problem::vertex_cover: return is_vertex_cover(as_graph(inst), solution_as<VertexSet>(s));
    case Problem::dominating_set: return is_dominating_set(as_graph(inst), solution_as<VertexSet>(s));
    case Problem::feedback_vertex_set:
      return is_feedback_vertex_set(as_graph(inst), solution_as<VertexSet>(s));
    case Problem::matching: return is_matching(as_graph(inst), solution_as<Matching>(s));
    case Problem::cut: return solution_as<Cut>(s).size() == ground_size(inst);
    case Problem::sat:
    case Problem::nae_sat: return solution_as<Assignment>(s).size() == as_formula(inst).num_vars();
  }
  return false;
}

// Integral objective that every improving move raises by at least one.
inline Count objective(Problem p, const Instance& inst, const Solution& s) {
  switch (p) {
    case Problem::independent_set:
    case Problem::clique: return static_cast<Count>(solution_as<VertexSet>(s).size());
    case Problem::vertex_cover:
    case Problem::dominating_set:
    case Problem::feedback_vertex_set: return -static_cast<Count>(solution_as<VertexSet>(s).size());
    case Problem::matching: return static_cast<Count>(solution_as<Matching>(s).size());
    case Problem::cut: return cut_weight(as_multigraph(inst), solution_as<Cut>(s));
    case Problem::sat: return count_satisfied(as_formula(inst), solution_as<Assignment>(s));
    case Problem::nae_sat: return count_nae_satisfied(as_formula(inst), solution_as<Assignment>(s));
  }
  return 0;
}

// First improving move in the fixed enumeration order, or nothing if s is
// locally optimal. k is ignored by the FLIP problems.
inline std::optional<Move> find_improvement(Problem p, const Instance& inst, const Solution& s, int k,
                                            CheckOptions opts = {}) {
  auto wrap = [](const auto& m) -> std::optional<Move> {
    if (m) return Move(*m);
    return std::nullopt;
  };
  switch (p) {
    case Problem::independent_set:
      return wrap(find_is_improvement(as_graph(inst), solution_as<VertexSet>(s), k, opts));
    case Problem::clique:
      return wrap(find_clique_improvement(as_graph(inst), solution_as<VertexSet>(s), k, opts));
    case Problem::vertex_cover:
      return wrap(find_vc_improvement(as_graph(inst), solution_as<VertexSet>(s), k, opts));
    case Problem::dominating_set:
      return wrap(find_ds_improvement(as_graph(inst), solution_as<VertexSet>(s), k, opts));
    case Problem::feedback_vertex_set:
      return wrap(find_fvs_improvement(as_graph(inst), solution_as<VertexSet>(s), k, opts));
    case Problem::matching:
      return wrap(find_matching_improvement(as_graph(inst), solution_as<Matching>(s), k, opts));
    case Problem::cut: return wrap(find_cut_improvement(as_multigraph(inst), solution_as<Cut>(s)));
    case Problem::sat: return wrap(find_sat_flip(as_formula(inst), solution_as<Assignment>(s)));
    case Problem::nae_sat: return wrap(find_nae_flip(as_formula(inst), solution_as<Assignment>(s)));
  }
  return std::nullopt;
}

inline Solution apply_move(const Solution& s, const Move& m) {
  if (const auto* sw = std::get_if<VertexSwap>(&m)) return apply(solution_as<VertexSet>(s), *sw);
  if (const auto* sw = std::get_if<EdgeSwap>(&m)) return apply(solution_as<Matching>(s), *sw);
  const int target = std::get<FlipMove>(m).target;
  if (const auto* c = std::get_if<Cut>(&s)) return c->flipped(target);
  return flip(solution_as<Assignment>(s), target);
}

}  // namespace locopt
