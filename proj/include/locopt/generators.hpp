#pragma once

// Named graphs and seeded random instances. All randomness flows through a
// caller-supplied std::mt19937_64, and only through uniform integer draws, so
// instances are reproducible from the seed.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "locopt/cnf.hpp"
#include "locopt/error.hpp"
#include "locopt/graph.hpp"
#include "locopt/problem.hpp"
#include "locopt/reductions.hpp"

namespace locopt {

using Rng = std::mt19937_64;

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

// Center 0, leaves 1..leaves.
inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

// Graph on n vertices whose edges are the set bits of `bits`, indexed in the
// order (0,1), (0,2), ..., (0,n-1), (1,2), ...
inline Graph graph_from_edge_bits(int n, std::uint64_t bits) {
  std::vector<Edge> e;
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx)
      if ((bits >> idx) & 1U) e.emplace_back(i, j);
  return Graph(n, e);
}

inline bool coin(Rng& rng, double p) {
  // 53-bit uniform in [0, 1) from one draw; avoids distribution objects whose
  // output differs between standard libraries.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

inline Graph random_gnp(int n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng, p)) e.emplace_back(i, j);
  return Graph(n, e);
}

// Random multigraph: `units` edge units dropped on uniformly random pairs.
inline MultiGraph random_multigraph(int n, int units, Rng& rng) {
  require(n >= 2 || units == 0, "multigraph edges need two vertices");
  std::vector<MultiGraph::Record> records;
  for (int i = 0; i < units; ++i) {
    int u = uniform_int(rng, 0, n - 1);
    int v = uniform_int(rng, 0, n - 2);
    if (v >= u) ++v;
    records.push_back({Edge(u, v), 1});
  }
  return MultiGraph(n, std::move(records));
}

// MISE instance: G(n, p) without isolated vertices and a random independent
// X (each vertex joins with probability x_prob when still independent).
// Resamples up to max_tries times.
inline MiseInstance random_mise(int n, double p, double x_prob, Rng& rng, int max_tries = 1000) {
  require(n >= 2, "MISE instance without isolated vertices needs n >= 2");
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Graph g = random_gnp(n, p, rng);
    bool isolated = false;
    for (Vertex v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
    if (isolated) continue;
    std::vector<Vertex> x;
    for (Vertex v = 0; v < n; ++v) {
      if (!coin(rng, x_prob)) continue;
      bool ok = true;
      for (Vertex u : x) ok = ok && !g.adjacent(u, v);
      if (ok) x.push_back(v);
    }
    return {std::move(g), VertexSet(std::move(x))};
  }
  throw Error("random_mise: no graph without isolated vertices after " + std::to_string(max_tries) + " tries");
}

// Random CNF: clause widths uniform in [min_width, max_width] (capped at
// num_vars), distinct variables per clause, literals negated with
// probability neg_prob.
inline CnfFormula random_cnf(int num_vars, int num_clauses, int min_width, int max_width, double neg_prob,
                             Rng& rng) {
  require(num_vars >= 1 && min_width >= 1 && min_width <= max_width, "bad CNF generator parameters");
  std::vector<Clause> clauses;
  for (int c = 0; c < num_clauses; ++c) {
    const int width = std::min(uniform_int(rng, min_width, max_width), num_vars);
    std::vector<int> vars(static_cast<std::size_t>(num_vars));
    for (int i = 0; i < num_vars; ++i) vars[static_cast<std::size_t>(i)] = i;
    std::vector<Literal> lits;
    for (int i = 0; i < width; ++i) {
      const int j = uniform_int(rng, i, num_vars - 1);
      std::swap(vars[static_cast<std::size_t>(i)], vars[static_cast<std::size_t>(j)]);
      lits.push_back(Literal{vars[static_cast<std::size_t>(i)], coin(rng, neg_prob)});
    }
    clauses.emplace_back(std::move(lits));
  }
  return CnfFormula(num_vars, std::move(clauses));
}

inline VertexSet random_subset(int n, double p, Rng& rng) {
  std::vector<Vertex> s;
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng, p)) s.push_back(v);
  return VertexSet(std::move(s));
}

inline Assignment random_assignment(int n, Rng& rng) {
  std::vector<bool> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = coin(rng, 0.5);
  return Assignment(std::move(v));
}

// Random matching: edges in random order, kept greedily with probability p.
inline Matching random_matching(const Graph& g, double p, Rng& rng) {
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = edges.size(); i > 1; --i)
    std::swap(edges[i - 1], edges[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(i) - 1))]);
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<Edge> m;
  for (const Edge& e : edges) {
    if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)] || !coin(rng, p)) continue;
    used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
    m.push_back(e);
  }
  return Matching(std::move(m));
}

// Random feasible start for a climb. Vertex-set problems walk the vertices in
// random order and keep each feasible toggle with probability 1/2, so the
// start is usually not locally optimal.
inline Solution random_start(Problem p, const Instance& inst, Rng& rng) {
  if (uses_formula(p)) return random_assignment(as_formula(inst).num_vars(), rng);
  if (p == Problem::cut) {
    const int n = ground_size(inst);
    std::vector<bool> side(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = coin(rng, 0.5);
    return Cut(std::move(side));
  }
  const Graph& g = as_graph(inst);
  if (p == Problem::matching) return random_matching(g, 0.5, rng);
  const int n = g.num_vertices();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  for (int i = n - 1; i > 0; --i) std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
  VertexSet s = is_shrinking(p) ? VertexSet::all(n) : VertexSet{};
  for (Vertex v : order) {
    if (!coin(rng, 0.5)) continue;
    const VertexSet next = is_shrinking(p) ? s.minus(VertexSet{v}) : s.united(VertexSet{v});
    if (is_feasible(p, inst, next)) s = next;
  }
  return s;
}

}  // namespace locopt
