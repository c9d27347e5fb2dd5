#pragma once

// Gadget constructions from Maximal Independent Set Extension (MISE) and
// between the FLIP problems, each returning the built instance together with
// a map of the vertices/variables it introduced, plus the solution lift
// (source -> target) and project (target -> source) maps.
//
//   build_h            MISE -> 2-maximal independent set
//   blowup             2-maximal IS -> k-maximal IS
//   build_dom_fvs_graph  vertex cover -> dominating set / feedback vertex set
//   build_naesat       MISE -> NAE-unflippable assignments
//   positivize         CNF -> positive CNF (same NAE-unflippable assignments)
//   build_maxcut       positive 2/3-CNF -> stable cuts of a multigraph
//   build_2sat         stable cuts -> unflippable 2-CNF assignments

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "locopt/cnf.hpp"
#include "locopt/error.hpp"
#include "locopt/graph.hpp"
#include "locopt/local_optimality.hpp"

namespace locopt {

// Input of MISE: does g have a maximal independent set avoiding x?
struct MiseInstance {
  Graph g;
  VertexSet x;
};

inline void validate_mise(const MiseInstance& inst, bool require_no_isolated) {
  if (!is_independent_set(inst.g, inst.x)) throw InvalidArgument("X must be an independent set");
  if (require_no_isolated)
    for (Vertex v = 0; v < inst.g.num_vertices(); ++v)
      if (inst.g.degree(v) == 0) throw InvalidArgument("graph must not have isolated vertices");
}

// ---------------------------------------------------------------------------
// MISE -> 2-maximal independent sets

// Vertices of G keep their ids in H. Then a, b, b', c, c' and, for the i-th
// vertex y_i of Y = V(G) \ X (ascending), the block z_i, z'_i, c_i, c'_i, y'_i.
struct HGadgetMap {
  int n_original = 0;
  int num_vertices = 0;
  Vertex a = 0, b = 0, b_prime = 0, c = 0, c_prime = 0;
  std::vector<Vertex> x;
  std::vector<Vertex> y, z, z_prime, c_i, c_i_prime, y_prime;

  std::size_t t() const { return y.size(); }
  // Index i with y[i] == v, or -1.
  int y_index(Vertex v) const {
    auto it = std::lower_bound(y.begin(), y.end(), v);
    return (it != y.end() && *it == v) ? static_cast<int>(it - y.begin()) : -1;
  }
  VertexSet z_set() const { return VertexSet(z).united(VertexSet(z_prime)); }

  friend bool operator==(const HGadgetMap&, const HGadgetMap&) = default;
};

inline std::pair<Graph, HGadgetMap> build_h(const MiseInstance& inst) {
  validate_mise(inst, true);
  const Graph& g = inst.g;
  const int n = g.num_vertices();
  HGadgetMap map;
  map.n_original = n;
  map.x = inst.x.members();
  map.y = inst.x.complement(n).members();
  const int t = static_cast<int>(map.y.size());
  map.a = n;
  map.b = n + 1;
  map.b_prime = n + 2;
  map.c = n + 3;
  map.c_prime = n + 4;
  map.num_vertices = n + 5 + 5 * t;

  std::vector<Edge> edges = g.edges();
  edges.emplace_back(map.a, map.b);
  for (Vertex xv : map.x) edges.emplace_back(map.b, xv);
  edges.emplace_back(map.b, map.c);
  edges.emplace_back(map.b, map.c_prime);
  edges.emplace_back(map.b_prime, map.c);
  edges.emplace_back(map.b_prime, map.c_prime);
  for (int i = 0; i < t; ++i) {
    const Vertex base = n + 5 + 5 * i;
    const Vertex yi = map.y[static_cast<std::size_t>(i)];
    const Vertex zi = base, zpi = base + 1, ci = base + 2, cpi = base + 3, ypi = base + 4;
    map.z.push_back(zi);
    map.z_prime.push_back(zpi);
    map.c_i.push_back(ci);
    map.c_i_prime.push_back(cpi);
    map.y_prime.push_back(ypi);
    for (Vertex zz : {zi, zpi}) {
      edges.emplace_back(zz, yi);
      edges.emplace_back(zz, map.b);
      edges.emplace_back(zz, map.b_prime);
    }
    // 4-cycle y_i - c_i - y'_i - c'_i - y_i
    edges.emplace_back(yi, ci);
    edges.emplace_back(ci, ypi);
    edges.emplace_back(ypi, cpi);
    edges.emplace_back(cpi, yi);
  }
  return {Graph(map.num_vertices, edges), map};
}

// S_a = {a, c, c'} u X u Z u {c_i, c'_i}: the only 2-maximal independent set
// of H containing a.
inline VertexSet canonical_sa(const HGadgetMap& map) {
  std::vector<Vertex> s = {map.a, map.c, map.c_prime};
  s.insert(s.end(), map.x.begin(), map.x.end());
  for (std::size_t i = 0; i < map.t(); ++i) {
    s.push_back(map.z[i]);
    s.push_back(map.z_prime[i]);
    s.push_back(map.c_i[i]);
    s.push_back(map.c_i_prime[i]);
  }
  return VertexSet(std::move(s));
}

// {b, b'} u {y_i, y'_i : y_i in d} u {c_i, c'_i : y_i not in d}.
inline VertexSet lift_to_h(const HGadgetMap& map, const VertexSet& d) {
  std::vector<Vertex> s = {map.b, map.b_prime};
  for (Vertex v : d)
    if (map.y_index(v) < 0) throw InvalidArgument("lifted set must lie inside V(G) \\ X");
  for (std::size_t i = 0; i < map.t(); ++i) {
    if (d.contains(map.y[i])) {
      s.push_back(map.y[i]);
      s.push_back(map.y_prime[i]);
    } else {
      s.push_back(map.c_i[i]);
      s.push_back(map.c_i_prime[i]);
    }
  }
  return VertexSet(std::move(s));
}

// Projects a 2-maximal independent set s of H other than S_a to a maximal
// independent set of G avoiding X. First repairs s: while some y_i outside s
// has no neighbor in s n Y, swap {c_i, c'_i} for {y_i, y'_i}. Each swap
// raises |s n Y|, so at most t swaps happen. on_step sees every intermediate
// set, starting with s itself.
inline VertexSet project_from_h(const Graph& h, const HGadgetMap& map, const VertexSet& s,
                                const std::function<void(const VertexSet&)>& on_step = {}) {
  if (h.num_vertices() != map.num_vertices) throw InvalidArgument("graph does not match gadget map");
  if (s.contains(map.a)) throw InvalidArgument("set contains a (it is S_a or not 2-maximal)");
  if (!is_independent_set(h, s) || find_is_improvement(h, s, 2))
    throw InvalidArgument("set is not a 2-maximal independent set of H");
  VertexSet cur = s;
  if (on_step) on_step(cur);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < map.t(); ++i) {
      const Vertex yi = map.y[i];
      if (cur.contains(yi)) continue;
      bool dominated = false;
      for (Vertex w : h.neighbors(yi))
        if (w < map.n_original && cur.contains(w)) dominated = true;
      if (dominated) continue;
      if (!cur.contains(map.c_i[i]) || !cur.contains(map.c_i_prime[i]))
        throw InvalidArgument("set violates the 4-cycle structure of H");
      cur = cur.minus(VertexSet{map.c_i[i], map.c_i_prime[i]}).united(VertexSet{yi, map.y_prime[i]});
      if (on_step) on_step(cur);
      changed = true;
      break;
    }
  }
  return cur.intersected(VertexSet(map.y));
}

// ---------------------------------------------------------------------------
// 2-maximal -> k-maximal: every vertex becomes an independent group of k-1
// copies; groups are completely joined iff the originals are adjacent.

struct BlowupMap {
  int k = 2;
  int n_original = 0;

  int group_size() const { return k - 1; }
  std::vector<Vertex> group(Vertex v) const {
    std::vector<Vertex> out;
    for (int j = 0; j < group_size(); ++j) out.push_back(v * group_size() + j);
    return out;
  }
  Vertex original(Vertex w) const { return w / group_size(); }

  friend bool operator==(const BlowupMap&, const BlowupMap&) = default;
};

inline std::pair<Graph, BlowupMap> blowup(const Graph& h, int k) {
  require(k >= 2, "blow-up needs k >= 2");
  BlowupMap map{k, h.num_vertices()};
  std::vector<Edge> edges;
  for (const Edge& e : h.edges())
    for (Vertex a : map.group(e.u))
      for (Vertex b : map.group(e.v)) edges.emplace_back(a, b);
  return {Graph(h.num_vertices() * map.group_size(), edges), map};
}

inline VertexSet lift_blowup(const BlowupMap& map, const VertexSet& s) {
  s.check_range(map.n_original);
  std::vector<Vertex> out;
  for (Vertex v : s)
    for (Vertex w : map.group(v)) out.push_back(w);
  return VertexSet(std::move(out));
}

inline VertexSet project_blowup(const BlowupMap& map, const VertexSet& sk) {
  sk.check_range(map.n_original * map.group_size());
  std::vector<Vertex> out;
  for (Vertex w : sk) out.push_back(map.original(w));
  return VertexSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Vertex cover -> dominating set / feedback vertex set: each edge {u, v} gets
// k new vertices adjacent to exactly u and v. Original edges stay.

struct SubdivisionMap {
  int n_original = 0;
  int k = 2;
  std::vector<Edge> edges;                  // edges of G, in sorted order
  std::vector<std::vector<Vertex>> gadget;  // gadget[e] = the k vertices for edges[e]

  bool is_gadget(Vertex v) const { return v >= n_original; }

  friend bool operator==(const SubdivisionMap&, const SubdivisionMap&) = default;
};

inline std::pair<Graph, SubdivisionMap> build_dom_fvs_graph(const Graph& g, int k) {
  require(k >= 2, "construction needs k >= 2");
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) throw InvalidArgument("graph must not have isolated vertices");
  SubdivisionMap map;
  map.n_original = g.num_vertices();
  map.k = k;
  map.edges = g.edges();
  std::vector<Edge> edges = g.edges();
  Vertex next = g.num_vertices();
  for (const Edge& e : g.edges()) {
    auto& ids = map.gadget.emplace_back();
    for (int i = 0; i < k; ++i, ++next) {
      ids.push_back(next);
      edges.emplace_back(e.u, next);
      edges.emplace_back(e.v, next);
    }
  }
  return {Graph(next, edges), map};
}

// ---------------------------------------------------------------------------
// MISE -> NAE-unflippable assignments

// G is padded with isolated vertices. Variables: x_v for every padded
// vertex (id v), s_e for every edge (n_padded + e), then x*, y*.
struct NaesatGadgetMap {
  int n_original = 0;
  int n_padded = 0;
  int num_vars = 0;
  Count m = 0;
  std::vector<Vertex> x;
  std::vector<Vertex> pads;
  std::vector<Edge> edges;
  std::vector<Variable> x_v;
  std::vector<Variable> s_e;
  Variable x_star = 0, y_star = 0;

  friend bool operator==(const NaesatGadgetMap&, const NaesatGadgetMap&) = default;
};

// Number of padding vertices that makes the lifted assignment unflippable at
// y*: flipping y* gains the 4m|X| copies of (x* | y*) plus |V \ D| - |D| on
// the (x_v | y*) clauses, so |D| - |V \ D| >= 4m|X| is needed, and n + 4m|X|
// pads guarantee it.
inline int default_naesat_padding(const MiseInstance& inst) {
  return inst.g.num_vertices() + 4 * static_cast<int>(inst.g.num_edges()) * static_cast<int>(inst.x.size());
}

// Per edge e = {u, v}: (x* | y* | s_e)^2, (-s_e | -x_u | -x_v)^2, (s_e | x*)^3.
// Per padded vertex: (x_v | y*). Per v in X: (x_v | -x* | y*)^{4m}.
// Finally (x* | y*)^{4m|X|}. m counts the edges of G.
inline std::pair<CnfFormula, NaesatGadgetMap> build_naesat(const MiseInstance& inst,
                                                           std::optional<int> padding = std::nullopt) {
  validate_mise(inst, false);
  const Graph& g = inst.g;
  if (g.num_edges() == 0) throw InvalidArgument("MISE instance without edges is rejected");
  const int n = g.num_vertices();
  const int pads = padding.value_or(default_naesat_padding(inst));
  require(pads >= 0, "padding must be non-negative");
  const Graph padded = add_isolated_vertices(g, pads);

  NaesatGadgetMap map;
  map.n_original = n;
  map.n_padded = padded.num_vertices();
  map.m = static_cast<Count>(padded.num_edges());
  map.x = inst.x.members();
  map.edges = padded.edges();
  for (Vertex v = n; v < map.n_padded; ++v) map.pads.push_back(v);
  for (Vertex v = 0; v < map.n_padded; ++v) map.x_v.push_back(v);
  for (std::size_t e = 0; e < map.edges.size(); ++e) map.s_e.push_back(map.n_padded + static_cast<int>(e));
  map.x_star = map.n_padded + static_cast<int>(map.m);
  map.y_star = map.x_star + 1;
  map.num_vars = map.y_star + 1;

  const Literal xs = Literal::pos(map.x_star), ys = Literal::pos(map.y_star);
  std::vector<std::pair<Clause, Count>> runs;
  for (std::size_t e = 0; e < map.edges.size(); ++e) {
    const Literal se = Literal::pos(map.s_e[e]);
    runs.push_back({Clause{xs, ys, se}, 2});
    runs.push_back({Clause{~se, Literal::neg(map.edges[e].u), Literal::neg(map.edges[e].v)}, 2});
    runs.push_back({Clause{se, xs}, 3});
  }
  for (Vertex v = 0; v < map.n_padded; ++v) runs.push_back({Clause{Literal::pos(v), ys}, 1});
  for (Vertex v : map.x) runs.push_back({Clause{Literal::pos(v), ~xs, ys}, 4 * map.m});
  runs.push_back({Clause{xs, ys}, 4 * map.m * static_cast<Count>(map.x.size())});
  return {CnfFormula::from_runs(map.num_vars, runs), map};
}

// The two NAE-unflippable assignments with x* != y*: x* true, y* false, every
// s_e false, every x_v true; and its complement.
inline std::pair<Assignment, Assignment> canonical_nae_pair(const NaesatGadgetMap& map) {
  Assignment a = Assignment::constant(map.num_vars, false);
  a.set(map.x_star, true);
  for (Variable v : map.x_v) a.set(v, true);
  return {a, complement(a)};
}

// d: a maximal independent set of G avoiding X (padding vertices may be
// included or not; they are always set). All s_e true, x* = y* = false.
inline Assignment lift_to_nae(const NaesatGadgetMap& map, const VertexSet& d) {
  d.check_range(map.n_padded);
  for (Vertex v : map.x)
    if (d.contains(v)) throw InvalidArgument("lifted set meets X");
  Assignment a = Assignment::constant(map.num_vars, false);
  for (Vertex v : d) a.set(map.x_v[static_cast<std::size_t>(v)], true);
  for (Vertex v : map.pads) a.set(map.x_v[static_cast<std::size_t>(v)], true);
  for (Variable s : map.s_e) a.set(s, true);
  return a;
}

// a: NAE-unflippable with a(x*) == a(y*). Complemented first if a(x*) is
// true; returns {v in V(G) : a(x_v)}, padding removed.
inline VertexSet project_from_nae(const NaesatGadgetMap& map, const Assignment& a) {
  require(a.size() == map.num_vars, "assignment size does not match gadget map");
  if (a[map.x_star] != a[map.y_star]) throw InvalidArgument("projection needs a(x*) == a(y*)");
  const Assignment norm = a[map.x_star] ? complement(a) : a;
  std::vector<Vertex> d;
  for (Vertex v = 0; v < map.n_original; ++v)
    if (norm[map.x_v[static_cast<std::size_t>(v)]]) d.push_back(v);
  return VertexSet(std::move(d));
}

// ---------------------------------------------------------------------------
// CNF -> positive CNF: -x becomes a fresh x' (id x + n), and (x | x')^{m+1}
// is added for every original variable, m the original clause count.

struct PolarityMap {
  int original_vars = 0;

  Variable primed(Variable x) const { return x + original_vars; }

  friend bool operator==(const PolarityMap&, const PolarityMap&) = default;
};

inline std::pair<CnfFormula, PolarityMap> positivize(const CnfFormula& f) {
  const int n = f.num_vars();
  PolarityMap map{n};
  std::vector<std::pair<Clause, Count>> runs;
  for (const Clause& c : f.clauses()) {
    std::vector<Literal> lits;
    for (const Literal& l : c) lits.push_back(Literal::pos(l.negated ? map.primed(l.var) : l.var));
    runs.push_back({Clause(std::move(lits)), 1});
  }
  const Count copies = static_cast<Count>(f.num_clauses()) + 1;
  for (Variable x = 0; x < n; ++x) runs.push_back({Clause{Literal::pos(x), Literal::pos(map.primed(x))}, copies});
  return {CnfFormula::from_runs(2 * n, runs), map};
}

inline Assignment lift_positive(const PolarityMap& map, const Assignment& a) {
  require(a.size() == map.original_vars, "assignment size does not match polarity map");
  std::vector<bool> v = a.values();
  for (int x = 0; x < map.original_vars; ++x) v.push_back(!a[x]);
  return Assignment(std::move(v));
}

inline Assignment project_positive(const PolarityMap& map, const Assignment& a) {
  require(a.size() == 2 * map.original_vars, "assignment size does not match polarity map");
  return Assignment(std::vector<bool>(a.values().begin(), a.values().begin() + map.original_vars));
}

// ---------------------------------------------------------------------------
// Positive 2/3-CNF -> multigraph: one vertex per variable; a 2-clause adds
// multiplicity 2 on its pair, a 3-clause a triangle of multiplicity-1 edges.

struct VarVertexMap {
  int num_vars = 0;  // variable x <-> vertex x

  friend bool operator==(const VarVertexMap&, const VarVertexMap&) = default;
};

inline std::pair<MultiGraph, VarVertexMap> build_maxcut(const CnfFormula& f) {
  std::vector<MultiGraph::Record> records;
  for (const Clause& c : f.clauses()) {
    if (!c.is_positive()) throw InvalidArgument("formula must be positive");
    const auto& l = c.literals();
    if (c.size() == 2) {
      records.push_back({Edge(l[0].var, l[1].var), 2});
    } else if (c.size() == 3) {
      records.push_back({Edge(l[0].var, l[1].var), 1});
      records.push_back({Edge(l[1].var, l[2].var), 1});
      records.push_back({Edge(l[0].var, l[2].var), 1});
    } else {
      throw InvalidArgument("clauses must have two or three literals");
    }
  }
  return {MultiGraph(f.num_vars(), std::move(records)), VarVertexMap{f.num_vars()}};
}

// Ordered cut (X = true variables, Y = false variables).
inline Cut cut_of_assignment(const VarVertexMap& map, const Assignment& a) {
  require(a.size() == map.num_vars, "assignment size does not match map");
  return Cut(a.values(), true);
}

inline Assignment assignment_of_cut(const VarVertexMap& map, const Cut& c) {
  require(c.size() == map.num_vars, "cut size does not match map");
  return Assignment(c.sides());
}

// ---------------------------------------------------------------------------
// Multigraph -> 2-CNF: per unit of edge multiplicity (u | v) and (-u | -v),
// then (v*)^{2|E|+1} with v* = vertex 0 and |E| counted with multiplicity.

struct CutSatMap {
  Vertex v_star = 0;
  int num_vertices = 0;

  friend bool operator==(const CutSatMap&, const CutSatMap&) = default;
};

inline std::pair<CnfFormula, CutSatMap> build_2sat(const MultiGraph& mg) {
  require(mg.num_vertices() > 0, "multigraph must have a vertex");
  CutSatMap map{0, mg.num_vertices()};
  std::vector<Clause> clauses;
  for (const auto& r : mg.records())
    for (Count i = 0; i < r.multiplicity; ++i) {
      clauses.push_back(Clause{Literal::pos(r.edge.u), Literal::pos(r.edge.v)});
      clauses.push_back(Clause{Literal::neg(r.edge.u), Literal::neg(r.edge.v)});
    }
  const Count units = 2 * mg.total_multiplicity() + 1;
  clauses.insert(clauses.end(), static_cast<std::size_t>(units), Clause{Literal::pos(map.v_star)});
  return {CnfFormula(mg.num_vertices(), std::move(clauses)), map};
}

// Unordered cut in canonical form.
inline Cut cut_of_2sat_assignment(const CutSatMap& map, const Assignment& a) {
  require(a.size() == map.num_vertices, "assignment size does not match map");
  return Cut(a.values(), false).canonical();
}

// The orientation of c with v* on the true side.
inline Assignment assignment_of_2sat_cut(const CutSatMap& map, const Cut& c) {
  require(c.size() == map.num_vertices, "cut size does not match map");
  const Cut oriented = c.side(map.v_star) ? c : c.swapped();
  return Assignment(oriented.sides());
}

}  // namespace locopt
