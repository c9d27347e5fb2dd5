#pragma once

// Raw-definition brute force used as ground truth in tests. Works on bitmasks
// and only uses Graph/MultiGraph/CnfFormula as data; feasibility and counts
// are recomputed here rather than taken from the library.

#include <bit>
#include <cstdint>
#include <vector>

#include "locopt/cnf.hpp"
#include "locopt/graph.hpp"

namespace brute {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency(const locopt::Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  return adj;
}

inline Mask full(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline int popcount(Mask m) { return std::popcount(m); }

inline bool independent(const std::vector<Mask>& adj, Mask s) {
  for (Mask r = s; r; r &= r - 1)
    if (adj[static_cast<std::size_t>(std::countr_zero(r))] & s) return false;
  return true;
}

inline bool clique(const std::vector<Mask>& adj, Mask s) {
  for (Mask r = s; r; r &= r - 1) {
    const int v = std::countr_zero(r);
    if ((s & ~(Mask{1} << v)) & ~adj[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

inline bool vertex_cover(const std::vector<Mask>& adj, int n, Mask s) {
  return independent(adj, full(n) & ~s);
}

inline bool dominating(const std::vector<Mask>& adj, int n, Mask s) {
  for (int v = 0; v < n; ++v)
    if (!((s >> v) & 1) && !(adj[static_cast<std::size_t>(v)] & s)) return false;
  return true;
}

// g - s acyclic: every component has fewer edges than vertices. Components
// are found by flood fill.
inline bool feedback(const std::vector<Mask>& adj, int n, Mask s) {
  const Mask keep = full(n) & ~s;
  Mask seen = 0;
  for (int v = 0; v < n; ++v) {
    if (!((keep >> v) & 1) || ((seen >> v) & 1)) continue;
    Mask comp = Mask{1} << v, frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (Mask r = frontier; r; r &= r - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(r))] & keep;
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    int degree_sum = 0;
    for (Mask r = comp; r; r &= r - 1) degree_sum += popcount(adj[static_cast<std::size_t>(std::countr_zero(r))] & comp);
    if (degree_sum / 2 >= popcount(comp)) return false;
  }
  return true;
}

// S is a k-maximal member of a down-closed family (independent sets, cliques):
// feasible, and no X subset of S with |X| <= k-1 and Y outside S with
// |Y| >= |X|+1 such that (S \ X) u Y is feasible. Y ranges over all sizes.
template <class Feasible>
bool k_maximal(int n, Mask s, int k, Feasible&& feasible) {
  if (!feasible(s)) return false;
  const Mask outside = full(n) & ~s;
  for (Mask x = s;; x = (x - 1) & s) {
    if (popcount(x) <= k - 1) {
      for (Mask y = outside; y; y = (y - 1) & outside)
        if (popcount(y) >= popcount(x) + 1 && feasible((s & ~x) | y)) return false;
    }
    if (x == 0) break;
  }
  return true;
}

// S is a k-minimal member of an up-closed family: feasible, and no X outside
// S with |X| <= k-1 and Y subset of S with |Y| >= |X|+1 keeping feasibility.
template <class Feasible>
bool k_minimal(int n, Mask s, int k, Feasible&& feasible) {
  if (!feasible(s)) return false;
  const Mask outside = full(n) & ~s;
  for (Mask x = outside;; x = (x - 1) & outside) {
    if (popcount(x) <= k - 1) {
      for (Mask y = s; y; y = (y - 1) & s)
        if (popcount(y) >= popcount(x) + 1 && feasible((s & ~y) | x)) return false;
    }
    if (x == 0) break;
  }
  return true;
}

// Matchings as masks over the edge list g.edges().
inline bool matching_mask(const locopt::Graph& g, Mask m) {
  const auto edges = g.edges();
  Mask used = 0;
  for (Mask r = m; r; r &= r - 1) {
    const auto& e = edges[static_cast<std::size_t>(std::countr_zero(r))];
    const Mask ends = (Mask{1} << e.u) | (Mask{1} << e.v);
    if (used & ends) return false;
    used |= ends;
  }
  return true;
}

inline locopt::Matching matching_of_mask(const locopt::Graph& g, Mask m) {
  const auto edges = g.edges();
  std::vector<locopt::Edge> out;
  for (Mask r = m; r; r &= r - 1) out.push_back(edges[static_cast<std::size_t>(std::countr_zero(r))]);
  return locopt::Matching(std::move(out));
}

inline Mask mask_of_matching(const locopt::Graph& g, const locopt::Matching& m) {
  const auto edges = g.edges();
  Mask out = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (m.contains(edges[i])) out |= Mask{1} << i;
  return out;
}

inline std::vector<Mask> k_maximal_matchings(const locopt::Graph& g, int k) {
  const int m = static_cast<int>(g.num_edges());
  std::vector<Mask> out;
  for (Mask s = 0; s <= full(m); ++s) {
    if (k_maximal(m, s, k, [&](Mask t) { return matching_mask(g, t); })) out.push_back(s);
    if (s == full(m)) break;
  }
  return out;
}

inline int max_matching_size(const locopt::Graph& g) {
  const int m = static_cast<int>(g.num_edges());
  int best = 0;
  for (Mask s = 0;; ++s) {
    if (matching_mask(g, s)) best = std::max(best, popcount(s));
    if (s == full(m)) break;
  }
  return best;
}

inline locopt::Count cut_weight(const locopt::MultiGraph& mg, const std::vector<bool>& side) {
  locopt::Count w = 0;
  for (const auto& r : mg.records())
    if (side[static_cast<std::size_t>(r.edge.u)] != side[static_cast<std::size_t>(r.edge.v)]) w += r.multiplicity;
  return w;
}

inline bool stable(const locopt::MultiGraph& mg, const std::vector<bool>& side) {
  const auto w = cut_weight(mg, side);
  for (std::size_t v = 0; v < side.size(); ++v) {
    auto t = side;
    t[v] = !t[v];
    if (cut_weight(mg, t) > w) return false;
  }
  return true;
}

inline locopt::Count sat_count(const locopt::CnfFormula& f, const std::vector<bool>& a, bool nae) {
  locopt::Count c = 0;
  for (const auto& cl : f.clauses()) {
    bool any_true = false, any_false = false;
    for (const auto& l : cl) (a[static_cast<std::size_t>(l.var)] != l.negated ? any_true : any_false) = true;
    if (nae ? (any_true && any_false) : any_true) ++c;
  }
  return c;
}

inline bool unflippable(const locopt::CnfFormula& f, const std::vector<bool>& a, bool nae) {
  const auto base = sat_count(f, a, nae);
  for (std::size_t x = 0; x < a.size(); ++x) {
    auto b = a;
    b[x] = !b[x];
    if (sat_count(f, b, nae) > base) return false;
  }
  return true;
}

inline std::vector<bool> bits_of(int n, std::uint64_t v) {
  std::vector<bool> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = (v >> i) & 1U;
  return out;
}

inline std::size_t count_unflippable(const locopt::CnfFormula& f, bool nae) {
  std::size_t c = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << f.num_vars()); ++v)
    if (unflippable(f, bits_of(f.num_vars(), v), nae)) ++c;
  return c;
}

// Stable cuts: ordered counts every side vector; unordered pins vertex 0.
inline std::size_t count_stable_cuts(const locopt::MultiGraph& mg, bool ordered) {
  const int n = mg.num_vertices();
  std::size_t c = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    if (!ordered && n > 0 && !(v & 1U)) continue;
    if (stable(mg, bits_of(n, v))) ++c;
  }
  return c;
}

// Some maximal independent set avoiding X exists (raw subset scan).
inline bool mise_solvable(const locopt::Graph& g, Mask x) {
  const auto adj = adjacency(g);
  const int n = g.num_vertices();
  for (Mask s = 0;; ++s) {
    if (!(s & x) && k_maximal(n, s, 1, [&](Mask t) { return independent(adj, t); })) return true;
    if (s == full(n)) break;
  }
  return false;
}

}  // namespace brute
