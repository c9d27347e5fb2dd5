#pragma once

// Improvement-move search for the k-swap neighborhoods (independent set,
// clique, vertex cover, dominating set, feedback vertex set, matching) and the
// FLIP neighborhood (cut, SAT, NAE-SAT). Each finder returns the first
// improving move in a fixed enumeration order, or nothing when the solution is
// locally optimal.
//
// Swap search only looks at moves whose incoming and outgoing sides differ in
// size by exactly one. For all six families feasibility survives dropping
// extra incoming elements (growing families) or keeping extra outgoing ones
// (shrinking families), so this loses no improving move.
//
// Cost is n^O(k); k above kMaxSwapK is refused unless forced.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "locopt/cnf.hpp"
#include "locopt/error.hpp"
#include "locopt/graph.hpp"

namespace locopt {

inline constexpr int kMaxSwapK = 6;

struct CheckOptions {
  bool force = false;  // allow k > kMaxSwapK
};

// For growing families (independent set, clique, matching) out_set is the
// removed part with |out_set| <= k-1 and |in_set| = |out_set| + 1. For
// shrinking families (vertex cover, dominating set, FVS) in_set is the added
// part with |in_set| <= k-1 and |out_set| = |in_set| + 1.
template <class Set>
struct SwapMove {
  Set out_set;
  Set in_set;

  friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

using VertexSwap = SwapMove<VertexSet>;
using EdgeSwap = SwapMove<Matching>;

struct FlipMove {
  int target = 0;

  friend bool operator==(const FlipMove&, const FlipMove&) = default;
};

inline VertexSet apply(const VertexSet& s, const VertexSwap& m) {
  return s.minus(m.out_set).united(m.in_set);
}

inline Matching apply(const Matching& s, const EdgeSwap& m) {
  std::vector<Edge> out;
  for (const Edge& e : s)
    if (!m.out_set.contains(e)) out.push_back(e);
  out.insert(out.end(), m.in_set.begin(), m.in_set.end());
  return Matching(std::move(out));
}

namespace detail {

inline void check_k(int k, const CheckOptions& opts) {
  require(k >= 1, "k must be at least 1");
  if (k > kMaxSwapK && !opts.force)
    throw GuardrailExceeded("k = " + std::to_string(k) + " exceeds the default limit of " +
                            std::to_string(kMaxSwapK) + "; pass force to override");
}

// Calls f on each r-subset of items in lexicographic order of positions.
// Stops early and returns true as soon as f returns true.
template <class T, class F>
bool for_each_combination(const std::vector<T>& items, std::size_t r, F&& f) {
  const std::size_t n = items.size();
  if (r > n) return false;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<T> pick(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) pick[i] = items[idx[i]];
    if (f(std::span<const T>(pick))) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Lexicographically first r-subset of `items` accepted element by element by
// `accept`, which must be monotone (a rejected element stays rejected under
// any superset of the prefix). accept(x) commits x; undo(x) reverts it.
template <class T, class Accept, class Undo>
bool first_subset(const std::vector<T>& items, std::size_t r, std::vector<T>& chosen,
                  Accept&& accept, Undo&& undo, std::size_t from = 0) {
  if (chosen.size() == r) return true;
  const std::size_t need = r - chosen.size();
  for (std::size_t i = from; i + need <= items.size(); ++i) {
    if (!accept(items[i])) continue;
    chosen.push_back(items[i]);
    if (first_subset(items, r, chosen, accept, undo, i + 1)) return true;
    chosen.pop_back();
    undo(items[i]);
  }
  return false;
}

// Shrinking-family search: for each added set X (by size, then lex) over the
// vertices outside s, find the lex-first Y within s with |Y| = |X| + 1 whose
// removal keeps (s \ Y) u X feasible. `Remover` tracks feasibility of the
// current set T:
//   reset(in_t)   T := set given by mask
//   remove(y)     try T := T \ {y}; false (and no change) if infeasible
//   restore(y)    undo a successful remove(y)
template <class Remover>
std::optional<VertexSwap> find_shrinking_swap(const Graph& g, const VertexSet& s, int k,
                                              Remover& remover) {
  const int n = g.num_vertices();
  const VertexSet outside = s.complement(n);
  std::vector<char> in_t = s.mask(n);
  const std::size_t max_add = std::min<std::size_t>(static_cast<std::size_t>(k - 1), outside.size());
  std::optional<VertexSwap> found;
  std::vector<Vertex> removed;
  for (std::size_t r = 0; r <= max_add && !found; ++r) {
    if (r + 1 > s.size()) break;
    for_each_combination(outside.members(), r, [&](std::span<const Vertex> add) {
      for (Vertex x : add) in_t[static_cast<std::size_t>(x)] = 1;
      remover.reset(in_t);
      removed.clear();
      bool ok = first_subset(
          s.members(), r + 1, removed, [&](Vertex y) { return remover.remove(y); },
          [&](Vertex y) { remover.restore(y); });
      for (Vertex x : add) in_t[static_cast<std::size_t>(x)] = 0;
      if (ok) found = VertexSwap{VertexSet(removed), VertexSet(std::vector<Vertex>(add.begin(), add.end()))};
      return ok;
    });
  }
  return found;
}

class CoverRemover {
 public:
  explicit CoverRemover(const Graph& g) : g_(g) {}
  void reset(const std::vector<char>& in_t) { in_ = in_t; }
  bool remove(Vertex y) {
    for (Vertex w : g_.neighbors(y))
      if (!in_[static_cast<std::size_t>(w)]) return false;
    in_[static_cast<std::size_t>(y)] = 0;
    return true;
  }
  void restore(Vertex y) { in_[static_cast<std::size_t>(y)] = 1; }

 private:
  const Graph& g_;
  std::vector<char> in_;
};

// Tracks |N[w] n T| for every w.
class DominationRemover {
 public:
  explicit DominationRemover(const Graph& g) : g_(g), count_(static_cast<std::size_t>(g.num_vertices())) {}
  void reset(const std::vector<char>& in_t) {
    std::fill(count_.begin(), count_.end(), 0);
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (!in_t[static_cast<std::size_t>(v)]) continue;
      ++count_[static_cast<std::size_t>(v)];
      for (Vertex w : g_.neighbors(v)) ++count_[static_cast<std::size_t>(w)];
    }
  }
  bool remove(Vertex y) {
    if (count_[static_cast<std::size_t>(y)] <= 1) return false;
    for (Vertex w : g_.neighbors(y))
      if (count_[static_cast<std::size_t>(w)] <= 1) return false;
    --count_[static_cast<std::size_t>(y)];
    for (Vertex w : g_.neighbors(y)) --count_[static_cast<std::size_t>(w)];
    return true;
  }
  void restore(Vertex y) {
    ++count_[static_cast<std::size_t>(y)];
    for (Vertex w : g_.neighbors(y)) ++count_[static_cast<std::size_t>(w)];
  }

 private:
  const Graph& g_;
  std::vector<int> count_;
};

// Removing y from T adds y to the forest G - T; allowed iff y's forest
// neighbors lie in pairwise different trees.
class ForestRemover {
 public:
  explicit ForestRemover(const Graph& g) : g_(g) {}
  void reset(const std::vector<char>& in_t) {
    forest_.assign(in_t.size(), 0);
    for (std::size_t v = 0; v < in_t.size(); ++v) forest_[v] = !in_t[v];
  }
  bool remove(Vertex y) {
    forest_[static_cast<std::size_t>(y)] = 1;
    if (!induces_forest(g_, forest_)) {
      forest_[static_cast<std::size_t>(y)] = 0;
      return false;
    }
    return true;
  }
  void restore(Vertex y) { forest_[static_cast<std::size_t>(y)] = 0; }

 private:
  const Graph& g_;
  std::vector<char> forest_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Growing families

inline std::optional<VertexSwap> find_is_improvement(const Graph& g, const VertexSet& s, int k,
                                                     CheckOptions opts = {}) {
  detail::check_k(k, opts);
  if (!is_independent_set(g, s)) throw InvalidArgument("solution is not an independent set");
  const int n = g.num_vertices();
  const auto in_s = s.mask(n);
  // For v outside s: neighbors in s, and neighbors in the current out-set.
  std::vector<int> in_s_nb(static_cast<std::size_t>(n), 0), in_x_nb(static_cast<std::size_t>(n), 0);
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v)) ++in_s_nb[static_cast<std::size_t>(w)];

  std::optional<VertexSwap> found;
  std::vector<Vertex> candidates, chosen;
  const std::size_t max_out = std::min<std::size_t>(static_cast<std::size_t>(k - 1), s.size());
  for (std::size_t r = 0; r <= max_out && !found; ++r) {
    detail::for_each_combination(s.members(), r, [&](std::span<const Vertex> out) {
      for (Vertex x : out)
        for (Vertex w : g.neighbors(x)) ++in_x_nb[static_cast<std::size_t>(w)];
      candidates.clear();
      for (Vertex v = 0; v < n; ++v)
        if (!in_s[static_cast<std::size_t>(v)] &&
            in_s_nb[static_cast<std::size_t>(v)] == in_x_nb[static_cast<std::size_t>(v)])
          candidates.push_back(v);
      for (Vertex x : out)
        for (Vertex w : g.neighbors(x)) --in_x_nb[static_cast<std::size_t>(w)];
      if (candidates.size() < r + 1) return false;
      chosen.clear();
      bool ok = detail::first_subset(
          candidates, r + 1, chosen,
          [&](Vertex v) {
            for (Vertex c : chosen)
              if (g.adjacent(c, v)) return false;
            return true;
          },
          [](Vertex) {});
      if (ok)
        found = VertexSwap{VertexSet(std::vector<Vertex>(out.begin(), out.end())), VertexSet(chosen)};
      return ok;
    });
  }
  return found;
}

// Independent-set search on the complement graph.
inline std::optional<VertexSwap> find_clique_improvement(const Graph& g, const VertexSet& s, int k,
                                                         CheckOptions opts = {}) {
  detail::check_k(k, opts);
  if (!is_clique(g, s)) throw InvalidArgument("solution is not a clique");
  return find_is_improvement(complement_graph(g), s, k, opts);
}

inline std::optional<EdgeSwap> find_matching_improvement(const Graph& g, const Matching& m, int k,
                                                         CheckOptions opts = {}) {
  detail::check_k(k, opts);
  if (!is_matching(g, m)) throw InvalidArgument("solution is not a matching");
  const int n = g.num_vertices();
  // Vertices covered by m minus the current out-set.
  std::vector<char> busy(static_cast<std::size_t>(n), 0);
  for (const Edge& e : m) busy[static_cast<std::size_t>(e.u)] = busy[static_cast<std::size_t>(e.v)] = 1;

  std::optional<EdgeSwap> found;
  std::vector<Edge> candidates, chosen;
  const std::size_t max_out = std::min<std::size_t>(static_cast<std::size_t>(k - 1), m.size());
  for (std::size_t r = 0; r <= max_out && !found; ++r) {
    detail::for_each_combination(m.edges(), r, [&](std::span<const Edge> out) {
      for (const Edge& e : out) busy[static_cast<std::size_t>(e.u)] = busy[static_cast<std::size_t>(e.v)] = 0;
      candidates.clear();
      for (const Edge& e : g.edges())
        if (!busy[static_cast<std::size_t>(e.u)] && !busy[static_cast<std::size_t>(e.v)] && !m.contains(e))
          candidates.push_back(e);
      bool ok = false;
      if (candidates.size() >= r + 1) {
        chosen.clear();
        ok = detail::first_subset(
            candidates, r + 1, chosen,
            [&](const Edge& e) {
              if (busy[static_cast<std::size_t>(e.u)] || busy[static_cast<std::size_t>(e.v)]) return false;
              busy[static_cast<std::size_t>(e.u)] = busy[static_cast<std::size_t>(e.v)] = 1;
              return true;
            },
            [&](const Edge& e) { busy[static_cast<std::size_t>(e.u)] = busy[static_cast<std::size_t>(e.v)] = 0; });
        for (const Edge& e : chosen) busy[static_cast<std::size_t>(e.u)] = busy[static_cast<std::size_t>(e.v)] = 0;
      }
      for (const Edge& e : out) busy[static_cast<std::size_t>(e.u)] = busy[static_cast<std::size_t>(e.v)] = 1;
      if (ok) found = EdgeSwap{Matching(std::vector<Edge>(out.begin(), out.end())), Matching(chosen)};
      return ok;
    });
  }
  return found;
}

// ---------------------------------------------------------------------------
// Shrinking families

inline std::optional<VertexSwap> find_vc_improvement(const Graph& g, const VertexSet& s, int k,
                                                     CheckOptions opts = {}) {
  detail::check_k(k, opts);
  if (!is_vertex_cover(g, s)) throw InvalidArgument("solution is not a vertex cover");
  detail::CoverRemover remover(g);
  return detail::find_shrinking_swap(g, s, k, remover);
}

inline std::optional<VertexSwap> find_ds_improvement(const Graph& g, const VertexSet& d, int k,
                                                     CheckOptions opts = {}) {
  detail::check_k(k, opts);
  if (!is_dominating_set(g, d)) throw InvalidArgument("solution is not a dominating set");
  detail::DominationRemover remover(g);
  return detail::find_shrinking_swap(g, d, k, remover);
}

inline std::optional<VertexSwap> find_fvs_improvement(const Graph& g, const VertexSet& s, int k,
                                                      CheckOptions opts = {}) {
  detail::check_k(k, opts);
  if (!is_feedback_vertex_set(g, s)) throw InvalidArgument("solution is not a feedback vertex set");
  detail::ForestRemover remover(g);
  return detail::find_shrinking_swap(g, s, k, remover);
}

// ---------------------------------------------------------------------------
// FLIP neighborhoods

// Gain of moving v to the other side: same-side minus cross-side incident
// multiplicity.
inline Count cut_flip_gain(const MultiGraph& mg, const Cut& c, Vertex v) {
  Count gain = 0;
  for (const auto& inc : mg.incident(v))
    gain += (c.side(inc.neighbor) == c.side(v)) ? inc.multiplicity : -inc.multiplicity;
  return gain;
}

inline std::optional<FlipMove> find_cut_improvement(const MultiGraph& mg, const Cut& c) {
  require(c.size() == mg.num_vertices(), "cut does not cover the vertex set");
  for (Vertex v = 0; v < mg.num_vertices(); ++v)
    if (cut_flip_gain(mg, c, v) > 0) return FlipMove{v};
  return std::nullopt;
}

inline std::optional<FlipMove> find_sat_flip(const CnfFormula& f, const Assignment& a) {
  detail::check_assignment(f, a);
  for (Variable x = 0; x < f.num_vars(); ++x)
    if (sat_delta(f, a, x) > 0) return FlipMove{x};
  return std::nullopt;
}

inline std::optional<FlipMove> find_nae_flip(const CnfFormula& f, const Assignment& a) {
  detail::check_assignment(f, a);
  for (Variable x = 0; x < f.num_vars(); ++x)
    if (nae_delta(f, a, x) > 0) return FlipMove{x};
  return std::nullopt;
}

}  // namespace locopt
