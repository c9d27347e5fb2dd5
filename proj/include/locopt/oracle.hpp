#pragma once

// Exhaustive ground truth. Every routine here enumerates candidates directly
// (maximal or minimal feasible sets by backtracking, all cuts and assignments
// by Gray code) and filters them with the local-optimality checkers, so the
// result is exactly the set of local optima.
//
// Sizes are capped (kOracleLimit vertices / edges / variables) unless the
// caller forces the run.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locopt/cnf.hpp"
#include "locopt/error.hpp"
#include "locopt/graph.hpp"
#include "locopt/local_optimality.hpp"
#include "locopt/problem.hpp"

namespace locopt {

inline constexpr int kOracleLimit = 24;

struct OracleOptions {
  std::optional<std::size_t> limit;  // stop once this many solutions are found
  bool force = false;                // lift the size guardrail (and the k limit)
  bool ordered_cuts = false;         // report cuts as ordered pairs
};

struct SolutionList {
  Problem kind = Problem::independent_set;
  std::vector<Solution> solutions;

  std::size_t size() const { return solutions.size(); }
  friend bool operator==(const SolutionList&, const SolutionList&) = default;
};

namespace detail {

inline void check_oracle_size(long size, const char* what, const OracleOptions& opts) {
  if (size > kOracleLimit && !opts.force)
    throw GuardrailExceeded(std::string(what) + " count " + std::to_string(size) +
                            " exceeds the oracle limit of " + std::to_string(kOracleLimit) +
                            "; pass force to override");
}

inline bool reached(std::size_t found, const std::optional<std::size_t>& limit) {
  return limit && found >= *limit;
}

enum class Mark : char { undecided, in, out };

// Backtracking over vertices 0..n-1 for inclusion-minimal members of an
// up-closed family. The family supplies:
//   completable(marks)  in-set plus undecided vertices is feasible
//   feasible(marks)     in-set alone is feasible
//   doomed(marks, v)    v (in) is redundant in every completion
// Once the in-set is feasible no proper extension can be minimal, so the
// branch ends there.
template <class Family>
void enumerate_minimal(int n, Family& fam, const std::function<bool(const VertexSet&)>& emit) {
  std::vector<Mark> marks(static_cast<std::size_t>(n), Mark::undecided);
  bool stop = false;
  auto in_set = [&] {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (marks[static_cast<std::size_t>(v)] == Mark::in) s.push_back(v);
    return VertexSet(std::move(s));
  };
  auto any_doomed = [&] {
    for (Vertex v = 0; v < n; ++v)
      if (marks[static_cast<std::size_t>(v)] == Mark::in && fam.doomed(marks, v)) return true;
    return false;
  };
  auto rec = [&](auto&& self, Vertex i) -> void {
    if (stop) return;
    if (fam.feasible(marks)) {
      // Remaining undecided vertices stay out; doomed() already ruled out
      // redundancy of every in-vertex given that completion.
      std::vector<Mark> saved = marks;
      for (auto& m : marks)
        if (m == Mark::undecided) m = Mark::out;
      if (!any_doomed() && !emit(in_set())) stop = true;
      marks = std::move(saved);
      return;
    }
    if (i == n) return;
    const auto at = static_cast<std::size_t>(i);
    marks[at] = Mark::in;
    if (!any_doomed()) self(self, i + 1);
    marks[at] = Mark::out;
    if (fam.completable(marks)) self(self, i + 1);
    marks[at] = Mark::undecided;
  };
  rec(rec, 0);
}

struct CoverFamily {
  const Graph& g;
  bool completable(const std::vector<Mark>& m) const {
    for (const Edge& e : g.edges())
      if (m[static_cast<std::size_t>(e.u)] == Mark::out && m[static_cast<std::size_t>(e.v)] == Mark::out)
        return false;
    return true;
  }
  bool feasible(const std::vector<Mark>& m) const {
    for (const Edge& e : g.edges())
      if (m[static_cast<std::size_t>(e.u)] != Mark::in && m[static_cast<std::size_t>(e.v)] != Mark::in)
        return false;
    return true;
  }
  bool doomed(const std::vector<Mark>& m, Vertex v) const {
    for (Vertex w : g.neighbors(v))
      if (m[static_cast<std::size_t>(w)] != Mark::in) return false;
    return true;
  }
};

struct DominationFamily {
  const Graph& g;
  bool covered(const std::vector<Mark>& m, Vertex w, bool allow_undecided, Vertex skip = -1) const {
    auto ok = [&](Vertex x) {
      if (x == skip) return false;
      auto mk = m[static_cast<std::size_t>(x)];
      return mk == Mark::in || (allow_undecided && mk == Mark::undecided);
    };
    if (ok(w)) return true;
    for (Vertex x : g.neighbors(w))
      if (ok(x)) return true;
    return false;
  }
  bool completable(const std::vector<Mark>& m) const {
    for (Vertex w = 0; w < g.num_vertices(); ++w)
      if (!covered(m, w, true)) return false;
    return true;
  }
  bool feasible(const std::vector<Mark>& m) const {
    for (Vertex w = 0; w < g.num_vertices(); ++w)
      if (!covered(m, w, false)) return false;
    return true;
  }
  // Every vertex of N[v] already has another in-neighbor.
  bool doomed(const std::vector<Mark>& m, Vertex v) const {
    if (!covered(m, v, false, v)) return false;
    for (Vertex w : g.neighbors(v))
      if (!covered(m, w, false, v)) return false;
    return true;
  }
};

struct ForestFamily {
  const Graph& g;
  // Components of the subgraph induced by vertices not marked `in` (and, if
  // requested, not undecided).
  UnionFind components(const std::vector<Mark>& m, bool include_undecided, bool* acyclic) const {
    UnionFind uf(g.num_vertices());
    *acyclic = true;
    auto keep = [&](Vertex x) {
      auto mk = m[static_cast<std::size_t>(x)];
      return mk == Mark::out || (include_undecided && mk == Mark::undecided);
    };
    for (const Edge& e : g.edges())
      if (keep(e.u) && keep(e.v) && !uf.unite(e.u, e.v)) *acyclic = false;
    return uf;
  }
  bool completable(const std::vector<Mark>& m) const {
    bool acyclic = true;
    components(m, false, &acyclic);
    return acyclic;
  }
  bool feasible(const std::vector<Mark>& m) const {
    bool acyclic = true;
    components(m, true, &acyclic);
    return acyclic;
  }
  // No cycle through v even if every non-in vertex ends up in the forest.
  bool doomed(const std::vector<Mark>& m, Vertex v) const {
    bool acyclic = true;
    UnionFind uf = components(m, true, &acyclic);
    std::vector<int> roots;
    for (Vertex w : g.neighbors(v))
      if (m[static_cast<std::size_t>(w)] != Mark::in) roots.push_back(uf.find(w));
    std::sort(roots.begin(), roots.end());
    return std::adjacent_find(roots.begin(), roots.end()) == roots.end();
  }
};

// Maximal independent sets of g[allowed] by backtracking over vertices in
// ascending order. An excluded vertex must end up with an included neighbor.
inline void enumerate_maximal_independent(const Graph& g, const std::vector<char>& allowed,
                                          const std::function<bool(const VertexSet&)>& emit) {
  const int n = g.num_vertices();
  std::vector<Mark> marks(static_cast<std::size_t>(n), Mark::undecided);
  std::vector<int> in_nb(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    if (!allowed[static_cast<std::size_t>(v)]) marks[static_cast<std::size_t>(v)] = Mark::out;
  bool stop = false;

  // Every allowed, excluded vertex without an included neighbor still has an
  // undecided allowed neighbor that could be included.
  auto viable = [&](Vertex decided_upto) {
    for (Vertex v = 0; v <= decided_upto; ++v) {
      if (!allowed[static_cast<std::size_t>(v)] || marks[static_cast<std::size_t>(v)] != Mark::out ||
          in_nb[static_cast<std::size_t>(v)] > 0)
        continue;
      bool hope = false;
      for (Vertex w : g.neighbors(v))
        if (w > decided_upto && allowed[static_cast<std::size_t>(w)] && in_nb[static_cast<std::size_t>(w)] == 0) {
          hope = true;
          break;
        }
      if (!hope) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, Vertex i) -> void {
    if (stop) return;
    while (i < n && !allowed[static_cast<std::size_t>(i)]) ++i;
    if (i == n) {
      std::vector<Vertex> s;
      for (Vertex v = 0; v < n; ++v)
        if (marks[static_cast<std::size_t>(v)] == Mark::in) s.push_back(v);
      if (!emit(VertexSet(std::move(s)))) stop = true;
      return;
    }
    auto& m = marks[static_cast<std::size_t>(i)];
    if (in_nb[static_cast<std::size_t>(i)] == 0) {
      m = Mark::in;
      for (Vertex w : g.neighbors(i)) ++in_nb[static_cast<std::size_t>(w)];
      if (viable(i)) self(self, i + 1);
      for (Vertex w : g.neighbors(i)) --in_nb[static_cast<std::size_t>(w)];
    }
    m = Mark::out;
    if (viable(i)) self(self, i + 1);
    m = Mark::undecided;
  };
  rec(rec, 0);
}

// Bron-Kerbosch with pivoting.
inline void enumerate_maximal_cliques(const Graph& g, const std::function<bool(const VertexSet&)>& emit) {
  bool stop = false;
  std::vector<Vertex> r;
  auto rec = [&](auto&& self, std::vector<Vertex> p, std::vector<Vertex> x) -> void {
    if (stop) return;
    if (p.empty() && x.empty()) {
      if (!emit(VertexSet(r))) stop = true;
      return;
    }
    Vertex pivot = -1;
    std::size_t best = 0;
    for (const auto* pool : {&p, &x})
      for (Vertex u : *pool) {
        std::size_t cnt = 0;
        for (Vertex v : p) cnt += g.adjacent(u, v) ? 1 : 0;
        if (pivot == -1 || cnt > best) {
          pivot = u;
          best = cnt;
        }
      }
    std::vector<Vertex> todo;
    for (Vertex v : p)
      if (!g.adjacent(pivot, v)) todo.push_back(v);
    for (Vertex v : todo) {
      std::vector<Vertex> np, nx;
      for (Vertex w : p)
        if (g.adjacent(v, w)) np.push_back(w);
      for (Vertex w : x)
        if (g.adjacent(v, w)) nx.push_back(w);
      r.push_back(v);
      self(self, std::move(np), std::move(nx));
      r.pop_back();
      if (stop) return;
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<Vertex> all(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) all[static_cast<std::size_t>(v)] = v;
  rec(rec, all, {});
}

// Maximal matchings by backtracking over the sorted edge list. An excluded
// edge must end up touching an included one.
inline void enumerate_maximal_matchings(const Graph& g, const std::function<bool(const Matching&)>& emit) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<char> busy(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<char> taken(m, 0);
  bool stop = false;

  auto viable = [&](std::size_t decided_upto) {
    for (std::size_t i = 0; i <= decided_upto && i < m; ++i) {
      if (taken[i]) continue;
      const Edge& e = edges[i];
      if (busy[static_cast<std::size_t>(e.u)] || busy[static_cast<std::size_t>(e.v)]) continue;
      // Needs a later edge at u or v that can still be taken.
      bool hope = false;
      for (std::size_t j = decided_upto + 1; j < m && !hope; ++j) {
        const Edge& f = edges[j];
        if ((f.touches(e.u) || f.touches(e.v)) && !busy[static_cast<std::size_t>(f.u)] &&
            !busy[static_cast<std::size_t>(f.v)])
          hope = true;
      }
      if (!hope) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == m) {
      std::vector<Edge> out;
      for (std::size_t j = 0; j < m; ++j)
        if (taken[j]) out.push_back(edges[j]);
      if (!emit(Matching(std::move(out)))) stop = true;
      return;
    }
    const Edge& e = edges[i];
    auto& bu = busy[static_cast<std::size_t>(e.u)];
    auto& bv = busy[static_cast<std::size_t>(e.v)];
    if (!bu && !bv) {
      bu = bv = 1;
      taken[i] = 1;
      if (viable(i)) self(self, i + 1);
      taken[i] = 0;
      bu = bv = 0;
    }
    if (viable(i)) self(self, i + 1);
  };
  rec(rec, 0);
}

// Clause multiset compressed to distinct clauses with weights, plus the
// per-variable occurrence lists, for Gray-code scans.
struct WeightedCnf {
  struct Entry {
    std::vector<Literal> lits;
    Count weight;
  };
  std::vector<Entry> clauses;
  std::vector<std::vector<std::size_t>> occ;

  explicit WeightedCnf(const CnfFormula& f) : occ(static_cast<std::size_t>(f.num_vars())) {
    std::map<Clause, Count> counts;
    for (const Clause& c : f.clauses()) ++counts[c];
    for (const auto& [c, w] : counts) {
      for (const Literal& l : c) occ[static_cast<std::size_t>(l.var)].push_back(clauses.size());
      clauses.push_back({c.literals(), w});
    }
  }
};

// For NAE scans: a variable p whose occurrences are all copies of one
// two-literal clause (lp | lq) is forced to make lp != lq in every
// NAE-unflippable assignment (otherwise flipping p gains the clause). Such
// pendant variables are not enumerated; they follow their partner q.
// Returns partner[p] = q for pendants and -1 for enumerated variables.
inline std::vector<Variable> nae_pendants(const WeightedCnf& wc) {
  const std::size_t n = wc.occ.size();
  std::vector<Variable> partner(n, -1);
  for (std::size_t p = 0; p < n; ++p) {
    if (wc.occ[p].size() != 1) continue;
    const auto& c = wc.clauses[wc.occ[p][0]];
    if (c.lits.size() != 2) continue;
    const Variable q = c.lits[0].var == static_cast<Variable>(p) ? c.lits[1].var : c.lits[0].var;
    if (partner[static_cast<std::size_t>(q)] != -1) continue;
    partner[p] = q;
  }
  return partner;
}

inline int enumerated_variables(const CnfFormula& f, bool nae) {
  if (!nae) return f.num_vars();
  const auto partner = nae_pendants(WeightedCnf(f));
  return static_cast<int>(std::count(partner.begin(), partner.end(), -1));
}

// Scans assignments in Gray-code order, maintaining per-clause true counts
// and per-variable flip gains; calls visit(values) on every assignment where
// no variable has positive gain. All 2^n assignments for SAT; for NAE the
// pendant variables are set from their partners, which loses no
// NAE-unflippable assignment.
template <class Visit>
void scan_unflippable(const CnfFormula& f, bool nae, Visit&& visit) {
  const WeightedCnf wc(f);
  const int n = f.num_vars();
  std::vector<Variable> partner(static_cast<std::size_t>(n), -1);
  if (nae) partner = nae_pendants(wc);
  std::vector<Variable> core;
  std::vector<std::vector<Variable>> followers(static_cast<std::size_t>(n));
  for (Variable v = 0; v < n; ++v) {
    if (partner[static_cast<std::size_t>(v)] == -1)
      core.push_back(v);
    else
      followers[static_cast<std::size_t>(partner[static_cast<std::size_t>(v)])].push_back(v);
  }

  std::vector<char> val(static_cast<std::size_t>(n), 0);
  std::vector<int> trues(wc.clauses.size(), 0);
  std::vector<Count> gain(static_cast<std::size_t>(n), 0);
  int positive = 0;

  auto lit_true = [&](const Literal& l) { return (val[static_cast<std::size_t>(l.var)] != 0) != l.negated; };
  // Pendants start opposite to their partner literal.
  for (Variable p = 0; p < n; ++p) {
    if (partner[static_cast<std::size_t>(p)] == -1) continue;
    const auto& lits = wc.clauses[wc.occ[static_cast<std::size_t>(p)][0]].lits;
    const Literal& lp = lits[0].var == p ? lits[0] : lits[1];
    const Literal& lq = lits[0].var == p ? lits[1] : lits[0];
    val[static_cast<std::size_t>(p)] = static_cast<char>(!lit_true(lq) != lp.negated);
  }
  auto contribution = [&](std::size_t ci, const Literal& l) -> Count {
    const auto& c = wc.clauses[ci];
    const int t = trues[ci];
    const int after = lit_true(l) ? t - 1 : t + 1;
    const int size = static_cast<int>(c.lits.size());
    if (nae) {
      auto ok = [&](int x) { return x > 0 && x < size; };
      return c.weight * (static_cast<int>(ok(after)) - static_cast<int>(ok(t)));
    }
    return c.weight * (static_cast<int>(after > 0) - static_cast<int>(t > 0));
  };
  auto touch = [&](std::size_t ci, int sign) {
    for (const Literal& l : wc.clauses[ci].lits) {
      auto& gv = gain[static_cast<std::size_t>(l.var)];
      positive -= gv > 0 ? 1 : 0;
      gv += sign * contribution(ci, l);
      positive += gv > 0 ? 1 : 0;
    }
  };
  for (std::size_t ci = 0; ci < wc.clauses.size(); ++ci) {
    for (const Literal& l : wc.clauses[ci].lits) trues[ci] += lit_true(l) ? 1 : 0;
    touch(ci, +1);
  }
  auto flip_var = [&](Variable x) {
    for (std::size_t ci : wc.occ[static_cast<std::size_t>(x)]) touch(ci, -1);
    val[static_cast<std::size_t>(x)] ^= 1;
    for (std::size_t ci : wc.occ[static_cast<std::size_t>(x)]) {
      trues[ci] = 0;
      for (const Literal& l : wc.clauses[ci].lits) trues[ci] += lit_true(l) ? 1 : 0;
      touch(ci, +1);
    }
  };
  const std::uint64_t total = std::uint64_t{1} << core.size();
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i > 0) {
      const Variable x = core[static_cast<std::size_t>(std::countr_zero(i))];
      flip_var(x);
      for (Variable p : followers[static_cast<std::size_t>(x)]) flip_var(p);
    }
    if (positive == 0 && !visit(val)) return;
  }
}

// Same for cuts. Vertex 0 is pinned to side X when only unordered cuts are
// wanted; visit gets the side vector.
template <class Visit>
void scan_stable_cuts(const MultiGraph& mg, bool pin_first, Visit&& visit) {
  const int n = mg.num_vertices();
  std::vector<char> side(static_cast<std::size_t>(n), 0);
  std::vector<Count> gain(static_cast<std::size_t>(n), 0);
  int positive = 0;
  const int free_from = (pin_first && n > 0) ? 1 : 0;
  if (free_from == 1) side[0] = 1;
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& inc : mg.incident(v))
      gain[static_cast<std::size_t>(v)] +=
          side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(inc.neighbor)] ? inc.multiplicity
                                                                                          : -inc.multiplicity;
    positive += gain[static_cast<std::size_t>(v)] > 0 ? 1 : 0;
  }
  auto bump = [&](Vertex v, Count delta) {
    auto& gv = gain[static_cast<std::size_t>(v)];
    positive -= gv > 0 ? 1 : 0;
    gv += delta;
    positive += gv > 0 ? 1 : 0;
  };
  auto flip_vertex = [&](Vertex v) {
    for (const auto& inc : mg.incident(v)) {
      bool same = side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(inc.neighbor)];
      bump(inc.neighbor, same ? -2 * inc.multiplicity : 2 * inc.multiplicity);
    }
    side[static_cast<std::size_t>(v)] ^= 1;
    bump(v, -2 * gain[static_cast<std::size_t>(v)]);
  };
  const int free_bits = n - free_from;
  const std::uint64_t total = std::uint64_t{1} << free_bits;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i > 0) flip_vertex(free_from + std::countr_zero(i));
    if (positive == 0 && !visit(side)) return;
  }
}

template <class T>
std::vector<Solution> to_solutions(std::vector<T> items) {
  std::sort(items.begin(), items.end());
  std::vector<Solution> out;
  out.reserve(items.size());
  for (auto& x : items) out.emplace_back(std::move(x));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Typed enumerators. Results are sorted; with a limit, enumeration stops after
// that many hits (which ones depends on the search order, but is fixed).

inline std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g, OracleOptions opts = {}) {
  detail::check_oracle_size(g.num_vertices(), "vertex", opts);
  std::vector<VertexSet> out;
  std::vector<char> allowed(static_cast<std::size_t>(g.num_vertices()), 1);
  detail::enumerate_maximal_independent(g, allowed, [&](const VertexSet& s) {
    out.push_back(s);
    return !detail::reached(out.size(), opts.limit);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VertexSet> enumerate_k_maximal_independent_sets(const Graph& g, int k, OracleOptions opts = {}) {
  detail::check_oracle_size(g.num_vertices(), "vertex", opts);
  CheckOptions check{opts.force};
  detail::check_k(k, check);
  std::vector<VertexSet> out;
  std::vector<char> allowed(static_cast<std::size_t>(g.num_vertices()), 1);
  detail::enumerate_maximal_independent(g, allowed, [&](const VertexSet& s) {
    if (!find_is_improvement(g, s, k, check)) out.push_back(s);
    return !detail::reached(out.size(), opts.limit);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VertexSet> enumerate_k_maximal_cliques(const Graph& g, int k, OracleOptions opts = {}) {
  detail::check_oracle_size(g.num_vertices(), "vertex", opts);
  CheckOptions check{opts.force};
  detail::check_k(k, check);
  std::vector<VertexSet> out;
  detail::enumerate_maximal_cliques(g, [&](const VertexSet& s) {
    if (!find_clique_improvement(g, s, k, check)) out.push_back(s);
    return !detail::reached(out.size(), opts.limit);
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
template <class Family, class Checker>
std::vector<VertexSet> enumerate_k_minimal(const Graph& g, int k, const OracleOptions& opts, Family fam,
                                           Checker&& checker) {
  check_oracle_size(g.num_vertices(), "vertex", opts);
  CheckOptions check{opts.force};
  check_k(k, check);
  std::vector<VertexSet> out;
  enumerate_minimal(g.num_vertices(), fam, [&](const VertexSet& s) {
    if (!checker(g, s, k, check)) out.push_back(s);
    return !reached(out.size(), opts.limit);
  });
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace detail

inline std::vector<VertexSet> enumerate_k_minimal_vertex_covers(const Graph& g, int k, OracleOptions opts = {}) {
  return detail::enumerate_k_minimal(g, k, opts, detail::CoverFamily{g},
                                     [](const auto&... a) { return find_vc_improvement(a...); });
}

inline std::vector<VertexSet> enumerate_k_minimal_dominating_sets(const Graph& g, int k, OracleOptions opts = {}) {
  return detail::enumerate_k_minimal(g, k, opts, detail::DominationFamily{g},
                                     [](const auto&... a) { return find_ds_improvement(a...); });
}

inline std::vector<VertexSet> enumerate_k_minimal_feedback_vertex_sets(const Graph& g, int k,
                                                                       OracleOptions opts = {}) {
  return detail::enumerate_k_minimal(g, k, opts, detail::ForestFamily{g},
                                     [](const auto&... a) { return find_fvs_improvement(a...); });
}

inline std::vector<Matching> enumerate_k_maximal_matchings(const Graph& g, int k, OracleOptions opts = {}) {
  detail::check_oracle_size(static_cast<long>(g.num_edges()), "edge", opts);
  CheckOptions check{opts.force};
  detail::check_k(k, check);
  std::vector<Matching> out;
  detail::enumerate_maximal_matchings(g, [&](const Matching& m) {
    if (!find_matching_improvement(g, m, k, check)) out.push_back(m);
    return !detail::reached(out.size(), opts.limit);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Stable cuts. Unordered cuts come in canonical form (vertex 0 on side X,
// trivial split all-false); ordered cuts list both orientations.
inline std::vector<Cut> enumerate_stable_cuts(const MultiGraph& mg, OracleOptions opts = {}) {
  detail::check_oracle_size(mg.num_vertices(), "vertex", opts);
  std::vector<Cut> out;
  detail::scan_stable_cuts(mg, true, [&](const std::vector<char>& side) {
    Cut c(std::vector<bool>(side.begin(), side.end()), false);
    if (opts.ordered_cuts) {
      out.push_back(c.as_ordered(true));
      if (!detail::reached(out.size(), opts.limit) && mg.num_vertices() > 0)
        out.push_back(c.swapped().as_ordered(true));
    } else {
      out.push_back(c.canonical());
    }
    return !detail::reached(out.size(), opts.limit);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Assignment> enumerate_unflippable(const CnfFormula& f, OracleOptions opts = {}) {
  detail::check_oracle_size(f.num_vars(), "variable", opts);
  std::vector<Assignment> out;
  detail::scan_unflippable(f, false, [&](const std::vector<char>& val) {
    out.emplace_back(std::vector<bool>(val.begin(), val.end()));
    return !detail::reached(out.size(), opts.limit);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Assignment> enumerate_nae_unflippable(const CnfFormula& f, OracleOptions opts = {}) {
  detail::check_oracle_size(detail::enumerated_variables(f, true), "variable", opts);
  std::vector<Assignment> out;
  detail::scan_unflippable(f, true, [&](const std::vector<char>& val) {
    out.emplace_back(std::vector<bool>(val.begin(), val.end()));
    return !detail::reached(out.size(), opts.limit);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// All local optima of (problem, instance, k).
inline SolutionList enumerate_local_optima(Problem p, const Instance& inst, int k, OracleOptions opts = {}) {
  SolutionList list{p, {}};
  switch (p) {
    case Problem::independent_set:
      list.solutions = detail::to_solutions(enumerate_k_maximal_independent_sets(as_graph(inst), k, opts));
      break;
    case Problem::clique:
      list.solutions = detail::to_solutions(enumerate_k_maximal_cliques(as_graph(inst), k, opts));
      break;
    case Problem::vertex_cover:
      list.solutions = detail::to_solutions(enumerate_k_minimal_vertex_covers(as_graph(inst), k, opts));
      break;
    case Problem::dominating_set:
      list.solutions = detail::to_solutions(enumerate_k_minimal_dominating_sets(as_graph(inst), k, opts));
      break;
    case Problem::feedback_vertex_set:
      list.solutions = detail::to_solutions(enumerate_k_minimal_feedback_vertex_sets(as_graph(inst), k, opts));
      break;
    case Problem::matching:
      list.solutions = detail::to_solutions(enumerate_k_maximal_matchings(as_graph(inst), k, opts));
      break;
    case Problem::cut:
      list.solutions = detail::to_solutions(enumerate_stable_cuts(as_multigraph(inst), opts));
      break;
    case Problem::sat:
      list.solutions = detail::to_solutions(enumerate_unflippable(as_formula(inst), opts));
      break;
    case Problem::nae_sat:
      list.solutions = detail::to_solutions(enumerate_nae_unflippable(as_formula(inst), opts));
      break;
  }
  return list;
}

// Whether there are at least `threshold` local optima; stops at the threshold.
inline bool count_at_least(Problem p, const Instance& inst, int k, std::size_t threshold, OracleOptions opts = {}) {
  if (threshold == 0) return true;
  opts.limit = threshold;
  return enumerate_local_optima(p, inst, k, opts).size() >= threshold;
}

// Some maximal independent set of g disjoint from x: a maximal independent
// set of g - x that also dominates x.
inline std::optional<VertexSet> solve_mise(const Graph& g, const VertexSet& x, OracleOptions opts = {}) {
  if (!is_independent_set(g, x)) throw InvalidArgument("X is not an independent set");
  detail::check_oracle_size(g.num_vertices(), "vertex", opts);
  std::vector<char> allowed(static_cast<std::size_t>(g.num_vertices()), 1);
  for (Vertex v : x) allowed[static_cast<std::size_t>(v)] = 0;
  std::optional<VertexSet> found;
  detail::enumerate_maximal_independent(g, allowed, [&](const VertexSet& d) {
    for (Vertex v : x) {
      const auto& nb = g.neighbors(v);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return d.contains(w); })) return true;
    }
    found = d;
    return false;
  });
  return found;
}

// Maximum matching size by memoized search over vertex subsets.
inline std::size_t maximum_matching_size_bruteforce(const Graph& g, OracleOptions opts = {}) {
  const int n = g.num_vertices();
  if (n > 20 && !opts.force)
    throw GuardrailExceeded("subset search over more than 20 vertices; pass force to override");
  std::vector<std::uint32_t> nb(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    nb[static_cast<std::size_t>(e.u)] |= std::uint32_t{1} << e.v;
    nb[static_cast<std::size_t>(e.v)] |= std::uint32_t{1} << e.u;
  }
  std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
  auto best = [&](auto&& self, std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    auto& slot = memo[mask];
    if (slot >= 0) return slot;
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
    int b = self(self, rest);
    for (std::uint32_t cand = nb[static_cast<std::size_t>(v)] & rest; cand != 0; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      b = std::max(b, 1 + self(self, rest & ~(std::uint32_t{1} << w)));
    }
    slot = static_cast<std::int8_t>(b);
    return b;
  };
  return static_cast<std::size_t>(best(best, n == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1)));
}

// All matchings of maximum cardinality. Each vertex, in ascending order, is
// either left unmatched (while the budget of n - 2*nu unmatched vertices
// allows) or matched to a later free neighbor.
inline std::vector<Matching> enumerate_maximum_matchings(const Graph& g, OracleOptions opts = {}) {
  const int n = g.num_vertices();
  const std::size_t nu = maximum_matching_size_bruteforce(g, opts);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<Edge> cur;
  std::vector<Matching> out;
  bool stop = false;
  auto rec = [&](auto&& self, Vertex v, int skips_left) -> void {
    if (stop) return;
    while (v < n && used[static_cast<std::size_t>(v)]) ++v;
    if (v == n) {
      if (cur.size() == nu) {
        out.emplace_back(cur);
        if (detail::reached(out.size(), opts.limit)) stop = true;
      }
      return;
    }
    used[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (w < v || used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      cur.emplace_back(v, w);
      self(self, v + 1, skips_left);
      cur.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
    if (skips_left > 0) self(self, v + 1, skips_left - 1);
    used[static_cast<std::size_t>(v)] = 0;
  };
  rec(rec, 0, n - 2 * static_cast<int>(nu));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace locopt
