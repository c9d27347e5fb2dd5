#pragma once

// Randomized property suites over the checkers, the oracle and the
// reductions. Trial t of a run uses seed + t, so a failure is replayable from
// (suite, seed + t) alone. A run stops at the first counterexample.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "locopt/generators.hpp"
#include "locopt/io.hpp"
#include "locopt/matching.hpp"
#include "locopt/oracle.hpp"
#include "locopt/reductions.hpp"

namespace locopt::verify {

using nlohmann::json;

// Checkers the suites can be pointed at. The self-test swaps in a broken one.
struct Checkers {
  std::function<bool(const Graph&, const Matching&, int)> k_maximal_matching =
      [](const Graph& g, const Matching& m, int k) { return is_k_maximal_matching_fast(g, m, k); };
};

// Misses augmenting paths of length exactly 2k - 1.
inline Checkers corrupted_checkers() {
  Checkers c;
  c.k_maximal_matching = [](const Graph& g, const Matching& m, int k) {
    return k == 1 || !find_augmenting_path_upto(g, m, 2 * k - 3);
  };
  return c;
}

struct Counterexample {
  std::string property;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string instance;  // DIMACS text
  std::string context;   // X, k or similar, when the instance alone is not enough
  std::string solution;  // solution file text, if one is involved
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials_requested = 0;
  int trials_run = 0;
  int max_n = 0;
  int min_size = 0, max_size = 0;  // instance sizes seen (vertices or variables)
  std::vector<std::string> properties;
  std::optional<Counterexample> counterexample;
  bool expect_failure = false;  // self-test: passing means a counterexample was found

  bool passed() const { return counterexample.has_value() == expect_failure; }
};

inline json to_json(const VerifyReport& r) {
  json props = json::array();
  for (const auto& p : r.properties)
    props.push_back({{"name", p},
                     {"passed", r.expect_failure ? r.counterexample.has_value()
                                                 : !r.counterexample || r.counterexample->property != p}});
  json j = {{"suite", r.suite},
            {"seed", r.seed},
            {"trials_requested", r.trials_requested},
            {"trials_run", r.trials_run},
            {"max_n", r.max_n},
            {"instance_sizes", {{"min", r.min_size}, {"max", r.max_size}}},
            {"properties", props},
            {"passed", r.passed()}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = {{"property", c.property}, {"trial", c.trial},     {"seed", c.seed},
                           {"instance", c.instance}, {"context", c.context}, {"solution", c.solution}};
  }
  return j;
}

// One trial: the instance size and, on failure, what broke.
struct TrialResult {
  int size = 0;
  std::optional<Counterexample> failure;
};

using TrialFn = std::function<TrialResult(Rng&, int max_n, const Checkers&)>;

struct Suite {
  std::string name;
  std::string summary;
  int size_cap;  // max_n is clamped to this
  std::vector<std::string> properties;
  TrialFn trial;
};

namespace detail {

inline Counterexample fail(std::string property, const Instance& inst, std::string context = {},
                           std::optional<Solution> sol = std::nullopt) {
  Counterexample c;
  c.property = std::move(property);
  c.instance = io::to_text(inst);
  c.context = std::move(context);
  if (sol) c.solution = io::to_text(*sol);
  return c;
}

inline std::string x_context(const VertexSet& x) { return "X: " + io::to_text(Solution(x)); }

inline OracleOptions forced() {
  OracleOptions o;
  o.force = true;
  return o;
}

inline Graph sized_graph(Rng& rng, int lo, int max_n) {
  const int n = uniform_int(rng, lo, std::max(lo, max_n));
  return random_gnp(n, 0.2 + 0.1 * uniform_int(rng, 0, 4), rng);
}

inline MiseInstance sized_mise(Rng& rng, int max_n) {
  const int n = uniform_int(rng, 2, std::max(2, max_n));
  return random_mise(n, 0.3 + 0.1 * uniform_int(rng, 0, 3), 0.3, rng);
}

inline bool maximal_avoiding(const Graph& g, const VertexSet& x, const VertexSet& d) {
  return d.intersected(x).empty() && is_independent_set(g, d) && !find_is_improvement(g, d, 1);
}

// Shared driver for the observations about 2-maximal sets of the gadget
// graph. check returns the failing property, or an empty string.
inline TrialResult h_trial(Rng& rng, int max_n,
                           const std::function<std::string(const MiseInstance&, const Graph&, const HGadgetMap&,
                                                           const std::vector<VertexSet>&, VertexSet&)>& check) {
  const MiseInstance inst = sized_mise(rng, max_n);
  auto [h, map] = build_h(inst);
  const auto sols = enumerate_k_maximal_independent_sets(h, 2, forced());
  VertexSet bad;
  const std::string prop = check(inst, h, map, sols, bad);
  TrialResult r{inst.g.num_vertices(), std::nullopt};
  if (!prop.empty()) r.failure = fail(prop, inst.g, x_context(inst.x), bad);
  return r;
}

}  // namespace detail

inline std::vector<Suite> suites() {
  using detail::fail;
  std::vector<Suite> out;

  out.push_back({"two-maximal", "a maximal but not 2-maximal independent set has a 1-for-2 swap at one vertex", 12,
                 {"one-for-two-swap"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   const Graph g = detail::sized_graph(rng, 1, max_n);
                   for (const auto& s : enumerate_maximal_independent_sets(g)) {
                     if (!find_is_improvement(g, s, 2)) continue;
                     bool found = false;
                     for (Vertex v : s) {
                       std::vector<Vertex> cand;
                       for (Vertex u : g.neighbors(v))
                         if (!s.contains(u)) cand.push_back(u);
                       for (std::size_t i = 0; i < cand.size() && !found; ++i)
                         for (std::size_t j = i + 1; j < cand.size() && !found; ++j)
                           found = is_independent_set(g, s.minus(VertexSet{v}).united(VertexSet{cand[i], cand[j]}));
                     }
                     if (!found) return TrialResult{g.num_vertices(), fail("one-for-two-swap", g, {}, s)};
                   }
                   return TrialResult{g.num_vertices(), std::nullopt};
                 }});

  out.push_back({"h-contains-b", "2-maximal sets of the gadget graph containing b contain b' and avoid X and Z", 6,
                 {"b-implies-b-prime", "b-excludes-x-and-z"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   return detail::h_trial(rng, max_n, [](const MiseInstance&, const Graph&, const HGadgetMap& m,
                                                         const std::vector<VertexSet>& sols, VertexSet& bad) {
                     for (const auto& s : sols) {
                       if (!s.contains(m.b)) continue;
                       bad = s;
                       if (!s.contains(m.b_prime)) return std::string("b-implies-b-prime");
                       if (!s.intersected(VertexSet(m.x)).empty() || !s.intersected(m.z_set()).empty())
                         return std::string("b-excludes-x-and-z");
                     }
                     return std::string();
                   });
                 }});

  out.push_back({"h-avoids-b", "2-maximal sets of the gadget graph without b contain a, c, c', X and Z and avoid Y", 6,
                 {"contains-a-c-c-prime", "avoids-y-contains-x-and-z"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   return detail::h_trial(rng, max_n, [](const MiseInstance&, const Graph&, const HGadgetMap& m,
                                                         const std::vector<VertexSet>& sols, VertexSet& bad) {
                     for (const auto& s : sols) {
                       if (s.contains(m.b)) continue;
                       bad = s;
                       if (!s.contains(m.a) || !s.contains(m.c) || !s.contains(m.c_prime))
                         return std::string("contains-a-c-c-prime");
                       const VertexSet xz = VertexSet(m.x).united(m.z_set());
                       if (!s.intersected(VertexSet(m.y)).empty() || s.intersected(xz) != xz)
                         return std::string("avoids-y-contains-x-and-z");
                     }
                     return std::string();
                   });
                 }});

  out.push_back({"h-four-cycles", "every 2-maximal set of the gadget graph holds {y_i, y'_i} or {c_i, c'_i}", 6,
                 {"pair-per-cycle"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   return detail::h_trial(rng, max_n, [](const MiseInstance&, const Graph&, const HGadgetMap& m,
                                                         const std::vector<VertexSet>& sols, VertexSet& bad) {
                     for (const auto& s : sols)
                       for (std::size_t i = 0; i < m.t(); ++i) {
                         const bool ys = s.contains(m.y[i]) && s.contains(m.y_prime[i]);
                         const bool cs = s.contains(m.c_i[i]) && s.contains(m.c_i_prime[i]);
                         if (!ys && !cs) {
                           bad = s;
                           return std::string("pair-per-cycle");
                         }
                       }
                     return std::string();
                   });
                 }});

  out.push_back({"h-unique-a", "S_a is 2-maximal and the only 2-maximal set containing a", 6,
                 {"s-a-is-solution", "s-a-unique"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   return detail::h_trial(rng, max_n, [](const MiseInstance&, const Graph&, const HGadgetMap& m,
                                                         const std::vector<VertexSet>& sols, VertexSet& bad) {
                     const VertexSet sa = canonical_sa(m);
                     bad = sa;
                     if (!std::binary_search(sols.begin(), sols.end(), sa)) return std::string("s-a-is-solution");
                     for (const auto& s : sols)
                       if (s.contains(m.a) && s != sa) {
                         bad = s;
                         return std::string("s-a-unique");
                       }
                     return std::string();
                   });
                 }});

  out.push_back({"h-forward", "a second 2-maximal set of the gadget graph projects to a maximal independent set avoiding X", 6,
                 {"projection-valid", "count-iff-solvable"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   return detail::h_trial(rng, max_n, [](const MiseInstance& inst, const Graph& h, const HGadgetMap& m,
                                                         const std::vector<VertexSet>& sols, VertexSet& bad) {
                     const VertexSet sa = canonical_sa(m);
                     for (const auto& s : sols) {
                       if (s == sa) continue;
                       bad = s;
                       if (!detail::maximal_avoiding(inst.g, inst.x, project_from_h(h, m, s)))
                         return std::string("projection-valid");
                     }
                     if ((sols.size() >= 2) != solve_mise(inst.g, inst.x).has_value()) return std::string("count-iff-solvable");
                     return std::string();
                   });
                 }});

  out.push_back({"h-converse", "every maximal independent set avoiding X lifts to a 2-maximal set of the gadget graph", 9,
                 {"lift-is-2-maximal"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   const MiseInstance inst = detail::sized_mise(rng, max_n);
                   auto [h, map] = build_h(inst);
                   for (const auto& d : enumerate_maximal_independent_sets(inst.g)) {
                     if (!d.intersected(inst.x).empty()) continue;
                     const VertexSet s = lift_to_h(map, d);
                     if (!is_independent_set(h, s) || find_is_improvement(h, s, 2))
                       return TrialResult{inst.g.num_vertices(), fail("lift-is-2-maximal", inst.g, detail::x_context(inst.x), d)};
                   }
                   return TrialResult{inst.g.num_vertices(), std::nullopt};
                 }});

  out.push_back({"blowup", "blowing each vertex up into k-1 twins maps 2-maximal sets onto k-maximal sets", 8,
                 {"maximal-bijection", "k-maximal-iff-2-maximal", "counts-equal"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   const Graph h = detail::sized_graph(rng, 1, max_n);
                   const int k = uniform_int(rng, 2, 3);
                   auto [hk, map] = blowup(h, k);
                   const std::string ctx = "k: " + std::to_string(k);
                   const auto maxes = enumerate_maximal_independent_sets(h, detail::forced());
                   std::vector<VertexSet> lifted;
                   for (const auto& s : maxes) lifted.push_back(lift_blowup(map, s));
                   std::sort(lifted.begin(), lifted.end());
                   if (lifted != enumerate_maximal_independent_sets(hk, detail::forced()))
                     return TrialResult{h.num_vertices(), fail("maximal-bijection", h, ctx)};
                   for (const auto& s : maxes)
                     if (!find_is_improvement(h, s, 2) != !find_is_improvement(hk, lift_blowup(map, s), k))
                       return TrialResult{h.num_vertices(), fail("k-maximal-iff-2-maximal", h, ctx, s)};
                   if (enumerate_k_maximal_independent_sets(h, 2).size() !=
                       enumerate_k_maximal_independent_sets(hk, k, detail::forced()).size())
                     return TrialResult{h.num_vertices(), fail("counts-equal", h, ctx)};
                   return TrialResult{h.num_vertices(), std::nullopt};
                 }});

  auto cover_suite = [](std::string name, std::string summary, bool fvs) {
    return Suite{std::move(name), std::move(summary), 6, {"same-feasible-sets", "same-k-minimal-sets"},
                 [fvs](Rng& rng, int max_n, const Checkers&) {
                   const Graph g = detail::sized_mise(rng, max_n).g;
                   const int k = uniform_int(rng, 2, 3);
                   auto [h, map] = build_dom_fvs_graph(g, k);
                   const std::string ctx = "k: " + std::to_string(k);
                   const int n = g.num_vertices();
                   for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
                     const VertexSet s = VertexSet::from_bits(b);
                     const bool target = fvs ? is_feedback_vertex_set(h, s) : is_dominating_set(h, s);
                     if (is_vertex_cover(g, s) != target) return TrialResult{n, fail("same-feasible-sets", g, ctx, s)};
                   }
                   const auto vc = enumerate_k_minimal_vertex_covers(g, k);
                   const auto other = fvs ? enumerate_k_minimal_feedback_vertex_sets(h, k, detail::forced())
                                          : enumerate_k_minimal_dominating_sets(h, k, detail::forced());
                   if (vc != other) return TrialResult{n, fail("same-k-minimal-sets", g, ctx)};
                   return TrialResult{n, std::nullopt};
                 }};
  };
  out.push_back(cover_suite("dominating-set", "vertex covers of G are exactly the dominating sets of the subdivided graph", false));
  out.push_back(cover_suite("feedback-vertex-set", "vertex covers of G are exactly the feedback vertex sets of the subdivided graph", true));

  out.push_back({"matching-char", "a matching is k-maximal iff no augmenting path has at most 2k-1 edges", 10,
                 {"checker-agrees-with-definition"},
                 [](Rng& rng, int max_n, const Checkers& chk) {
                   const Graph g = detail::sized_graph(rng, 2, max_n);
                   const Matching m = random_matching(g, coin(rng, 0.5) ? 1.0 : 0.6, rng);
                   const int k = uniform_int(rng, 1, 3);
                   if (chk.k_maximal_matching(g, m, k) == static_cast<bool>(find_matching_improvement(g, m, k)))
                     return TrialResult{g.num_vertices(), fail("checker-agrees-with-definition", g,
                                                               "k: " + std::to_string(k), m)};
                   return TrialResult{g.num_vertices(), std::nullopt};
                 }});

  out.push_back({"matching-almost-max", "with a unique maximum matching, a second k-maximal matching can be one edge short along a single path", 9,
                 {"one-short-witness"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   const Graph g = detail::sized_graph(rng, 2, max_n);
                   const int k = uniform_int(rng, 1, 3);
                   const int n = g.num_vertices();
                   const Matching mstar = maximum_matching(g);
                   if (second_maximum_matching(g, mstar)) return TrialResult{n, std::nullopt};
                   const auto all = enumerate_k_maximal_matchings(g, k);
                   if (all.size() < 2) return TrialResult{n, std::nullopt};
                   for (const auto& m : all) {
                     if (m.size() + 1 != mstar.size()) continue;
                     // the symmetric difference must be one path
                     const Matching diff = m.symmetric_difference(mstar);
                     UnionFind uf(n);
                     for (const Edge& e : diff) uf.unite(e.u, e.v);
                     std::map<int, int> comps;
                     for (const Edge& e : diff) comps[uf.find(e.u)]++;
                     if (comps.size() == 1) return TrialResult{n, std::nullopt};
                   }
                   return TrialResult{n, fail("one-short-witness", g, "k: " + std::to_string(k))};
                 }});

  out.push_back({"two-matchings", "the polynomial two-k-maximal-matchings test agrees with enumeration", 9,
                 {"verdict-matches-oracle", "witnesses-valid"},
                 [](Rng& rng, int max_n, const Checkers& chk) {
                   const Graph g = detail::sized_graph(rng, 1, max_n);
                   const int k = uniform_int(rng, 1, 3);
                   const std::string ctx = "k: " + std::to_string(k);
                   const auto res = two_k_maximal_matchings(g, k);
                   if (res.has_value() != (enumerate_k_maximal_matchings(g, k).size() >= 2))
                     return TrialResult{g.num_vertices(), fail("verdict-matches-oracle", g, ctx)};
                   if (res && (res->first == res->second || !chk.k_maximal_matching(g, res->first, k) ||
                               !chk.k_maximal_matching(g, res->second, k)))
                     return TrialResult{g.num_vertices(), fail("witnesses-valid", g, ctx, res->second)};
                   return TrialResult{g.num_vertices(), std::nullopt};
                 }});

  out.push_back({"naesat-type1", "the NAE formula has exactly two unflippable assignments with x* != y*", 4,
                 {"exactly-two"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   const MiseInstance inst = detail::sized_mise(rng, max_n);
                   auto [f, m] = build_naesat(inst);
                   std::size_t type1 = 0;
                   for (const auto& a : enumerate_nae_unflippable(f)) type1 += a[m.x_star] != a[m.y_star];
                   if (type1 != 2) return TrialResult{inst.g.num_vertices(), fail("exactly-two", inst.g, detail::x_context(inst.x))};
                   return TrialResult{inst.g.num_vertices(), std::nullopt};
                 }});

  out.push_back({"naesat-type2", "the remaining unflippable assignments project to maximal independent sets avoiding X", 4,
                 {"projection-valid", "count-iff-solvable"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   const MiseInstance inst = detail::sized_mise(rng, max_n);
                   auto [f, m] = build_naesat(inst);
                   const auto sols = enumerate_nae_unflippable(f);
                   const int n = inst.g.num_vertices();
                   for (const auto& a : sols) {
                     if (a[m.x_star] != a[m.y_star]) continue;
                     if (!detail::maximal_avoiding(inst.g, inst.x, project_from_nae(m, a)))
                       return TrialResult{n, fail("projection-valid", inst.g, detail::x_context(inst.x), a)};
                   }
                   if ((sols.size() >= 3) != solve_mise(inst.g, inst.x).has_value())
                     return TrialResult{n, fail("count-iff-solvable", inst.g, detail::x_context(inst.x))};
                   return TrialResult{n, std::nullopt};
                 }});

  out.push_back({"positivize", "replacing negative literals by primed copies keeps the NAE-unflippable assignments in bijection", 6,
                 {"primed-copies-differ", "bijection"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   const int n = uniform_int(rng, 1, std::max(1, max_n));
                   const auto f = random_cnf(n, uniform_int(rng, 1, 2 * n), 1, 3, 0.5, rng);
                   auto [p, map] = positivize(f);
                   const auto src = enumerate_nae_unflippable(f);
                   const auto img = enumerate_nae_unflippable(p);
                   for (const auto& a : img)
                     for (Variable x = 0; x < n; ++x)
                       if (a[x] == a[map.primed(x)]) return TrialResult{n, fail("primed-copies-differ", f, {}, a)};
                   std::vector<Assignment> lifted;
                   for (const auto& a : src) lifted.push_back(lift_positive(map, a));
                   std::sort(lifted.begin(), lifted.end());
                   if (lifted != img) {
                     std::optional<Solution> extra;
                     for (const auto& a : img)
                       if (!std::binary_search(lifted.begin(), lifted.end(), a)) extra = a;
                     return TrialResult{n, fail("bijection", f, {}, extra)};
                   }
                   return TrialResult{n, std::nullopt};
                 }});

  out.push_back({"stable-cut-bijection", "ordered stable cuts of the clause graph match NAE-unflippable assignments", 12,
                 {"counts-equal", "flip-deltas-match"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   const int n = uniform_int(rng, 2, std::max(2, max_n));
                   const auto f = random_cnf(n, uniform_int(rng, 1, 2 * n), 2, 3, 0.0, rng);
                   auto [mg, map] = build_maxcut(f);
                   OracleOptions ordered;
                   ordered.ordered_cuts = true;
                   if (enumerate_stable_cuts(mg, ordered).size() != enumerate_nae_unflippable(f).size())
                     return TrialResult{n, fail("counts-equal", f)};
                   const Assignment a = random_assignment(n, rng);
                   const Cut c = cut_of_assignment(map, a);
                   for (Variable v = 0; v < n; ++v)
                     if (2 * (count_nae_satisfied(f, a) - count_nae_satisfied(f, flip(a, v))) !=
                         cut_weight(mg, c) - cut_weight(mg, c.flipped(v)))
                       return TrialResult{n, fail("flip-deltas-match", f, {}, a)};
                   return TrialResult{n, std::nullopt};
                 }});

  out.push_back({"maxcut", "at least three NAE-unflippable assignments iff at least two unordered stable cuts", 12,
                 {"threshold-equivalence"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   const int n = uniform_int(rng, 2, std::max(2, max_n));
                   const auto f = random_cnf(n, uniform_int(rng, 1, 2 * n), 2, 3, 0.0, rng);
                   auto [mg, map] = build_maxcut(f);
                   if ((enumerate_nae_unflippable(f).size() >= 3) != (enumerate_stable_cuts(mg).size() >= 2))
                     return TrialResult{n, fail("threshold-equivalence", f)};
                   return TrialResult{n, std::nullopt};
                 }});

  out.push_back({"maxsat", "unflippable assignments of the 2-CNF match unordered stable cuts", 12,
                 {"v-star-true", "flip-deltas-match", "counts-equal"},
                 [](Rng& rng, int max_n, const Checkers&) {
                   const int n = uniform_int(rng, 2, std::max(2, max_n));
                   const auto mg = random_multigraph(n, uniform_int(rng, 1, 20), rng);
                   auto [f, map] = build_2sat(mg);
                   const auto sols = enumerate_unflippable(f);
                   for (const auto& a : sols)
                     if (!a[map.v_star]) return TrialResult{n, fail("v-star-true", mg, {}, a)};
                   Assignment a = random_assignment(n, rng);
                   a.set(map.v_star, true);
                   const Cut c(a.values(), true);
                   for (Vertex u = 0; u < n; ++u) {
                     if (u == map.v_star) continue;
                     if (count_satisfied(f, a) - count_satisfied(f, flip(a, u)) != cut_weight(mg, c) - cut_weight(mg, c.flipped(u)))
                       return TrialResult{n, fail("flip-deltas-match", mg, {}, a)};
                   }
                   if (sols.size() != enumerate_stable_cuts(mg).size()) {
                     std::optional<Solution> unstable;
                     for (const auto& s : sols)
                       if (find_cut_improvement(mg, Cut(s.values(), true))) unstable = s;
                     return TrialResult{n, fail("counts-equal", mg, {}, unstable)};
                   }
                   return TrialResult{n, std::nullopt};
                 }});

  return out;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : suites()) names.push_back(s.name);
  return names;
}

inline VerifyReport run_suite(const Suite& suite, int max_n, int trials, std::uint64_t seed,
                              const Checkers& checkers = {}) {
  require(trials >= 0, "trials must be non-negative");
  require(max_n >= 1, "max-n must be positive");
  VerifyReport r;
  r.suite = suite.name;
  r.seed = seed;
  r.trials_requested = trials;
  r.max_n = std::min(max_n, suite.size_cap);
  r.properties = suite.properties;
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed + static_cast<std::uint64_t>(t));
    TrialResult res = suite.trial(rng, r.max_n, checkers);
    r.min_size = r.trials_run == 0 ? res.size : std::min(r.min_size, res.size);
    r.max_size = std::max(r.max_size, res.size);
    ++r.trials_run;
    if (res.failure) {
      res.failure->trial = t;
      res.failure->seed = seed + static_cast<std::uint64_t>(t);
      r.counterexample = std::move(res.failure);
      break;
    }
  }
  return r;
}

inline const Suite& find_suite(const std::string& name) {
  static const std::vector<Suite> all = suites();
  for (const auto& s : all)
    if (s.name == name) return s;
  throw InvalidArgument("unknown verify suite '" + name + "'");
}

// Runs matching-char against a checker that ignores paths of length 2k-1.
// Passes iff that run fails with a counterexample.
inline VerifyReport self_test(int max_n, int trials, std::uint64_t seed) {
  VerifyReport r = run_suite(find_suite("matching-char"), max_n, trials, seed, corrupted_checkers());
  r.suite = "self-test";
  r.properties = {"corrupted-checker-caught"};
  r.expect_failure = true;
  return r;
}

}  // namespace locopt::verify
