#include <gtest/gtest.h>

#include <algorithm>

#include "brute.hpp"
#include "locopt/generators.hpp"
#include "locopt/oracle.hpp"
#include "locopt/reductions.hpp"

using namespace locopt;

namespace {

const Graph Edge01 = path_graph(2);
const Graph P3 = path_graph(3);
const Graph P4 = path_graph(4);

OracleOptions forced() {
  OracleOptions o;
  o.force = true;
  return o;
}

}  // namespace

TEST(BuildH, Sizes) {
  auto [h1, m1] = build_h({Edge01, VertexSet{0}});
  EXPECT_EQ(h1.num_vertices(), 12);
  auto [h2, m2] = build_h({P4, VertexSet{0, 3}});
  EXPECT_EQ(h2.num_vertices(), 19);
  EXPECT_EQ(h2.degree(m2.b), static_cast<std::size_t>(1 + 2 + 2 * 2 + 2));
  EXPECT_EQ(m2.y, (std::vector<Vertex>{1, 2}));
}

TEST(BuildH, EdgeCensus) {
  auto [h, m] = build_h({P4, VertexSet{0, 3}});
  // |E(G)| + 1 + |X| + 4 + per y_i (6 z-edges + 4 cycle edges)
  EXPECT_EQ(h.num_edges(), 3u + 1 + 2 + 4 + 2 * 10);
  for (std::size_t i = 0; i < m.t(); ++i) {
    EXPECT_TRUE(h.adjacent(m.y[i], m.c_i[i]));
    EXPECT_TRUE(h.adjacent(m.c_i[i], m.y_prime[i]));
    EXPECT_TRUE(h.adjacent(m.y_prime[i], m.c_i_prime[i]));
    EXPECT_TRUE(h.adjacent(m.c_i_prime[i], m.y[i]));
    EXPECT_FALSE(h.adjacent(m.y[i], m.y_prime[i]));
    EXPECT_FALSE(h.adjacent(m.c_i[i], m.c_i_prime[i]));
    for (Vertex z : {m.z[i], m.z_prime[i]})
      EXPECT_EQ(h.neighbors(z), (std::vector<Vertex>{m.y[i], m.b, m.b_prime}));
  }
}

TEST(BuildH, RejectsInvalidInstances) {
  EXPECT_THROW(build_h({P3, VertexSet{0, 1}}), InvalidArgument);
  EXPECT_THROW(build_h({Graph(3, {Edge{0, 1}}), VertexSet{0}}), InvalidArgument);
}

TEST(CanonicalSa, SizesAndOptimality) {
  auto [h1, m1] = build_h({Edge01, VertexSet{0}});
  const VertexSet sa1 = canonical_sa(m1);
  EXPECT_EQ(sa1.size(), 8u);
  EXPECT_TRUE(sa1.contains(m1.a));
  EXPECT_FALSE(sa1.contains(m1.b));
  EXPECT_TRUE(is_independent_set(h1, sa1));
  EXPECT_FALSE(find_is_improvement(h1, sa1, 2));
  auto [h2, m2] = build_h({P4, VertexSet{0, 3}});
  EXPECT_EQ(canonical_sa(m2).size(), 13u);
  EXPECT_FALSE(find_is_improvement(h2, canonical_sa(m2), 2));
}

TEST(LiftToH, Examples) {
  auto [h1, m1] = build_h({Edge01, VertexSet{0}});
  const VertexSet l1 = lift_to_h(m1, VertexSet{1});
  EXPECT_EQ(l1, (VertexSet{m1.b, m1.b_prime, 1, m1.y_prime[0]}));
  EXPECT_TRUE(is_independent_set(h1, l1));
  EXPECT_FALSE(find_is_improvement(h1, l1, 2));
  EXPECT_EQ(project_from_h(h1, m1, l1), (VertexSet{1}));

  auto [h2, m2] = build_h({P3, VertexSet{0, 2}});
  const VertexSet l2 = lift_to_h(m2, VertexSet{1});
  EXPECT_EQ(l2, (VertexSet{m2.b, m2.b_prime, 1, m2.y_prime[0]}));
  EXPECT_FALSE(l2.contains(m2.a));
  EXPECT_FALSE(find_is_improvement(h2, l2, 2));
  EXPECT_EQ(project_from_h(h2, m2, l2), (VertexSet{1}));
  EXPECT_THROW(lift_to_h(m2, VertexSet{0}), InvalidArgument);
}

TEST(ProjectFromH, Errors) {
  auto [h, m] = build_h({Edge01, VertexSet{0}});
  EXPECT_THROW(project_from_h(h, m, canonical_sa(m)), InvalidArgument);
  EXPECT_THROW(project_from_h(h, m, VertexSet{m.b}), InvalidArgument);
}

// Every 2-maximal IS of H satisfies the structural observations, the repair
// loop keeps 2-maximality at every step, and projection lands on a maximal IS
// of G avoiding X.
TEST(HReduction, StructureAndRepairOnRandomInstances) {
  Rng rng(71);
  int repaired = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform_int(rng, 2, 5);
    const MiseInstance inst = random_mise(n, 0.5, 0.35, rng);
    auto [h, m] = build_h(inst);
    const auto sols = enumerate_k_maximal_independent_sets(h, 2, forced());
    ASSERT_EQ(sols.size() >= 2, solve_mise(inst.g, inst.x).has_value());
    const VertexSet sa = canonical_sa(m);
    ASSERT_TRUE(std::binary_search(sols.begin(), sols.end(), sa));
    const VertexSet yset(m.y), xset(m.x), zset = m.z_set();
    for (const auto& s : sols) {
      if (s.contains(m.a)) {
        ASSERT_EQ(s, sa);
        continue;
      }
      if (s.contains(m.b)) {
        ASSERT_TRUE(s.contains(m.b_prime));
        ASSERT_TRUE(s.intersected(xset).empty());
        ASSERT_TRUE(s.intersected(zset).empty());
      } else {
        ASSERT_TRUE(s.contains(m.c) && s.contains(m.c_prime));
        ASSERT_TRUE(s.intersected(yset).empty());
      }
      for (std::size_t i = 0; i < m.t(); ++i) {
        const bool ys = s.contains(m.y[i]) && s.contains(m.y_prime[i]);
        const bool cs = s.contains(m.c_i[i]) && s.contains(m.c_i_prime[i]);
        ASSERT_TRUE(ys || cs);
      }
      int steps = 0;
      const VertexSet d = project_from_h(h, m, s, [&](const VertexSet& cur) {
        ++steps;
        ASSERT_TRUE(is_independent_set(h, cur));
        ASSERT_FALSE(find_is_improvement(h, cur, 2));
      });
      ASSERT_LE(steps, static_cast<int>(m.t()) + 1);
      if (steps > 1) ++repaired;
      ASSERT_TRUE(d.intersected(inst.x).empty());
      ASSERT_TRUE(is_independent_set(inst.g, d));
      ASSERT_FALSE(find_is_improvement(inst.g, d, 1));
      ASSERT_EQ(project_from_h(h, m, lift_to_h(m, d)), d);
    }
  }
  (void)repaired;
}

TEST(HReduction, FixedCases) {
  auto [h1, m1] = build_h({P4, VertexSet{0, 3}});
  EXPECT_EQ(enumerate_k_maximal_independent_sets(h1, 2).size(), 1u);
  auto [h2, m2] = build_h({Edge01, VertexSet{0}});
  EXPECT_GE(enumerate_k_maximal_independent_sets(h2, 2).size(), 2u);
}

TEST(Blowup, Examples) {
  auto [k3, map] = blowup(complete_graph(3), 3);
  EXPECT_EQ(k3.num_vertices(), 6);
  EXPECT_EQ(k3.num_edges(), 12u);
  EXPECT_FALSE(k3.adjacent(0, 1));
  const Graph h = path_graph(4);
  EXPECT_EQ(blowup(h, 2).first, h);
  auto [kb, mb] = blowup(path_graph(2), 4);
  EXPECT_EQ(kb.num_vertices(), 6);
  EXPECT_EQ(kb.num_edges(), 9u);
  EXPECT_EQ(lift_blowup(map, VertexSet{0}), (VertexSet{0, 1}));
  EXPECT_EQ(project_blowup(map, VertexSet{1}), (VertexSet{0}));
  EXPECT_THROW(blowup(h, 1), InvalidArgument);
}

TEST(Blowup, CountsMatchOnSmallGraphs) {
  Rng rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph h = random_gnp(uniform_int(rng, 1, 6), 0.4, rng);
    const auto two = enumerate_k_maximal_independent_sets(h, 2);
    const auto maximal = enumerate_maximal_independent_sets(h);
    for (int k = 2; k <= 4; ++k) {
      auto [hk, map] = blowup(h, k);
      if (hk.num_vertices() > kOracleLimit) continue;
      ASSERT_EQ(enumerate_maximal_independent_sets(hk).size(), maximal.size());
      const auto sk = enumerate_k_maximal_independent_sets(hk, k);
      ASSERT_EQ(sk.size(), two.size());
      for (const auto& s : two) {
        const VertexSet lifted = lift_blowup(map, s);
        ASSERT_TRUE(std::binary_search(sk.begin(), sk.end(), lifted));
        ASSERT_EQ(project_blowup(map, lifted), s);
      }
    }
  }
}

TEST(DomFvsGraph, Examples) {
  auto [g1, m1] = build_dom_fvs_graph(Edge01, 2);
  EXPECT_EQ(g1.num_vertices(), 4);
  EXPECT_EQ(g1.num_edges(), 5u);
  auto [g2, m2] = build_dom_fvs_graph(P3, 2);
  EXPECT_EQ(g2.num_vertices(), 7);
  EXPECT_EQ(m2.gadget.size(), 2u);
  EXPECT_EQ(m2.gadget[1], (std::vector<Vertex>{5, 6}));
  EXPECT_EQ(g2.neighbors(5), (std::vector<Vertex>{1, 2}));
  EXPECT_THROW(build_dom_fvs_graph(Graph(3, {Edge{0, 1}}), 2), InvalidArgument);
  EXPECT_THROW(build_dom_fvs_graph(P3, 1), InvalidArgument);
}

TEST(DomFvsGraph, SolutionSetsCoincide) {
  Rng rng(79);
  int done = 0;
  while (done < 25) {
    const int n = uniform_int(rng, 2, 5);
    const Graph g = random_gnp(n, 0.5, rng);
    bool isolated = false;
    for (Vertex v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
    if (isolated) continue;
    ++done;
    for (int k = 2; k <= 3; ++k) {
      auto [h, m] = build_dom_fvs_graph(g, k);
      const auto vc = enumerate_k_minimal_vertex_covers(g, k);
      ASSERT_EQ(enumerate_k_minimal_dominating_sets(h, k, forced()), vc);
      ASSERT_EQ(enumerate_k_minimal_feedback_vertex_sets(h, k, forced()), vc);
      for (brute::Mask s = 0; s <= brute::full(n); ++s) {
        const VertexSet vs = VertexSet::from_bits(s);
        ASSERT_EQ(is_vertex_cover(g, vs), is_dominating_set(h, vs));
        ASSERT_EQ(is_vertex_cover(g, vs), is_feedback_vertex_set(h, vs));
      }
    }
  }
}

TEST(BuildNaesat, Sizes) {
  auto [f1, m1] = build_naesat({Edge01, VertexSet{0}}, 2);
  EXPECT_EQ(m1.n_padded, 4);
  EXPECT_EQ(f1.num_vars(), 7);
  EXPECT_EQ(f1.num_clauses(), 19u);
  auto [f2, m2] = build_naesat({P4, VertexSet{0, 3}}, 4);
  EXPECT_EQ(f2.num_vars(), 13);
  EXPECT_EQ(f2.num_clauses(), 77u);
  // default padding is n + 4m|X|
  auto [d1, dm1] = build_naesat({Edge01, VertexSet{0}});
  EXPECT_EQ(dm1.n_padded, 8);
  EXPECT_EQ(d1.num_vars(), 11);
  EXPECT_EQ(d1.num_clauses(), 23u);
  auto [d2, dm2] = build_naesat({P4, VertexSet{0, 3}});
  EXPECT_EQ(dm2.pads.size(), 28u);
  EXPECT_EQ(d2.num_vars(), 37);
  EXPECT_EQ(d2.num_clauses(), 101u);
  EXPECT_THROW(build_naesat({Edge01, VertexSet{0}}, -1), InvalidArgument);
  // first edge block
  const auto& c = f1.clauses();
  EXPECT_EQ(c[0], c[1]);
  EXPECT_EQ(c[2], c[3]);
  EXPECT_EQ(c[4], c[6]);
  EXPECT_EQ(c[4].size(), 2u);
  EXPECT_THROW(build_naesat({Graph(3), VertexSet{0}}), InvalidArgument);
  EXPECT_THROW(build_naesat({P3, VertexSet{0, 1}}), InvalidArgument);
}

TEST(NaesatReduction, CanonicalPairAndLift) {
  auto [f, m] = build_naesat({Edge01, VertexSet{0}});
  auto [a, b] = canonical_nae_pair(m);
  EXPECT_EQ(b, complement(a));
  EXPECT_FALSE(find_nae_flip(f, a));
  EXPECT_FALSE(find_nae_flip(f, b));
  const Assignment l = lift_to_nae(m, VertexSet{1});
  EXPECT_FALSE(find_nae_flip(f, l));
  EXPECT_FALSE(l[m.x_star]);
  EXPECT_FALSE(l[m.y_star]);
  for (Variable s : m.s_e) EXPECT_TRUE(l[s]);
  EXPECT_EQ(project_from_nae(m, l), (VertexSet{1}));
  EXPECT_EQ(project_from_nae(m, complement(l)), (VertexSet{1}));
  EXPECT_EQ(lift_to_nae(m, VertexSet{1, 2, 3}), l);
  EXPECT_THROW(project_from_nae(m, a), InvalidArgument);
  EXPECT_THROW(lift_to_nae(m, VertexSet{0}), InvalidArgument);
}

// With only n pads the lifted assignment can be flipped at y*.
TEST(NaesatReduction, ShortPaddingBreaksLift) {
  auto [f, m] = build_naesat({Edge01, VertexSet{0}}, 2);
  auto flip_at = find_nae_flip(f, lift_to_nae(m, VertexSet{1}));
  ASSERT_TRUE(flip_at);
  EXPECT_EQ(flip_at->target, m.y_star);
}

TEST(NaesatReduction, OracleCountsOnSmallInstances) {
  Rng rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = uniform_int(rng, 2, 4);
    const Graph g = random_gnp(n, 0.5, rng);
    if (g.num_edges() == 0) continue;
    const VertexSet x = random_subset(n, 0.4, rng);
    if (!is_independent_set(g, x)) continue;
    auto [f, m] = build_naesat({g, x});
    const auto sols = enumerate_nae_unflippable(f);
    std::size_t type1 = 0;
    for (const auto& a : sols) {
      if (a[m.x_star] != a[m.y_star]) {
        ++type1;
        continue;
      }
      const VertexSet d = project_from_nae(m, a);
      ASSERT_TRUE(d.intersected(x).empty());
      ASSERT_TRUE(is_independent_set(g, d));
      ASSERT_FALSE(find_is_improvement(g, d, 1));
    }
    ASSERT_EQ(type1, 2u);
    ASSERT_EQ(sols.size() >= 3, solve_mise(g, x).has_value());
  }
}

TEST(Positivize, Examples) {
  const CnfFormula f(2, {Clause{Literal::neg(0), Literal::pos(1)}});
  auto [p, map] = positivize(f);
  EXPECT_EQ(p.num_vars(), 4);
  EXPECT_EQ(p.num_clauses(), 5u);
  EXPECT_TRUE(p.is_positive());
  EXPECT_EQ(p.clauses()[0], (Clause{Literal::pos(2), Literal::pos(1)}));
  EXPECT_EQ(p.clauses()[1], (Clause{Literal::pos(0), Literal::pos(2)}));
  EXPECT_EQ(p.clauses()[3], (Clause{Literal::pos(1), Literal::pos(3)}));
  const CnfFormula g(2, {Clause{Literal::pos(0), Literal::pos(1)}});
  EXPECT_EQ(positivize(g).first.clauses()[0], g.clauses()[0]);
}

// Lifting is injective into the unflippable assignments of the positive
// formula, but the image can be strictly larger.
TEST(Positivize, LiftIsInjectiveNotSurjective) {
  const CnfFormula xor2(2, {Clause{Literal::pos(0), Literal::pos(1)}, Clause{Literal::neg(0), Literal::neg(1)}});
  auto [px, pmap] = positivize(xor2);
  EXPECT_EQ(enumerate_nae_unflippable(xor2).size(), 2u);
  EXPECT_EQ(enumerate_nae_unflippable(px).size(), 4u);

  Rng rng(89);
  int strict = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform_int(rng, 1, 6);
    const auto f = random_cnf(n, uniform_int(rng, 1, 8), 1, 3, 0.5, rng);
    auto [p, map] = positivize(f);
    const auto src = enumerate_nae_unflippable(f);
    const auto img = enumerate_nae_unflippable(p);
    ASSERT_GE(img.size(), src.size());
    strict += img.size() > src.size();
    for (const auto& a : img) {
      for (int x = 0; x < n; ++x) ASSERT_NE(a[x], a[map.primed(x)]);
      ASSERT_EQ(lift_positive(map, project_positive(map, a)), a);
    }
    for (const auto& a : src) {
      ASSERT_TRUE(std::binary_search(img.begin(), img.end(), lift_positive(map, a)));
      ASSERT_EQ(project_positive(map, lift_positive(map, a)), a);
    }
  }
  EXPECT_GT(strict, 0);
}

TEST(BuildMaxcut, Examples) {
  const Literal x = Literal::pos(0), y = Literal::pos(1), z = Literal::pos(2);
  EXPECT_EQ(build_maxcut(CnfFormula(2, {Clause{x, y}})).first.multiplicity(0, 1), 2);
  auto [tri, m] = build_maxcut(CnfFormula(3, {Clause{x, y, z}}));
  EXPECT_EQ(tri.records().size(), 3u);
  EXPECT_EQ(tri.total_multiplicity(), 3);
  auto [mix, m2] = build_maxcut(CnfFormula(3, {Clause{x, y}, Clause{x, y, z}}));
  EXPECT_EQ(mix.multiplicity(0, 1), 3);
  EXPECT_EQ(mix.multiplicity(0, 2), 1);
  EXPECT_EQ(mix.multiplicity(1, 2), 1);
  EXPECT_THROW(build_maxcut(CnfFormula(2, {Clause{x}})), InvalidArgument);
  EXPECT_THROW(build_maxcut(CnfFormula(2, {Clause{~x, y}})), InvalidArgument);
  EXPECT_THROW(build_maxcut(CnfFormula(4, {Clause{x, y, z, Literal::pos(3)}})), InvalidArgument);
}

TEST(BuildMaxcut, StableCutBijection) {
  const Literal x = Literal::pos(0), y = Literal::pos(1), z = Literal::pos(2);
  const CnfFormula f(3, {Clause{x, y}, Clause{y, z}});
  auto [mg, map] = build_maxcut(f);
  OracleOptions ordered;
  ordered.ordered_cuts = true;
  EXPECT_EQ(enumerate_nae_unflippable(f).size(), enumerate_stable_cuts(mg, ordered).size());
  const Cut all_true = cut_of_assignment(map, Assignment::constant(3, true));
  EXPECT_TRUE(all_true.side_x() == VertexSet::all(3));
  for (std::uint64_t b = 0; b < 8; ++b) {
    const auto a = Assignment::from_bits(3, b);
    const Cut c = cut_of_assignment(map, a);
    EXPECT_EQ(assignment_of_cut(map, c), a);
    EXPECT_EQ(!find_nae_flip(f, a), !find_cut_improvement(mg, c));
    for (Variable v = 0; v < 3; ++v)
      EXPECT_EQ(2 * (count_nae_satisfied(f, a) - count_nae_satisfied(f, flip(a, v))),
                cut_weight(mg, c) - cut_weight(mg, c.flipped(v)));
  }
}

TEST(Build2Sat, Examples) {
  auto [f1, m1] = build_2sat(MultiGraph(2, {{Edge{0, 1}, 1}}));
  EXPECT_EQ(f1.num_clauses(), 5u);
  auto [f2, m2] = build_2sat(MultiGraph(2, {{Edge{0, 1}, 2}}));
  EXPECT_EQ(f2.num_clauses(), 9u);
  EXPECT_EQ(m2.v_star, 0);
  EXPECT_THROW(build_2sat(MultiGraph(0)), InvalidArgument);

  // C4 has three stable cuts; the 2-CNF has a fourth unflippable assignment
  // whose cut is unstable only at v*.
  const auto c4 = MultiGraph::from_graph(cycle_graph(4));
  auto [f, map] = build_2sat(c4);
  const auto sols = enumerate_unflippable(f);
  EXPECT_EQ(sols.size(), 4u);
  const auto cuts = enumerate_stable_cuts(c4);
  EXPECT_EQ(cuts.size(), 3u);
  for (const auto& a : sols) EXPECT_TRUE(a[map.v_star]);
  for (const auto& c : cuts) {
    const Assignment a = assignment_of_2sat_cut(map, c);
    EXPECT_TRUE(std::binary_search(sols.begin(), sols.end(), a));
    EXPECT_EQ(cut_of_2sat_assignment(map, a), c);
  }
  const Cut odd = cut_of_2sat_assignment(map, Assignment::from_bits(4, 0b1011));
  EXPECT_EQ(std::find(cuts.begin(), cuts.end(), odd), cuts.end());
  EXPECT_EQ(cut_flip_gain(c4, Cut(Assignment::from_bits(4, 0b1011).values(), true), map.v_star), 2);
}

// Unflippable assignments are exactly the cuts stable at every u != v*.
TEST(Build2Sat, UnflippableMeansStableAwayFromVStar) {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 1, 8);
    const auto mg = random_multigraph(std::max(n, 2), uniform_int(rng, 0, 12), rng);
    auto [f, map] = build_2sat(mg);
    std::size_t expected = 0;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << mg.num_vertices()); ++b) {
      const Assignment a = Assignment::from_bits(mg.num_vertices(), b);
      if (!a[map.v_star]) continue;
      const Cut c(a.values(), true);
      bool ok = true;
      for (Vertex u = 1; u < mg.num_vertices(); ++u) ok = ok && cut_flip_gain(mg, c, u) <= 0;
      expected += ok;
    }
    const auto sols = enumerate_unflippable(f);
    ASSERT_EQ(sols.size(), expected);
    ASSERT_GE(sols.size(), enumerate_stable_cuts(mg).size());
  }
}

TEST(Build2Sat, DeltaIdentity) {
  Rng rng(97);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = uniform_int(rng, 2, 8);
    const auto mg = random_multigraph(n, uniform_int(rng, 0, 10), rng);
    auto [f, map] = build_2sat(mg);
    auto a = random_assignment(n, rng);
    a.set(map.v_star, true);
    const Cut c = Cut(a.values(), true);
    const Vertex u = uniform_int(rng, 1, n - 1);
    EXPECT_EQ(count_satisfied(f, a) - count_satisfied(f, flip(a, u)),
              cut_weight(mg, c) - cut_weight(mg, c.flipped(u)));
  }
}

TEST(Chain, NaesatToTwoSat) {
  for (const MiseInstance& inst : {MiseInstance{Edge01, VertexSet{0}}, MiseInstance{P3, VertexSet{0, 2}},
                                   MiseInstance{P3, VertexSet{1}}}) {
    auto [f, m] = build_naesat(inst, inst.g.num_vertices());
    auto [p, pm] = positivize(f);
    auto [mg, vm] = build_maxcut(p);
    auto [s, sm] = build_2sat(mg);
    const auto nae = enumerate_nae_unflippable(f);
    OracleOptions ordered;
    ordered.ordered_cuts = true;
    const auto pos = enumerate_nae_unflippable(p);
    ASSERT_GE(pos.size(), nae.size());
    ASSERT_EQ(enumerate_stable_cuts(mg, ordered).size(), pos.size());
    ASSERT_GE(enumerate_unflippable(s).size(), enumerate_stable_cuts(mg).size());
  }
}
