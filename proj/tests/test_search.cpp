#include <gtest/gtest.h>

#include "locopt/generators.hpp"
#include "locopt/search.hpp"

using namespace locopt;

TEST(Climb, Examples) {
  auto r = climb(Problem::independent_set, path_graph(3), 2, Solution(VertexSet{1}));
  EXPECT_EQ(std::get<VertexSet>(r.final_solution), (VertexSet{0, 2}));
  EXPECT_EQ(r.steps, 1);

  auto c = climb(Problem::cut, cycle_graph(4), 1, Solution(Cut::all_one_side(4)));
  EXPECT_LE(c.steps, 4);
  EXPECT_EQ(cut_weight(MultiGraph::from_graph(cycle_graph(4)), std::get<Cut>(c.final_solution)), 4);

  const auto f = CnfFormula::from_runs(1, {{Clause{Literal::pos(0)}, 3}});
  auto s = climb(Problem::sat, f, 1, Solution(Assignment::constant(1, false)));
  EXPECT_EQ(std::get<Assignment>(s.final_solution), Assignment::constant(1, true));
  EXPECT_EQ(s.steps, 1);
}

TEST(Climb, RejectsInfeasibleStartAndWrongKinds) {
  EXPECT_THROW(climb(Problem::independent_set, complete_graph(3), 1, Solution(VertexSet{0, 1})), InvalidArgument);
  EXPECT_THROW(climb(Problem::vertex_cover, path_graph(3), 1, Solution(VertexSet{0})), InvalidArgument);
  EXPECT_THROW(climb(Problem::sat, path_graph(3), 1), InvalidArgument);
  EXPECT_THROW(climb(Problem::independent_set, path_graph(3), 1, Solution(Matching{})), InvalidArgument);
}

TEST(Climb, TraceAndDeterminism) {
  Rng rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_gnp(uniform_int(rng, 2, 12), 0.3, rng);
    ClimbOptions opts;
    opts.keep_trace = true;
    for (Problem p : {Problem::independent_set, Problem::dominating_set, Problem::matching, Problem::cut}) {
      auto a = climb(p, g, 2, std::nullopt, opts);
      auto b = climb(p, g, 2, std::nullopt, opts);
      ASSERT_TRUE(a.trace);
      EXPECT_EQ(static_cast<Count>(a.trace->size()), a.steps);
      EXPECT_EQ(a.final_solution, b.final_solution);
      EXPECT_EQ(*a.trace, *b.trace);
      Solution cur = canonical_start(p, g);
      Count obj = objective(p, g, cur);
      for (const auto& m : *a.trace) {
        cur = apply_move(cur, m);
        const Count next = objective(p, g, cur);
        EXPECT_GT(next, obj);
        obj = next;
      }
      EXPECT_EQ(cur, a.final_solution);
    }
  }
}

TEST(Climb, BoundsAndOptimalityAcrossProblems) {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 1, 12);
    const Graph g = random_gnp(n, 0.35, rng);
    const int k = uniform_int(rng, 1, 3);
    for (Problem p : {Problem::independent_set, Problem::clique, Problem::vertex_cover, Problem::dominating_set,
                      Problem::feedback_vertex_set, Problem::matching, Problem::cut}) {
      auto r = climb(p, g, k);
      EXPECT_LE(r.steps, step_bound(p, g));
      EXPECT_TRUE(is_feasible(p, g, r.final_solution));
      EXPECT_FALSE(find_improvement(p, g, r.final_solution, k));
    }
    const auto f = random_cnf(std::max(n, 1), uniform_int(rng, 0, 20), 1, 3, 0.5, rng);
    for (Problem p : {Problem::sat, Problem::nae_sat}) {
      auto r = climb(p, f, 1, Solution(random_assignment(f.num_vars(), rng)));
      EXPECT_LE(r.steps, step_bound(p, f));
      EXPECT_FALSE(find_improvement(p, f, r.final_solution, 1));
    }
  }
}

TEST(Problem, NamesRoundTrip) {
  for (Problem p : kAllProblems) EXPECT_EQ(parse_problem(to_string(p)), p);
  EXPECT_FALSE(parse_problem("bogus"));
}
