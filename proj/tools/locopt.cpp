// locopt: command-line front end. Exit codes: 0 yes, 1 no, 2 error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "locopt/generators.hpp"
#include "locopt/io.hpp"
#include "locopt/matching.hpp"
#include "locopt/oracle.hpp"
#include "locopt/reductions.hpp"
#include "locopt/search.hpp"
#include "locopt/verify.hpp"

using namespace locopt;
using nlohmann::json;

namespace {

constexpr int kYes = 0, kNo = 1, kError = 2;

// Error tied to an input file.
struct FileError : Error {
  using Error::Error;
};

struct Common {
  int k = 1;
  std::optional<std::size_t> limit;
  std::uint64_t seed = 1;
  int trials = 100;
  int max_n = 8;
  bool json = false;
  bool force = false;
  bool ordered = false;
};

template <class F>
auto with_file(const std::string& path, F&& read) {
  std::ifstream in(path);
  if (!in) throw FileError(path + ": cannot open");
  try {
    return read(in);
  } catch (const ParseError& e) {
    throw FileError(path + ": " + e.what());
  }
}

std::string slurp(const std::string& path) {
  return with_file(path, [](std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  });
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FileError(path + ": cannot write");
  out << text;
}

Problem problem_arg(const std::string& name) {
  if (auto p = parse_problem(name)) return *p;
  throw InvalidArgument("unknown problem '" + name + "'");
}

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

// ---------------------------------------------------------------------------

int cmd_check(const Common& c, const std::string& prob, const std::string& inst_path, const std::string& sol_path) {
  const Problem p = problem_arg(prob);
  const Instance inst = with_file(inst_path, [&](std::istream& in) { return io::read_instance(p, in); });
  const Solution s = with_file(sol_path, [&](std::istream& in) { return io::read_solution(p, inst, in, c.ordered); });
  if (!is_feasible(p, inst, s)) throw InvalidArgument("solution is infeasible");
  const auto move = find_improvement(p, inst, s, c.k, CheckOptions{c.force});
  json j = {{"problem", to_string(p)}, {"k", c.k}, {"locally_optimal", !move}};
  j["witness"] = move ? io::to_json(*move) : json(nullptr);
  emit(c, j, move ? "improvable: " + io::describe(*move) + "\n" : "locally optimal\n");
  return move ? kNo : kYes;
}

int cmd_climb(const Common& c, const std::string& prob, const std::string& inst_path,
              const std::optional<std::string>& start_path, bool random) {
  const Problem p = problem_arg(prob);
  const Instance inst = with_file(inst_path, [&](std::istream& in) { return io::read_instance(p, in); });
  std::optional<Solution> start;
  if (start_path)
    start = with_file(*start_path, [&](std::istream& in) { return io::read_solution(p, inst, in, c.ordered); });
  else if (random) {
    Rng rng(c.seed);
    start = random_start(p, inst, rng);
  }
  ClimbOptions opts;
  opts.check.force = c.force;
  const ClimbReport r = climb(p, inst, c.k, start, opts);
  json j = {{"problem", to_string(p)}, {"k", c.k}, {"steps", r.steps}, {"step_bound", step_bound(p, inst)},
            {"solution", io::to_json(r.final_solution)}};
  emit(c, j, "c steps " + std::to_string(r.steps) + "\n" + io::to_text(r.final_solution));
  return kYes;
}

int cmd_enumerate(const Common& c, const std::string& prob, const std::string& inst_path) {
  const Problem p = problem_arg(prob);
  const Instance inst = with_file(inst_path, [&](std::istream& in) { return io::read_instance(p, in); });
  OracleOptions opts;
  opts.limit = c.limit;
  opts.force = c.force;
  opts.ordered_cuts = c.ordered;
  const SolutionList list = enumerate_local_optima(p, inst, c.k, opts);
  const bool truncated = c.limit && list.size() >= *c.limit;
  json sols = json::array();
  std::string text;
  for (std::size_t i = 0; i < list.size(); ++i) {
    sols.push_back(io::to_json(list.solutions[i]));
    text += "c solution " + std::to_string(i + 1) + "\n" + io::to_text(list.solutions[i]);
  }
  text += "c count " + std::string(truncated ? ">= " : "") + std::to_string(list.size()) + "\n";
  emit(c, {{"problem", to_string(p)}, {"k", c.k}, {"count", list.size()}, {"truncated", truncated}, {"solutions", sols}},
       text);
  return kYes;
}

int cmd_two_matchings(const Common& c, const std::string& graph_path) {
  const Graph g = with_file(graph_path, [](std::istream& in) { return io::read_graph(in); });
  const auto res = two_k_maximal_matchings(g, c.k, CheckOptions{c.force});
  json j = {{"k", c.k}, {"two", res.has_value()}};
  std::string text = "unique\n";
  if (res) {
    j["first"] = io::to_json(res->first);
    j["second"] = io::to_json(res->second);
    text = "c first\n" + io::to_text(res->first) + "c second\n" + io::to_text(res->second);
  }
  emit(c, j, text);
  return res ? kYes : kNo;
}

// ---------------------------------------------------------------------------
// reduce / map

struct ReductionFile {
  std::string name;
  Instance source;
  std::optional<VertexSet> x;
  Instance target;
  json params;
  json map;
};

// Builds the reduction from its source; params carries k or padding.
ReductionFile build(const std::string& name, const Instance& source, const std::optional<VertexSet>& x,
                    const json& params) {
  ReductionFile r{name, source, x, {}, params, {}};
  auto need_x = [&]() -> MiseInstance {
    if (!x) throw InvalidArgument("reduction '" + name + "' needs --x");
    return {std::get<Graph>(source), *x};
  };
  if (name == "h") {
    auto [h, m] = build_h(need_x());
    r.target = h;
    r.map = m;
  } else if (name == "blowup") {
    auto [hk, m] = blowup(std::get<Graph>(source), params.at("k").get<int>());
    r.target = hk;
    r.map = m;
  } else if (name == "dom" || name == "fvs") {
    auto [h, m] = build_dom_fvs_graph(std::get<Graph>(source), params.at("k").get<int>());
    r.target = h;
    r.map = m;
  } else if (name == "naesat") {
    std::optional<int> padding;
    if (params.contains("padding")) padding = params.at("padding").get<int>();
    auto [f, m] = build_naesat(need_x(), padding);
    r.target = f;
    r.map = m;
  } else if (name == "positivize") {
    auto [f, m] = positivize(std::get<CnfFormula>(source));
    r.target = f;
    r.map = m;
  } else if (name == "maxcut") {
    auto [mg, m] = build_maxcut(std::get<CnfFormula>(source));
    r.target = mg;
    r.map = m;
  } else if (name == "2sat") {
    auto [f, m] = build_2sat(std::get<MultiGraph>(source));
    r.target = f;
    r.map = m;
  } else {
    throw InvalidArgument("unknown reduction '" + name + "'");
  }
  return r;
}

Instance read_source(const std::string& name, std::istream& in) {
  if (name == "positivize" || name == "maxcut") return io::read_cnf(in);
  if (name == "2sat") return io::read_multigraph(in);
  return io::read_graph(in);
}

std::string extension(const Instance& inst) { return std::holds_alternative<CnfFormula>(inst) ? ".cnf" : ".col"; }

json to_json(const ReductionFile& r) {
  json j = {{"reduction", r.name}, {"params", r.params}, {"source", io::to_text(r.source)},
            {"target", io::to_text(r.target)}, {"map", r.map}};
  if (r.x) j["x"] = io::detail::ids(std::vector<int>(r.x->begin(), r.x->end()));
  return j;
}

// Parses a map file and checks it against a rebuild from its own source.
ReductionFile load_reduction(const std::string& path) {
  const std::string text = slurp(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FileError(path + ": " + e.what());
  }
  try {
    const std::string name = j.at("reduction").get<std::string>();
    std::istringstream src(j.at("source").get<std::string>());
    const Instance source = read_source(name, src);
    std::optional<VertexSet> x;
    if (j.contains("x")) {
      const auto ids = io::detail::from_ids(j.at("x"));
      x = VertexSet(std::vector<Vertex>(ids.begin(), ids.end()));
      x->check_range(ground_size(source));
    }
    ReductionFile r = build(name, source, x, j.at("params"));
    if (r.map != j.at("map") || io::to_text(r.target) != j.at("target").get<std::string>())
      throw InvalidArgument("map file does not match its own source instance");
    return r;
  } catch (const json::exception& e) {
    throw FileError(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw FileError(path + ": embedded instance: " + e.what());
  }
}

int cmd_reduce(const Common& c, const std::string& name, const std::string& input,
               const std::optional<std::string>& x_path, const std::string& prefix, std::optional<int> padding) {
  const Instance source = with_file(input, [&](std::istream& in) { return read_source(name, in); });
  std::optional<VertexSet> x;
  if (x_path) x = with_file(*x_path, [&](std::istream& in) { return io::read_vertex_set(in, ground_size(source)); });
  json params = json::object();
  if (name == "blowup" || name == "dom" || name == "fvs") params["k"] = c.k;
  if (name == "naesat" && padding) params["padding"] = *padding;
  const ReductionFile r = build(name, source, x, params);
  const std::string target_path = prefix + extension(r.target), map_path = prefix + ".map.json";
  write_file(target_path, io::to_text(r.target));
  write_file(map_path, to_json(r).dump(2) + "\n");
  emit(c, {{"reduction", name}, {"target", target_path}, {"map", map_path}, {"target_size", ground_size(r.target)}},
       "wrote " + target_path + " and " + map_path + "\n");
  return kYes;
}

struct MapResult {
  Solution image;
  bool verified;
  std::string note;
};

bool maximal_avoiding(const Graph& g, const VertexSet& x, const VertexSet& d) {
  return d.intersected(x).empty() && is_independent_set(g, d) && !find_is_improvement(g, d, 1);
}

bool is_k_max_is(const Graph& g, const VertexSet& s, int k) {
  return is_independent_set(g, s) && !find_is_improvement(g, s, k, CheckOptions{true});
}

MapResult apply_map(const ReductionFile& r, bool lift, const std::string& sol_path, bool ordered) {
  const Instance& from = lift ? r.source : r.target;
  auto read_set = [&] {
    return with_file(sol_path, [&](std::istream& in) { return io::read_vertex_set(in, ground_size(from)); });
  };
  auto read_assign = [&] {
    return with_file(sol_path, [&](std::istream& in) { return io::read_assignment(in, ground_size(from)); });
  };
  auto read_c = [&] {
    return with_file(sol_path, [&](std::istream& in) { return io::read_cut(in, ground_size(from), ordered); });
  };
  const std::string& n = r.name;
  if (n == "h") {
    const auto m = r.map.get<HGadgetMap>();
    const Graph& g = std::get<Graph>(r.source);
    const Graph& h = std::get<Graph>(r.target);
    if (lift) {
      const VertexSet d = read_set();
      if (!maximal_avoiding(g, *r.x, d)) throw InvalidArgument("input is not a maximal independent set avoiding X");
      const VertexSet s = lift_to_h(m, d);
      return {s, is_k_max_is(h, s, 2), "2-maximal independent set of H"};
    }
    const VertexSet d = project_from_h(h, m, read_set());
    return {d, maximal_avoiding(g, *r.x, d), "maximal independent set of G avoiding X"};
  }
  if (n == "blowup") {
    const auto m = r.map.get<BlowupMap>();
    const Graph& h = std::get<Graph>(r.source);
    const Graph& hk = std::get<Graph>(r.target);
    if (lift) {
      const VertexSet s = lift_blowup(m, read_set());
      return {s, is_k_max_is(hk, s, m.k), std::to_string(m.k) + "-maximal independent set"};
    }
    const VertexSet s = project_blowup(m, read_set());
    return {s, is_k_max_is(h, s, 2), "2-maximal independent set"};
  }
  if (n == "dom" || n == "fvs") {
    const auto m = r.map.get<SubdivisionMap>();
    const Graph& g = std::get<Graph>(r.source);
    const Graph& h = std::get<Graph>(r.target);
    const Problem tp = n == "dom" ? Problem::dominating_set : Problem::feedback_vertex_set;
    const VertexSet s = read_set();
    if (lift) {
      const bool ok = is_feasible(tp, h, s) && !find_improvement(tp, h, s, m.k, CheckOptions{true});
      return {s, ok, std::to_string(m.k) + "-minimal " + (n == "dom" ? "dominating set" : "feedback vertex set")};
    }
    if (!s.in_range(m.n_original)) return {s, false, "set uses gadget vertices"};
    const bool ok = is_vertex_cover(g, s) && !find_vc_improvement(g, s, m.k, CheckOptions{true});
    return {s, ok, std::to_string(m.k) + "-minimal vertex cover"};
  }
  if (n == "naesat") {
    const auto m = r.map.get<NaesatGadgetMap>();
    const Graph& g = std::get<Graph>(r.source);
    const CnfFormula& f = std::get<CnfFormula>(r.target);
    if (lift) {
      const VertexSet d = read_set();
      if (!maximal_avoiding(g, *r.x, d)) throw InvalidArgument("input is not a maximal independent set avoiding X");
      const Assignment a = lift_to_nae(m, d);
      return {a, !find_nae_flip(f, a), "NAE-unflippable assignment"};
    }
    const VertexSet d = project_from_nae(m, read_assign());
    return {d, maximal_avoiding(g, *r.x, d), "maximal independent set of G avoiding X"};
  }
  if (n == "positivize") {
    const auto m = r.map.get<PolarityMap>();
    const CnfFormula& f = std::get<CnfFormula>(r.source);
    const CnfFormula& p = std::get<CnfFormula>(r.target);
    if (lift) {
      const Assignment a = lift_positive(m, read_assign());
      return {a, !find_nae_flip(p, a), "NAE-unflippable assignment of the positive formula"};
    }
    const Assignment a = project_positive(m, read_assign());
    return {a, !find_nae_flip(f, a), "NAE-unflippable assignment"};
  }
  if (n == "maxcut") {
    const auto m = r.map.get<VarVertexMap>();
    const CnfFormula& f = std::get<CnfFormula>(r.source);
    const MultiGraph& mg = std::get<MultiGraph>(r.target);
    if (lift) {
      const Cut cut = cut_of_assignment(m, read_assign());
      return {cut, !find_cut_improvement(mg, cut), "stable cut"};
    }
    const Assignment a = assignment_of_cut(m, read_c());
    return {a, !find_nae_flip(f, a), "NAE-unflippable assignment"};
  }
  if (n == "2sat") {
    const auto m = r.map.get<CutSatMap>();
    const MultiGraph& mg = std::get<MultiGraph>(r.source);
    const CnfFormula& f = std::get<CnfFormula>(r.target);
    if (lift) {
      const Assignment a = assignment_of_2sat_cut(m, read_c());
      return {a, !find_sat_flip(f, a), "unflippable assignment"};
    }
    const Cut cut = cut_of_2sat_assignment(m, read_assign());
    return {cut, !find_cut_improvement(mg, cut), "stable cut"};
  }
  throw InvalidArgument("unknown reduction '" + n + "'");
}

int cmd_map(const Common& c, const std::string& direction, const std::string& map_path, const std::string& sol_path,
            const std::optional<std::string>& out_path) {
  if (direction != "lift" && direction != "project") throw InvalidArgument("direction must be lift or project");
  const ReductionFile r = load_reduction(map_path);
  const MapResult res = apply_map(r, direction == "lift", sol_path, c.ordered);
  if (out_path) write_file(*out_path, io::to_text(res.image));
  json j = {{"direction", direction}, {"reduction", r.name}, {"verified", res.verified},
            {"checked_as", res.note}, {"solution", io::to_json(res.image)}};
  std::string text = std::string("c ") + (res.verified ? "verified: " : "NOT a ") + res.note + "\n";
  if (!out_path) text += io::to_text(res.image);
  emit(c, j, text);
  return res.verified ? kYes : kNo;
}

// ---------------------------------------------------------------------------
// gen / verify

struct GenParams {
  int n = 8;
  double p = 0.3;
  double x_prob = 0.3;
  int vars = 6;
  int clauses = 10;
  int min_width = 2;
  int max_width = 3;
  double neg_prob = 0.5;
  int units = 10;
};

int cmd_gen(const Common& c, const std::string& model, const GenParams& gp, const std::optional<std::string>& prefix) {
  Rng rng(c.seed);
  std::vector<std::pair<std::string, std::string>> files;  // (suffix, text)
  if (model == "gnp") {
    files.push_back({".col", io::to_text(Instance(random_gnp(gp.n, gp.p, rng)))});
  } else if (model == "multigraph") {
    files.push_back({".col", io::to_text(Instance(random_multigraph(gp.n, gp.units, rng)))});
  } else if (model == "mise") {
    const MiseInstance inst = random_mise(gp.n, gp.p, gp.x_prob, rng);
    files.push_back({".col", io::to_text(Instance(inst.g))});
    files.push_back({".x", io::to_text(Solution(inst.x))});
  } else if (model == "cnf") {
    files.push_back({".cnf", io::to_text(Instance(random_cnf(gp.vars, gp.clauses, gp.min_width, gp.max_width,
                                                             gp.neg_prob, rng)))});
  } else {
    throw InvalidArgument("unknown model '" + model + "' (gnp, multigraph, mise, cnf)");
  }
  if (!prefix) {
    if (files.size() > 1) throw InvalidArgument("model '" + model + "' writes two files; pass --out");
    std::cout << files[0].second;
    return kYes;
  }
  json written = json::array();
  for (const auto& [suffix, text] : files) {
    write_file(*prefix + suffix, text);
    written.push_back(*prefix + suffix);
  }
  if (c.json) std::cout << json{{"model", model}, {"seed", c.seed}, {"files", written}}.dump(2) << '\n';
  return kYes;
}

std::string describe(const verify::VerifyReport& r) {
  std::ostringstream ss;
  ss << (r.passed() ? "PASS " : "FAIL ") << r.suite << "  trials " << r.trials_run << "/" << r.trials_requested
     << "  sizes " << r.min_size << ".." << r.max_size << "  seed " << r.seed << '\n';
  if (r.counterexample && !r.expect_failure) {
    const auto& ce = *r.counterexample;
    ss << "  property " << ce.property << " failed at trial " << ce.trial << " (seed " << ce.seed << ")\n";
    ss << "  instance:\n" << ce.instance;
    if (!ce.context.empty()) ss << "  " << ce.context;
    if (!ce.solution.empty()) ss << "  solution: " << ce.solution;
  }
  return ss.str();
}

int cmd_verify(const Common& c, const std::string& suite) {
  std::vector<verify::VerifyReport> reports;
  if (suite == "all") {
    for (const auto& s : verify::suites()) reports.push_back(verify::run_suite(s, c.max_n, c.trials, c.seed));
    reports.push_back(verify::self_test(c.max_n, c.trials, c.seed));
  } else if (suite == "self-test") {
    reports.push_back(verify::self_test(c.max_n, c.trials, c.seed));
  } else {
    reports.push_back(verify::run_suite(verify::find_suite(suite), c.max_n, c.trials, c.seed));
  }
  bool ok = true;
  json arr = json::array();
  std::string text;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    arr.push_back(verify::to_json(r));
    text += describe(r);
  }
  emit(c, {{"passed", ok}, {"reports", arr}}, text);
  return ok ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-optimality checkers, climbers, oracles and reductions"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", c.k, "swap size k")->check(CLI::PositiveNumber);
    sub->add_flag("--json", c.json, "machine-readable output");
    sub->add_flag("--force", c.force, "lift size and k guardrails");
    sub->add_flag("--ordered", c.ordered, "treat cuts as ordered pairs");
  };

  std::string problem, instance, solution, graph, name, input, prefix, direction, map_file, model, suite;
  std::optional<std::string> start, x_file, out;
  std::optional<int> padding;
  bool random_start_flag = false;
  GenParams gp;
  int exit_code = kYes;

  auto* check = app.add_subcommand("check", "is a solution locally optimal?");
  add_common(check);
  check->add_option("problem", problem, "is|clique|vc|ds|fvs|matching|cut|sat|naesat")->required();
  check->add_option("instance", instance)->required();
  check->add_option("solution", solution)->required();
  check->callback([&] { exit_code = cmd_check(c, problem, instance, solution); });

  auto* climb_cmd = app.add_subcommand("climb", "hill-climb to a local optimum");
  add_common(climb_cmd);
  climb_cmd->add_option("problem", problem)->required();
  climb_cmd->add_option("instance", instance)->required();
  climb_cmd->add_option("--start", start, "start solution file");
  auto* seed_opt = climb_cmd->add_option("--seed", c.seed, "random start from this seed");
  climb_cmd->callback([&] {
    random_start_flag = seed_opt->count() > 0;
    exit_code = cmd_climb(c, problem, instance, start, random_start_flag);
  });

  auto* enumerate = app.add_subcommand("enumerate", "list all local optima");
  add_common(enumerate);
  enumerate->add_option("problem", problem)->required();
  enumerate->add_option("instance", instance)->required();
  enumerate->add_option("--limit", c.limit, "stop after this many");
  enumerate->callback([&] { exit_code = cmd_enumerate(c, problem, instance); });

  auto* two = app.add_subcommand("two-matchings", "find two k-maximal matchings");
  add_common(two);
  two->add_option("graph", graph)->required();
  two->callback([&] { exit_code = cmd_two_matchings(c, graph); });

  auto* reduce = app.add_subcommand("reduce", "build a reduction target and its gadget map");
  add_common(reduce);
  reduce->add_option("name", name, "h|blowup|dom|fvs|naesat|positivize|maxcut|2sat")->required();
  reduce->add_option("input", input)->required();
  reduce->add_option("--x", x_file, "vertex set X for h and naesat");
  reduce->add_option("--out", prefix, "output prefix")->required();
  reduce->add_option("--padding", padding, "isolated vertices added by naesat (default n + 4m|X|)");
  reduce->callback([&] { exit_code = cmd_reduce(c, name, input, x_file, prefix, padding); });

  auto* map = app.add_subcommand("map", "lift or project a solution through a gadget map");
  add_common(map);
  map->add_option("direction", direction, "lift|project")->required();
  map->add_option("map", map_file)->required();
  map->add_option("solution", solution)->required();
  map->add_option("--out", out, "write the image here");
  map->callback([&] { exit_code = cmd_map(c, direction, map_file, solution, out); });

  auto* gen = app.add_subcommand("gen", "seeded random instance");
  add_common(gen);
  gen->add_option("model", model, "gnp|multigraph|mise|cnf")->required();
  gen->add_option("--seed", c.seed);
  gen->add_option("--n", gp.n, "vertices");
  gen->add_option("--p", gp.p, "edge probability");
  gen->add_option("--x-prob", gp.x_prob, "mise: probability a vertex joins X");
  gen->add_option("--units", gp.units, "multigraph: edge units");
  gen->add_option("--vars", gp.vars);
  gen->add_option("--clauses", gp.clauses);
  gen->add_option("--min-width", gp.min_width);
  gen->add_option("--max-width", gp.max_width);
  gen->add_option("--neg-prob", gp.neg_prob);
  gen->add_option("--out", out, "output prefix");
  gen->callback([&] { exit_code = cmd_gen(c, model, gp, out); });

  auto* ver = app.add_subcommand("verify", "run property suites");
  add_common(ver);
  ver->add_option("suite", suite, "suite name, all, or self-test")->required();
  ver->add_option("--seed", c.seed);
  ver->add_option("--trials", c.trials);
  ver->add_option("--max-n", c.max_n);
  ver->callback([&] { exit_code = cmd_verify(c, suite); });

  auto* list = app.add_subcommand("suites", "list verify suites");
  list->callback([&] {
    for (const auto& s : verify::suites()) std::cout << s.name << "  " << s.summary << '\n';
    std::cout << "self-test  a deliberately broken matching checker must be caught\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kYes : kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return exit_code;
}
