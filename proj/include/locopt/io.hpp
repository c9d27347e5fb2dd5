#pragma once

// Text formats. Every id in a file is 1-indexed.
//
//   graphs      DIMACS edge: "p edge n m", then m lines "e u v". A repeated
//               line adds one to the pair's multiplicity.
//   formulas    DIMACS cnf: "p cnf n m", zero-terminated clauses. A comment
//               "c rep t" makes the next clause count t times; m counts the
//               expanded clauses.
//   solutions   vertex sets: ids; matchings: id pairs; assignments: a model
//               line of signed literals ("v 1 -2 3 0"); cuts: the ids on side X.
//   gadget maps JSON (see to_json overloads below).

#include <algorithm>
#include <cstdlib>
#include <set>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "locopt/cnf.hpp"
#include "locopt/error.hpp"
#include "locopt/graph.hpp"
#include "locopt/problem.hpp"
#include "locopt/reductions.hpp"

namespace locopt::io {

using nlohmann::json;

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

inline long long to_int(const std::string& tok, std::size_t line) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

inline Vertex to_vertex(const std::string& tok, int n, std::size_t line) {
  const long long v = to_int(tok, line);
  if (v < 1 || v > n) throw ParseError(line, "vertex id " + tok + " outside 1.." + std::to_string(n));
  return static_cast<Vertex>(v - 1);
}

inline bool is_comment(const std::vector<std::string>& t) {
  return t.empty() || t[0] == "c" || t[0][0] == '#' || t[0] == "%";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graphs

namespace detail {

inline MultiGraph read_edges(std::istream& in, bool simple) {
  std::set<Edge> pairs;
  std::optional<int> n;
  long long declared = 0, seen = 0;
  std::size_t header_line = 0, line_no = 0;
  std::vector<MultiGraph::Record> records;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto t = detail::tokens(line);
    if (detail::is_comment(t)) continue;
    if (t[0] == "p") {
      if (n) throw ParseError(line_no, "second problem line");
      if (t.size() != 4 || t[1] != "edge") throw ParseError(line_no, "expected 'p edge <n> <m>'");
      const long long nv = detail::to_int(t[2], line_no);
      declared = detail::to_int(t[3], line_no);
      if (nv < 0 || declared < 0) throw ParseError(line_no, "negative size");
      n = static_cast<int>(nv);
      header_line = line_no;
    } else if (t[0] == "e") {
      if (!n) throw ParseError(line_no, "edge before problem line");
      if (t.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const Vertex u = detail::to_vertex(t[1], *n, line_no), v = detail::to_vertex(t[2], *n, line_no);
      if (u == v) throw ParseError(line_no, "self-loop");
      if (simple && !pairs.insert(Edge(u, v)).second)
        throw ParseError(line_no, "repeated edge; a simple graph is required");
      records.push_back({Edge(u, v), 1});
      ++seen;
    } else {
      throw ParseError(line_no, "unknown line type '" + t[0] + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing problem line");
  if (seen != declared)
    throw ParseError(header_line, "declared " + std::to_string(declared) + " edges, found " + std::to_string(seen));
  return MultiGraph(*n, std::move(records));
}

}  // namespace detail

inline MultiGraph read_multigraph(std::istream& in) { return detail::read_edges(in, false); }

// Simple-graph contexts: a repeated edge is an error.
inline Graph read_graph(std::istream& in) {
  const MultiGraph mg = detail::read_edges(in, true);
  std::vector<Edge> edges;
  for (const auto& r : mg.records()) edges.push_back(r.edge);
  return Graph(mg.num_vertices(), edges);
}

inline void write_multigraph(std::ostream& out, const MultiGraph& mg) {
  out << "p edge " << mg.num_vertices() << ' ' << mg.total_multiplicity() << '\n';
  for (const auto& r : mg.records())
    for (Count i = 0; i < r.multiplicity; ++i) out << "e " << r.edge.u + 1 << ' ' << r.edge.v + 1 << '\n';
}

inline void write_graph(std::ostream& out, const Graph& g) { write_multigraph(out, MultiGraph::from_graph(g)); }

// ---------------------------------------------------------------------------
// Formulas

inline CnfFormula read_cnf(std::istream& in) {
  std::optional<int> n;
  long long declared = 0;
  std::size_t header_line = 0, line_no = 0, clause_line = 0;
  long long rep_count = 0;  // 0: no 'c rep' pending
  std::size_t rep_line = 0;
  std::vector<std::pair<Clause, Count>> runs;
  std::vector<Literal> cur;
  long long total = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto t = detail::tokens(line);
    if (!t.empty() && t[0] == "c" && t.size() >= 2 && t[1] == "rep") {
      if (t.size() != 3) throw ParseError(line_no, "expected 'c rep <count>'");
      if (!cur.empty()) throw ParseError(line_no, "'c rep' inside an unfinished clause");
      if (rep_count) throw ParseError(line_no, "two 'c rep' lines in a row");
      const long long r = detail::to_int(t[2], line_no);
      if (r < 1) throw ParseError(line_no, "repeat count must be positive");
      rep_count = r;
      rep_line = line_no;
      continue;
    }
    if (detail::is_comment(t)) continue;
    if (t[0] == "p") {
      if (n) throw ParseError(line_no, "second problem line");
      if (t.size() != 4 || t[1] != "cnf") throw ParseError(line_no, "expected 'p cnf <n> <m>'");
      const long long nv = detail::to_int(t[2], line_no);
      declared = detail::to_int(t[3], line_no);
      if (nv < 0 || declared < 0) throw ParseError(line_no, "negative size");
      n = static_cast<int>(nv);
      header_line = line_no;
      continue;
    }
    if (!n) throw ParseError(line_no, "clause before problem line");
    for (const auto& tok : t) {
      const long long lit = detail::to_int(tok, line_no);
      if (lit == 0) {
        if (cur.empty()) throw ParseError(line_no, "empty clause");
        Clause c;
        try {
          c = Clause(cur);
        } catch (const InvalidArgument& e) {
          throw ParseError(clause_line, e.what());
        }
        const long long times = rep_count ? rep_count : 1;
        runs.push_back({std::move(c), times});
        total += times;
        cur.clear();
        rep_count = 0;
        continue;
      }
      if (std::llabs(lit) > *n) throw ParseError(line_no, "literal " + tok + " outside 1.." + std::to_string(*n));
      if (cur.empty()) clause_line = line_no;
      const auto v = static_cast<Variable>(std::llabs(lit) - 1);
      cur.push_back(lit > 0 ? Literal::pos(v) : Literal::neg(v));
    }
  }
  if (!n) throw ParseError(line_no, "missing problem line");
  if (!cur.empty()) throw ParseError(clause_line, "clause not terminated by 0");
  if (rep_count) throw ParseError(rep_line, "'c rep' not followed by a clause");
  if (total != declared)
    throw ParseError(header_line, "declared " + std::to_string(declared) + " clauses, found " + std::to_string(total));
  return CnfFormula::from_runs(*n, runs);
}

inline void write_clause(std::ostream& out, const Clause& c) {
  for (const Literal& l : c) out << (l.negated ? "-" : "") << l.var + 1 << ' ';
  out << "0\n";
}

// Runs of identical consecutive clauses are written once under "c rep".
inline void write_cnf(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  const auto& cl = f.clauses();
  for (std::size_t i = 0; i < cl.size();) {
    std::size_t j = i + 1;
    while (j < cl.size() && cl[j] == cl[i]) ++j;
    if (j - i > 1) out << "c rep " << j - i << '\n';
    write_clause(out, cl[i]);
    i = j;
  }
}

// ---------------------------------------------------------------------------
// Solutions

namespace detail {

// All non-comment tokens, each tagged with its line.
inline std::vector<std::pair<std::string, std::size_t>> body_tokens(std::istream& in) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto t = tokens(line);
    if (is_comment(t) || t[0] == "s") continue;
    for (const auto& tok : t)
      if (tok != "v") out.push_back({tok, line_no});
  }
  return out;
}

}  // namespace detail

inline VertexSet read_vertex_set(std::istream& in, int n) {
  std::vector<Vertex> vs;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& [tok, line] : detail::body_tokens(in)) {
    const Vertex v = detail::to_vertex(tok, n, line);
    if (seen[static_cast<std::size_t>(v)]) throw ParseError(line, "vertex " + tok + " listed twice");
    seen[static_cast<std::size_t>(v)] = 1;
    vs.push_back(v);
  }
  return VertexSet(std::move(vs));
}

inline Matching read_matching(std::istream& in, int n) {
  const auto toks = detail::body_tokens(in);
  if (toks.size() % 2 != 0) throw ParseError(toks.back().second, "odd number of ids in a matching");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < toks.size(); i += 2) {
    const Vertex u = detail::to_vertex(toks[i].first, n, toks[i].second);
    const Vertex v = detail::to_vertex(toks[i + 1].first, n, toks[i + 1].second);
    if (u == v) throw ParseError(toks[i].second, "self-loop in a matching");
    const Edge e(u, v);
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw ParseError(toks[i].second, "edge listed twice");
    edges.push_back(e);
  }
  return Matching(std::move(edges));
}

// Every variable must appear exactly once; a trailing 0 is optional.
inline Assignment read_assignment(std::istream& in, int n) {
  auto toks = detail::body_tokens(in);
  if (!toks.empty() && toks.back().first == "0") toks.pop_back();
  std::vector<int> val(static_cast<std::size_t>(n), -1);
  for (const auto& [tok, line] : toks) {
    const long long lit = detail::to_int(tok, line);
    if (lit == 0 || std::llabs(lit) > n) throw ParseError(line, "literal " + tok + " outside 1.." + std::to_string(n));
    auto& slot = val[static_cast<std::size_t>(std::llabs(lit) - 1)];
    if (slot != -1) throw ParseError(line, "variable " + std::to_string(std::llabs(lit)) + " assigned twice");
    slot = lit > 0;
  }
  std::vector<bool> out;
  for (int v = 0; v < n; ++v) {
    if (val[static_cast<std::size_t>(v)] == -1)
      throw ParseError(toks.empty() ? 0 : toks.back().second, "variable " + std::to_string(v + 1) + " unassigned");
    out.push_back(val[static_cast<std::size_t>(v)] == 1);
  }
  return Assignment(std::move(out));
}

inline Cut read_cut(std::istream& in, int n, bool ordered) {
  return Cut::from_side_x(n, read_vertex_set(in, n), ordered);
}

inline void write_vertex_set(std::ostream& out, const VertexSet& s) {
  bool first = true;
  for (Vertex v : s) {
    out << (first ? "" : " ") << v + 1;
    first = false;
  }
  out << '\n';
}

inline void write_matching(std::ostream& out, const Matching& m) {
  for (const Edge& e : m) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline void write_assignment(std::ostream& out, const Assignment& a) {
  out << 'v';
  for (int v = 0; v < a.size(); ++v) out << ' ' << (a[v] ? "" : "-") << v + 1;
  out << " 0\n";
}

inline void write_cut(std::ostream& out, const Cut& c) { write_vertex_set(out, c.side_x()); }

inline void write_solution(std::ostream& out, const Solution& s) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VertexSet>) write_vertex_set(out, x);
        else if constexpr (std::is_same_v<T, Matching>) write_matching(out, x);
        else if constexpr (std::is_same_v<T, Cut>) write_cut(out, x);
        else write_assignment(out, x);
      },
      s);
}

inline std::string to_text(const Solution& s) {
  std::ostringstream ss;
  write_solution(ss, s);
  return ss.str();
}

// Instance kind by problem: cut reads a multigraph, sat/naesat a formula,
// everything else a simple graph.
inline Instance read_instance(Problem p, std::istream& in) {
  if (p == Problem::cut) return read_multigraph(in);
  if (uses_formula(p)) return read_cnf(in);
  return read_graph(in);
}

inline void write_instance(std::ostream& out, const Instance& inst) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Graph>) write_graph(out, x);
        else if constexpr (std::is_same_v<T, MultiGraph>) write_multigraph(out, x);
        else write_cnf(out, x);
      },
      inst);
}

inline std::string to_text(const Instance& inst) {
  std::ostringstream ss;
  write_instance(ss, inst);
  return ss.str();
}

inline Solution read_solution(Problem p, const Instance& inst, std::istream& in, bool ordered_cut = false) {
  const int n = ground_size(inst);
  if (uses_vertex_set(p)) return read_vertex_set(in, n);
  if (p == Problem::matching) return read_matching(in, n);
  if (p == Problem::cut) return read_cut(in, n, ordered_cut);
  return read_assignment(in, n);
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline json ids(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(x + 1);
  return a;
}
inline std::vector<int> from_ids(const json& a) {
  std::vector<int> v;
  for (const auto& x : a) v.push_back(x.get<int>() - 1);
  return v;
}
inline json edge_ids(const std::vector<Edge>& es) {
  json a = json::array();
  for (const Edge& e : es) a.push_back({e.u + 1, e.v + 1});
  return a;
}
inline std::vector<Edge> from_edge_ids(const json& a) {
  std::vector<Edge> v;
  for (const auto& p : a) v.emplace_back(p.at(0).get<int>() - 1, p.at(1).get<int>() - 1);
  return v;
}

}  // namespace detail

inline json to_json(const Solution& s) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VertexSet>) return {{"vertices", detail::ids(std::vector<int>(x.begin(), x.end()))}};
        else if constexpr (std::is_same_v<T, Matching>) return {{"edges", detail::edge_ids(x.edges())}};
        else if constexpr (std::is_same_v<T, Cut>) {
          const VertexSet sx = x.side_x();
          return {{"side_x", detail::ids(std::vector<int>(sx.begin(), sx.end()))}, {"ordered", x.ordered()}};
        } else {
          json lits = json::array();
          for (int v = 0; v < x.size(); ++v) lits.push_back(x[v] ? v + 1 : -(v + 1));
          return {{"literals", lits}};
        }
      },
      s);
}

inline json to_json(const Move& m) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VertexSwap>)
          return {{"out", detail::ids(std::vector<int>(x.out_set.begin(), x.out_set.end()))},
                  {"in", detail::ids(std::vector<int>(x.in_set.begin(), x.in_set.end()))}};
        else if constexpr (std::is_same_v<T, EdgeSwap>)
          return {{"out", detail::edge_ids(x.out_set.edges())}, {"in", detail::edge_ids(x.in_set.edges())}};
        else
          return {{"flip", x.target + 1}};
      },
      m);
}

inline std::string describe(const Move& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FlipMove>) {
          return "flip " + std::to_string(x.target + 1);
        } else {
          std::ostringstream ss;
          ss << "remove {";
          if constexpr (std::is_same_v<T, VertexSwap>) {
            const char* sep = "";
            for (Vertex v : x.out_set) ss << std::exchange(sep, ",") << v + 1;
            ss << "} add {";
            sep = "";
            for (Vertex v : x.in_set) ss << std::exchange(sep, ",") << v + 1;
          } else {
            const char* sep = "";
            for (const Edge& e : x.out_set) ss << std::exchange(sep, ",") << e.u + 1 << '-' << e.v + 1;
            ss << "} add {";
            sep = "";
            for (const Edge& e : x.in_set) ss << std::exchange(sep, ",") << e.u + 1 << '-' << e.v + 1;
          }
          ss << '}';
          return ss.str();
        }
      },
      m);
}

}  // namespace locopt::io

namespace locopt {

// Gadget maps. Vertex and variable ids are 1-indexed; sizes are plain counts.

inline void to_json(nlohmann::json& j, const HGadgetMap& m) {
  using io::detail::ids;
  j = {{"n_original", m.n_original}, {"num_vertices", m.num_vertices}, {"a", m.a + 1},
       {"b", m.b + 1}, {"b_prime", m.b_prime + 1}, {"c", m.c + 1}, {"c_prime", m.c_prime + 1},
       {"x", ids(m.x)}, {"y", ids(m.y)}, {"z", ids(m.z)}, {"z_prime", ids(m.z_prime)},
       {"c_i", ids(m.c_i)}, {"c_i_prime", ids(m.c_i_prime)}, {"y_prime", ids(m.y_prime)}};
}
inline void from_json(const nlohmann::json& j, HGadgetMap& m) {
  using io::detail::from_ids;
  m.n_original = j.at("n_original").get<int>();
  m.num_vertices = j.at("num_vertices").get<int>();
  m.a = j.at("a").get<int>() - 1;
  m.b = j.at("b").get<int>() - 1;
  m.b_prime = j.at("b_prime").get<int>() - 1;
  m.c = j.at("c").get<int>() - 1;
  m.c_prime = j.at("c_prime").get<int>() - 1;
  m.x = from_ids(j.at("x"));
  m.y = from_ids(j.at("y"));
  m.z = from_ids(j.at("z"));
  m.z_prime = from_ids(j.at("z_prime"));
  m.c_i = from_ids(j.at("c_i"));
  m.c_i_prime = from_ids(j.at("c_i_prime"));
  m.y_prime = from_ids(j.at("y_prime"));
}

inline void to_json(nlohmann::json& j, const BlowupMap& m) { j = {{"k", m.k}, {"n_original", m.n_original}}; }
inline void from_json(const nlohmann::json& j, BlowupMap& m) {
  m.k = j.at("k").get<int>();
  m.n_original = j.at("n_original").get<int>();
}

inline void to_json(nlohmann::json& j, const SubdivisionMap& m) {
  nlohmann::json g = nlohmann::json::array();
  for (const auto& grp : m.gadget) g.push_back(io::detail::ids(grp));
  j = {{"n_original", m.n_original}, {"k", m.k}, {"edges", io::detail::edge_ids(m.edges)}, {"gadget", g}};
}
inline void from_json(const nlohmann::json& j, SubdivisionMap& m) {
  m.n_original = j.at("n_original").get<int>();
  m.k = j.at("k").get<int>();
  m.edges = io::detail::from_edge_ids(j.at("edges"));
  m.gadget.clear();
  for (const auto& grp : j.at("gadget")) m.gadget.push_back(io::detail::from_ids(grp));
}

inline void to_json(nlohmann::json& j, const NaesatGadgetMap& m) {
  using io::detail::ids;
  j = {{"n_original", m.n_original}, {"n_padded", m.n_padded}, {"num_vars", m.num_vars},
       {"m", m.m}, {"x", ids(m.x)}, {"pads", ids(m.pads)}, {"edges", io::detail::edge_ids(m.edges)},
       {"x_v", ids(m.x_v)}, {"s_e", ids(m.s_e)}, {"x_star", m.x_star + 1}, {"y_star", m.y_star + 1}};
}
inline void from_json(const nlohmann::json& j, NaesatGadgetMap& m) {
  using io::detail::from_ids;
  m.n_original = j.at("n_original").get<int>();
  m.n_padded = j.at("n_padded").get<int>();
  m.num_vars = j.at("num_vars").get<int>();
  m.m = j.at("m").get<Count>();
  m.x = from_ids(j.at("x"));
  m.pads = from_ids(j.at("pads"));
  m.edges = io::detail::from_edge_ids(j.at("edges"));
  m.x_v = from_ids(j.at("x_v"));
  m.s_e = from_ids(j.at("s_e"));
  m.x_star = j.at("x_star").get<int>() - 1;
  m.y_star = j.at("y_star").get<int>() - 1;
}

inline void to_json(nlohmann::json& j, const PolarityMap& m) { j = {{"original_vars", m.original_vars}}; }
inline void from_json(const nlohmann::json& j, PolarityMap& m) { m.original_vars = j.at("original_vars").get<int>(); }

inline void to_json(nlohmann::json& j, const VarVertexMap& m) { j = {{"num_vars", m.num_vars}}; }
inline void from_json(const nlohmann::json& j, VarVertexMap& m) { m.num_vars = j.at("num_vars").get<int>(); }

inline void to_json(nlohmann::json& j, const CutSatMap& m) {
  j = {{"v_star", m.v_star + 1}, {"num_vertices", m.num_vertices}};
}
inline void from_json(const nlohmann::json& j, CutSatMap& m) {
  m.v_star = j.at("v_star").get<int>() - 1;
  m.num_vertices = j.at("num_vertices").get<int>();
}

}  // namespace locopt
