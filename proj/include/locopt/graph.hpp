#pragma once

// Graphs, multigraphs and the solution kinds defined over them (vertex sets,
// matchings, cuts), with the feasibility predicates every other module uses.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "locopt/error.hpp"

namespace locopt {

using Vertex = int;
using Count = std::int64_t;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free set of vertex ids. The owning graph is not stored;
// range checks take the vertex count explicitly.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  template <class Mask>
  static VertexSet from_mask(const Mask& mask) {
    VertexSet s;
    for (std::size_t v = 0; v < mask.size(); ++v)
      if (mask[v]) s.members_.push_back(static_cast<Vertex>(v));
    return s;
  }

  static VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    for (Vertex v = 0; bits != 0; ++v, bits >>= 1)
      if (bits & 1U) s.members_.push_back(v);
    return s;
  }

  static VertexSet all(int n) {
    VertexSet s;
    s.members_.resize(static_cast<std::size_t>(n));
    std::iota(s.members_.begin(), s.members_.end(), 0);
    return s;
  }

  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool in_range(int n) const {
    return members_.empty() || (members_.front() >= 0 && members_.back() < n);
  }
  void check_range(int n) const {
    if (!in_range(n)) throw InvalidArgument("vertex id out of range");
  }

  // Membership as a dense 0/1 vector of length n.
  std::vector<char> mask(int n) const {
    check_range(n);
    std::vector<char> m(static_cast<std::size_t>(n), 0);
    for (Vertex v : members_) m[static_cast<std::size_t>(v)] = 1;
    return m;
  }

  VertexSet complement(int n) const {
    check_range(n);
    VertexSet s;
    auto it = members_.begin();
    for (Vertex v = 0; v < n; ++v) {
      if (it != members_.end() && *it == v)
        ++it;
      else
        s.members_.push_back(v);
    }
    return s;
  }

  VertexSet united(const VertexSet& other) const {
    VertexSet s;
    std::set_union(begin(), end(), other.begin(), other.end(),
                   std::back_inserter(s.members_));
    return s;
  }
  VertexSet minus(const VertexSet& other) const {
    VertexSet s;
    std::set_difference(begin(), end(), other.begin(), other.end(),
                        std::back_inserter(s.members_));
    return s;
  }
  VertexSet intersected(const VertexSet& other) const {
    VertexSet s;
    std::set_intersection(begin(), end(), other.begin(), other.end(),
                          std::back_inserter(s.members_));
    return s;
  }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Simple undirected graph on vertices [0, n). Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    require(n >= 0, "negative vertex count");
  }
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    edges_.assign(edges.begin(), edges.end());
    for (const Edge& e : edges_) {
      if (e.u == e.v) throw InvalidArgument("self-loop");
      if (e.u < 0 || e.v >= n) throw InvalidArgument("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw InvalidArgument("duplicate edge");
    for (const Edge& e : edges_) {
      adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
  Graph(int n, const std::vector<Edge>& edges)
      : Graph(n, std::span<const Edge>(edges)) {}

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }
  bool has_edge(const Edge& e) const {
    return e.u >= 0 && e.v < n_ && e.u != e.v && adjacent(e.u, e.v);
  }
  // Position of e in edges(), or -1.
  int edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

// Undirected multigraph: one record per vertex pair with multiplicity >= 1.
class MultiGraph {
 public:
  struct Record {
    Edge edge;
    Count multiplicity = 1;
    friend auto operator<=>(const Record&, const Record&) = default;
  };
  struct Incidence {
    Vertex neighbor;
    Count multiplicity;
  };

  MultiGraph() = default;
  explicit MultiGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    require(n >= 0, "negative vertex count");
  }
  // Records for the same pair are merged by summing their multiplicities.
  MultiGraph(int n, std::vector<Record> records) : MultiGraph(n) {
    for (const Record& r : records) {
      if (r.edge.u == r.edge.v) throw InvalidArgument("self-loop");
      if (r.edge.u < 0 || r.edge.v >= n) throw InvalidArgument("edge endpoint out of range");
      if (r.multiplicity < 1) throw InvalidArgument("multiplicity must be positive");
    }
    std::sort(records.begin(), records.end());
    for (const Record& r : records) {
      if (!records_.empty() && records_.back().edge == r.edge)
        records_.back().multiplicity += r.multiplicity;
      else
        records_.push_back(r);
    }
    for (const Record& r : records_) {
      total_ += r.multiplicity;
      adj_[static_cast<std::size_t>(r.edge.u)].push_back({r.edge.v, r.multiplicity});
      adj_[static_cast<std::size_t>(r.edge.v)].push_back({r.edge.u, r.multiplicity});
    }
    for (auto& nb : adj_)
      std::sort(nb.begin(), nb.end(),
                [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }
  // Each listed edge contributes multiplicity one.
  MultiGraph(int n, const std::vector<Edge>& edges) : MultiGraph(n, unit_records(edges)) {}
  MultiGraph(int n, std::initializer_list<Edge> edges)
      : MultiGraph(n, std::vector<Edge>(edges)) {}

  static MultiGraph from_graph(const Graph& g) {
    return MultiGraph(g.num_vertices(), g.edges());
  }

  int num_vertices() const { return n_; }
  const std::vector<Record>& records() const { return records_; }
  const std::vector<Incidence>& incident(Vertex v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  // Number of edges counted with multiplicity.
  Count total_multiplicity() const { return total_; }
  Count multiplicity(Vertex a, Vertex b) const {
    Edge e(a, b);
    auto it = std::lower_bound(records_.begin(), records_.end(), Record{e, 0},
                               [](const Record& x, const Record& y) { return x.edge < y.edge; });
    return (it != records_.end() && it->edge == e) ? it->multiplicity : 0;
  }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.n_ == b.n_ && a.records_ == b.records_;
  }

 private:
  static std::vector<Record> unit_records(const std::vector<Edge>& edges) {
    std::vector<Record> r;
    r.reserve(edges.size());
    for (const Edge& e : edges) r.push_back({e, 1});
    return r;
  }

  int n_ = 0;
  std::vector<Record> records_;
  std::vector<std::vector<Incidence>> adj_;
  Count total_ = 0;
};

// Set of edges, kept sorted. Whether it is a matching of some graph is
// checked by is_matching.
class Matching {
 public:
  Matching() = default;
  Matching(std::initializer_list<Edge> edges) : Matching(std::vector<Edge>(edges)) {}
  explicit Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  bool contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  // mate[v] = partner of v, or -1.
  std::vector<Vertex> mates(int n) const {
    std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
    for (const Edge& e : edges_) {
      if (e.u < 0 || e.v >= n) throw InvalidArgument("edge endpoint out of range");
      mate[static_cast<std::size_t>(e.u)] = e.v;
      mate[static_cast<std::size_t>(e.v)] = e.u;
    }
    return mate;
  }

  Matching symmetric_difference(const Matching& other) const {
    std::vector<Edge> out;
    std::set_symmetric_difference(begin(), end(), other.begin(), other.end(),
                                  std::back_inserter(out));
    return Matching(std::move(out));
  }

  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

// Bipartition of [0, n): side(v) == true means v is on side X. An unordered
// cut identifies (X, Y) with (Y, X); canonical() picks the representative
// with vertex 0 on side X, except that the trivial split is all-false.
class Cut {
 public:
  Cut() = default;
  explicit Cut(std::vector<bool> side, bool ordered = false)
      : side_(std::move(side)), ordered_(ordered) {}
  static Cut all_one_side(int n, bool ordered = false) {
    return Cut(std::vector<bool>(static_cast<std::size_t>(n), false), ordered);
  }
  static Cut from_side_x(int n, const VertexSet& x, bool ordered = false) {
    x.check_range(n);
    std::vector<bool> side(static_cast<std::size_t>(n), false);
    for (Vertex v : x) side[static_cast<std::size_t>(v)] = true;
    return Cut(std::move(side), ordered);
  }

  int size() const { return static_cast<int>(side_.size()); }
  bool ordered() const { return ordered_; }
  bool side(Vertex v) const { return side_[static_cast<std::size_t>(v)]; }
  const std::vector<bool>& sides() const { return side_; }

  VertexSet side_x() const {
    std::vector<Vertex> xs;
    for (int v = 0; v < size(); ++v)
      if (side(v)) xs.push_back(v);
    return VertexSet(std::move(xs));
  }

  Cut flipped(Vertex v) const {
    Cut c = *this;
    c.side_[static_cast<std::size_t>(v)] = !c.side_[static_cast<std::size_t>(v)];
    return c;
  }
  Cut swapped() const {
    Cut c = *this;
    c.side_.flip();
    return c;
  }
  Cut as_ordered(bool ordered) const { return Cut(side_, ordered); }

  Cut canonical() const {
    if (ordered_ || side_.empty()) return *this;
    bool trivial = std::all_of(side_.begin(), side_.end(), [&](bool s) { return s == side_[0]; });
    if (trivial) return Cut(std::vector<bool>(side_.size(), false), false);
    return side_[0] ? *this : swapped();
  }

  // Same bipartition, ignoring orientation.
  bool same_partition(const Cut& other) const {
    return side_.size() == other.side_.size() &&
           (side_ == other.side_ || swapped().side_ == other.side_);
  }

  friend auto operator<=>(const Cut&, const Cut&) = default;

 private:
  std::vector<bool> side_;
  bool ordered_ = false;
};

// ---------------------------------------------------------------------------
// Feasibility predicates

inline bool is_independent_set(const Graph& g, const VertexSet& s) {
  s.check_range(g.num_vertices());
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (w > v && s.contains(w)) return false;
  return true;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  s.check_range(g.num_vertices());
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.adjacent(m[i], m[j])) return false;
  return true;
}

inline bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  s.check_range(g.num_vertices());
  for (const Edge& e : g.edges())
    if (!s.contains(e.u) && !s.contains(e.v)) return false;
  return true;
}

inline bool is_dominating_set(const Graph& g, const VertexSet& d) {
  auto in = d.mask(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in[static_cast<std::size_t>(v)]) continue;
    const auto& nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(),
                     [&](Vertex w) { return in[static_cast<std::size_t>(w)] != 0; }))
      return false;
  }
  return true;
}

// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  // False if already in the same set.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// True iff the subgraph induced by vertices with keep[v] != 0 is a forest.
template <class Mask>
bool induces_forest(const Graph& g, const Mask& keep) {
  UnionFind uf(g.num_vertices());
  for (const Edge& e : g.edges())
    if (keep[static_cast<std::size_t>(e.u)] && keep[static_cast<std::size_t>(e.v)] &&
        !uf.unite(e.u, e.v))
      return false;
  return true;
}

inline bool is_feedback_vertex_set(const Graph& g, const VertexSet& s) {
  auto in = s.mask(g.num_vertices());
  for (auto& b : in) b = !b;
  return induces_forest(g, in);
}

// Pairs must be edges of g and pairwise vertex-disjoint.
inline bool is_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Edge& e : m) {
    if (!g.has_edge(e)) return false;
    auto& a = used[static_cast<std::size_t>(e.u)];
    auto& b = used[static_cast<std::size_t>(e.v)];
    if (a || b) return false;
    a = b = 1;
  }
  return true;
}

inline Count cut_weight(const MultiGraph& mg, const Cut& c) {
  require(c.size() == mg.num_vertices(), "cut does not cover the vertex set");
  Count w = 0;
  for (const auto& r : mg.records())
    if (c.side(r.edge.u) != c.side(r.edge.v)) w += r.multiplicity;
  return w;
}

inline Graph complement_graph(const Graph& g) {
  std::vector<Edge> edges;
  const int n = g.num_vertices();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// New vertices get ids n, n+1, ..., n+count-1.
inline Graph add_isolated_vertices(const Graph& g, int count) {
  require(count >= 0, "negative vertex count");
  return Graph(g.num_vertices() + count, g.edges());
}

}  // namespace locopt
