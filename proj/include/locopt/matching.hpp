#pragma once

// Maximum matching in general graphs and the decision procedure for "at least
// two k-maximal matchings".
//
// A matching M is k-maximal iff there is no M-augmenting path with at most
// 2k-1 edges. If the maximum matching M* is not unique, any two maximum
// matchings answer the question. Otherwise a second k-maximal matching exists
// iff one of size |M*|-1 does, and such a matching can be taken as M* xor P
// for a path P of exactly 2k+1 edges alternating with respect to M* and
// starting and ending in M*. Longer unique augmenting paths need no separate
// case: their (2k+1)-edge end segments are found by the same enumeration.

#include <numeric>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "locopt/error.hpp"
#include "locopt/graph.hpp"
#include "locopt/local_optimality.hpp"

namespace locopt {

// Simple path v1..vl. Alternating with respect to a matching M when v1 is
// unmatched and the 2nd, 4th, ... edges are in M; augmenting when vl is also
// unmatched.
struct AlternatingPath {
  std::vector<Vertex> vertices;

  std::size_t num_edges() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[i + 1]);
    return out;
  }

  friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;
};

inline Matching symmetric_difference(const Matching& m, const AlternatingPath& p) {
  return m.symmetric_difference(Matching(p.edges()));
}

namespace detail {

// Edmonds' blossom algorithm, O(n^3).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(static_cast<std::size_t>(g.num_vertices())),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_),
        seen_(n_) {}

  std::vector<Vertex> run() {
    for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v) {
      if (match_[idx(v)] != -1) continue;
      for (Vertex w : g_.neighbors(v))
        if (match_[idx(w)] == -1) {
          match_[idx(v)] = w;
          match_[idx(w)] = v;
          break;
        }
    }
    for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v) {
      if (match_[idx(v)] != -1) continue;
      Vertex u = find_path(v);
      while (u != -1) {
        Vertex pv = parent_[idx(u)];
        Vertex next = match_[idx(pv)];
        match_[idx(u)] = pv;
        match_[idx(pv)] = u;
        u = next;
      }
    }
    return match_;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lca(Vertex a, Vertex b) {
    std::fill(seen_.begin(), seen_.end(), 0);
    while (true) {
      a = base_[idx(a)];
      seen_[idx(a)] = 1;
      if (match_[idx(a)] == -1) break;
      a = parent_[idx(match_[idx(a)])];
    }
    while (true) {
      b = base_[idx(b)];
      if (seen_[idx(b)]) return b;
      b = parent_[idx(match_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[idx(v)] != b) {
      blossom_[idx(base_[idx(v)])] = 1;
      blossom_[idx(base_[idx(match_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = match_[idx(v)];
      v = parent_[idx(match_[idx(v)])];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[idx(root)] = 1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
        if (to == root || (match_[idx(to)] != -1 && parent_[idx(match_[idx(to)])] != -1)) {
          Vertex cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (!blossom_[idx(base_[i])]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              q.push(static_cast<Vertex>(i));
            }
          }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (match_[idx(to)] == -1) return to;
          used_[idx(match_[idx(to)])] = 1;
          q.push(match_[idx(to)]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<char> used_, blossom_, seen_;
};

inline Matching matching_from_mates(const std::vector<Vertex>& mate) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] > static_cast<Vertex>(v)) edges.emplace_back(static_cast<Vertex>(v), mate[v]);
  return Matching(std::move(edges));
}

inline Graph without_edge(const Graph& g, const Edge& e) {
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& f : g.edges())
    if (f != e) edges.push_back(f);
  return Graph(g.num_vertices(), edges);
}

}  // namespace detail

inline Matching maximum_matching(const Graph& g) {
  return detail::matching_from_mates(detail::BlossomMatcher(g).run());
}

// A maximum matching different from mstar, if one exists. Any other maximum
// matching misses some edge of mstar, so it suffices to try deleting each
// edge of mstar in turn.
inline std::optional<Matching> second_maximum_matching(const Graph& g, const Matching& mstar) {
  if (!is_matching(g, mstar)) throw InvalidArgument("not a matching");
  for (const Edge& e : mstar) {
    Matching alt = maximum_matching(detail::without_edge(g, e));
    if (alt.size() == mstar.size()) return alt;
    if (alt.size() > mstar.size()) throw InvalidArgument("matching is not maximum");
  }
  if (maximum_matching(g).size() != mstar.size()) throw InvalidArgument("matching is not maximum");
  return std::nullopt;
}

// Depth-bounded search over alternating simple paths from each unmatched
// vertex in ascending order. Returns the first augmenting path with at most
// max_len edges.
inline std::optional<AlternatingPath> find_augmenting_path_upto(const Graph& g, const Matching& m,
                                                                std::size_t max_len) {
  if (!is_matching(g, m)) throw InvalidArgument("not a matching");
  require(max_len % 2 == 1, "augmenting path length bound must be odd");
  const auto mate = m.mates(g.num_vertices());
  std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<Vertex> path;

  // path ends at an unmatched-side vertex; try to extend by a free edge.
  auto extend = [&](auto&& self) -> bool {
    if (path.size() - 1 + 1 > max_len) return false;
    Vertex v = path.back();
    for (Vertex w : g.neighbors(v)) {
      if (on_path[static_cast<std::size_t>(w)] || mate[static_cast<std::size_t>(v)] == w) continue;
      Vertex partner = mate[static_cast<std::size_t>(w)];
      if (partner == -1) {
        path.push_back(w);
        return true;
      }
      if (on_path[static_cast<std::size_t>(partner)] || path.size() + 1 > max_len) continue;
      path.push_back(w);
      path.push_back(partner);
      on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(partner)] = 1;
      if (self(self)) return true;
      on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(partner)] = 0;
      path.pop_back();
      path.pop_back();
    }
    return false;
  };

  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (mate[static_cast<std::size_t>(s)] != -1) continue;
    path.assign(1, s);
    on_path[static_cast<std::size_t>(s)] = 1;
    bool found = extend(extend);
    on_path[static_cast<std::size_t>(s)] = 0;
    if (found) return AlternatingPath{path};
  }
  return std::nullopt;
}

inline bool is_k_maximal_matching_fast(const Graph& g, const Matching& m, int k, CheckOptions opts = {}) {
  detail::check_k(k, opts);
  return !find_augmenting_path_upto(g, m, static_cast<std::size_t>(2 * k - 1)).has_value();
}

// Two distinct k-maximal matchings, or nothing if g has at most one.
inline std::optional<std::pair<Matching, Matching>> two_k_maximal_matchings(const Graph& g, int k,
                                                                            CheckOptions opts = {}) {
  detail::check_k(k, opts);
  Matching mstar = maximum_matching(g);
  if (auto other = second_maximum_matching(g, mstar)) return std::make_pair(mstar, *other);

  // Paths of exactly 2k+1 edges: M*-edge, free edge, M*-edge, ..., M*-edge.
  const std::size_t target = static_cast<std::size_t>(2 * k + 1);
  if (mstar.size() < static_cast<std::size_t>(k + 1)) return std::nullopt;
  const auto mate = mstar.mates(g.num_vertices());
  std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<Vertex> path;
  std::optional<Matching> found;

  // path ends right after an M*-edge.
  auto extend = [&](auto&& self) -> bool {
    if (path.size() - 1 == target) {
      if (path.front() > path.back()) return false;  // each path once, in one orientation
      Matching candidate = symmetric_difference(mstar, AlternatingPath{path});
      if (is_k_maximal_matching_fast(g, candidate, k, opts)) {
        found = std::move(candidate);
        return true;
      }
      return false;
    }
    Vertex v = path.back();
    for (Vertex w : g.neighbors(v)) {
      if (on_path[static_cast<std::size_t>(w)] || mate[static_cast<std::size_t>(v)] == w) continue;
      Vertex partner = mate[static_cast<std::size_t>(w)];
      if (partner == -1 || on_path[static_cast<std::size_t>(partner)]) continue;
      path.push_back(w);
      path.push_back(partner);
      on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(partner)] = 1;
      if (self(self)) return true;
      on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(partner)] = 0;
      path.pop_back();
      path.pop_back();
    }
    return false;
  };

  for (const Edge& e : mstar) {
    for (auto [first, second] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      path = {first, second};
      on_path[static_cast<std::size_t>(first)] = on_path[static_cast<std::size_t>(second)] = 1;
      bool ok = extend(extend);
      on_path[static_cast<std::size_t>(first)] = on_path[static_cast<std::size_t>(second)] = 0;
      if (ok) return std::make_pair(mstar, *found);
    }
  }
  return std::nullopt;
}

}  // namespace locopt
