#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cht/complex.hpp"
#include "cht/util.hpp"

namespace cht {

/// Reference to an edge of a truncated set: a nonnegative value is the id of
/// a stored (nondegenerate) edge, a negative value encodes the degenerate
/// edge at a vertex.
using EdgeRef = int;

inline EdgeRef deg_edge(int v) { return -1 - v; }
inline bool is_deg(EdgeRef r) { return r < 0; }
inline int deg_vertex(EdgeRef r) { return -1 - r; }

using Triangle = std::array<EdgeRef, 3>;  // (a, b, c) meaning a then b ~ c

/// Two-truncated symmetric simplicial set: vertices, nondegenerate edges
/// with a reversal involution, and a generating set of triangles. Degenerate
/// edges exist formally via EdgeRef. Triangle (a, b, c) has a: x->y, b: y->z,
/// c: x->z; the stored set generates the two-simplices up to the symmetric
/// action, which is never materialised.
class TruncSymSet {
 public:
  struct Edge {
    int src = 0, dst = 0;
    int rev = 0;  // id of the reversed edge; may equal the edge's own id
  };

  TruncSymSet() = default;
  TruncSymSet(int n_vertices, std::vector<Edge> edges,
              std::vector<Triangle> triangles)
      : n_(n_vertices), edges_(std::move(edges)), tris_(std::move(triangles)) {
    validate();
  }

  int n_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return tris_; }

  int src(EdgeRef r) const { return is_deg(r) ? deg_vertex(r) : at(r).src; }
  int dst(EdgeRef r) const { return is_deg(r) ? deg_vertex(r) : at(r).dst; }
  EdgeRef rev(EdgeRef r) const { return is_deg(r) ? r : at(r).rev; }

  /// The six re-readings of a triangle under vertex permutations.
  std::array<Triangle, 6> orbit(const Triangle& t) const {
    EdgeRef a = t[0], b = t[1], c = t[2];
    return {Triangle{a, b, c},
            Triangle{rev(b), rev(a), rev(c)},
            Triangle{rev(a), c, b},
            Triangle{c, rev(b), a},
            Triangle{b, rev(c), rev(a)},
            Triangle{rev(c), a, rev(b)}};
  }

  std::set<Triangle> triangle_closure() const {
    std::set<Triangle> out;
    for (const Triangle& t : tris_)
      for (const Triangle& u : orbit(t)) out.insert(u);
    return out;
  }

  /// True iff the triple is a two-simplex: stored (up to the symmetric
  /// action) or degenerate.
  bool is_triangle(const Triangle& t) const {
    if (degenerate_triangle(t)) return true;
    for (const Triangle& s : tris_)
      for (const Triangle& u : orbit(s))
        if (u == t) return true;
    return false;
  }

  bool degenerate_triangle(const Triangle& t) const {
    EdgeRef a = t[0], b = t[1], c = t[2];
    if (is_deg(a) && b == c) return true;
    if (is_deg(b) && a == c) return true;
    if (is_deg(c) && b == rev(a)) return true;
    return false;
  }

  void validate() const {
    for (const Edge& e : edges_) {
      require(e.src >= 0 && e.src < n_ && e.dst >= 0 && e.dst < n_,
              "edge endpoint out of range");
      require(e.rev >= 0 && e.rev < (int)edges_.size(), "rev id out of range");
    }
    for (int i = 0; i < (int)edges_.size(); ++i) {
      const Edge& e = edges_[i];
      require(edges_[e.rev].rev == i, "rev is not an involution");
      require(edges_[e.rev].src == e.dst && edges_[e.rev].dst == e.src,
              "rev does not swap endpoints");
      if (e.rev == i)
        require(e.src == e.dst, "self-reversed edge must be a loop");
    }
    for (const Triangle& t : tris_) check_triangle_typing(t);
  }

  bool operator==(const TruncSymSet& o) const {
    return n_ == o.n_ && edges_equal(o) && tris_ == o.tris_;
  }

 private:
  const Edge& at(int id) const {
    require(id >= 0 && id < (int)edges_.size(), "edge id out of range");
    return edges_[id];
  }

  void check_triangle_typing(const Triangle& t) const {
    require(dst(t[0]) == src(t[1]) && src(t[0]) == src(t[2]) &&
                dst(t[1]) == dst(t[2]),
            "triangle edges do not close");
  }

  bool edges_equal(const TruncSymSet& o) const {
    if (edges_.size() != o.edges_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].src != o.edges_[i].src ||
          edges_[i].dst != o.edges_[i].dst ||
          edges_[i].rev != o.edges_[i].rev)
        return false;
    }
    return true;
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Triangle> tris_;
};

/// Two-truncated directed simplicial set: no reversal, triangles as in the
/// symmetric case. Degeneracies are the monotone ones only.
class TruncDirSet {
 public:
  struct Edge {
    int src = 0, dst = 0;
  };

  TruncDirSet() = default;
  TruncDirSet(int n_vertices, std::vector<Edge> edges,
              std::vector<Triangle> triangles)
      : n_(n_vertices), edges_(std::move(edges)), tris_(std::move(triangles)) {
    validate();
  }

  int n_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return tris_; }

  int src(EdgeRef r) const { return is_deg(r) ? deg_vertex(r) : at(r).src; }
  int dst(EdgeRef r) const { return is_deg(r) ? deg_vertex(r) : at(r).dst; }

  bool is_triangle(const Triangle& t) const {
    if (degenerate_triangle(t)) return true;
    for (const Triangle& s : tris_)
      if (s == t) return true;
    return false;
  }

  bool degenerate_triangle(const Triangle& t) const {
    EdgeRef a = t[0], b = t[1], c = t[2];
    if (is_deg(a) && b == c) return true;
    if (is_deg(b) && a == c) return true;
    return false;
  }

  void validate() const {
    for (const Edge& e : edges_)
      require(e.src >= 0 && e.src < n_ && e.dst >= 0 && e.dst < n_,
              "edge endpoint out of range");
    for (const Triangle& t : tris_)
      require(dst(t[0]) == src(t[1]) && src(t[0]) == src(t[2]) &&
                  dst(t[1]) == dst(t[2]),
              "triangle edges do not close");
  }

  bool operator==(const TruncDirSet& o) const {
    if (n_ != o.n_ || edges_.size() != o.edges_.size() || tris_ != o.tris_)
      return false;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].src != o.edges_[i].src || edges_[i].dst != o.edges_[i].dst)
        return false;
    return true;
  }

 private:
  const Edge& at(int id) const {
    require(id >= 0 && id < (int)edges_.size(), "edge id out of range");
    return edges_[id];
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Triangle> tris_;
};

/// Two-skeleton of a complex: both orientations of every linked pair, one
/// triangle per linked three-set (the symmetric action recovers the rest).
inline TruncSymSet two_skeleton(const Complex& X) {
  std::vector<TruncSymSet::Edge> edges;
  std::map<std::pair<int, int>, int> id;
  for (const Part& p : X.linked_parts_of_size(2)) {
    int a = (int)edges.size();
    edges.push_back({p[0], p[1], a + 1});
    edges.push_back({p[1], p[0], a});
    id[{p[0], p[1]}] = a;
    id[{p[1], p[0]}] = a + 1;
  }
  std::vector<Triangle> tris;
  for (const Part& p : X.linked_parts_of_size(3))
    tris.push_back({id.at({p[0], p[1]}), id.at({p[1], p[2]}),
                    id.at({p[0], p[2]})});
  return TruncSymSet(X.n_vertices(), std::move(edges), std::move(tris));
}

/// Two-skeleton of a directed complex: edges are the linked two-letter words
/// with distinct letters; one triangle per linked three-letter word without
/// adjacent repeats (the outer edge may be degenerate when the word returns
/// to its start).
inline TruncDirSet dir_two_skeleton(const DirectedComplex& X) {
  std::set<std::pair<int, int>> pairs;
  std::set<Word> words3;
  for (const Word& g : X.generators()) {
    std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (g[i] != g[j]) pairs.insert({g[i], g[j]});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (g[i] != g[j] && g[j] != g[k])
            words3.insert({g[i], g[j], g[k]});
  }
  std::vector<TruncDirSet::Edge> edges;
  std::map<std::pair<int, int>, int> id;
  for (const auto& p : pairs) {
    id[p] = (int)edges.size();
    edges.push_back({p.first, p.second});
  }
  std::vector<Triangle> tris;
  for (const Word& w : words3) {
    EdgeRef outer =
        w[0] == w[2] ? deg_edge(w[0]) : EdgeRef(id.at({w[0], w[2]}));
    tris.push_back({id.at({w[0], w[1]}), id.at({w[1], w[2]}), outer});
  }
  return TruncDirSet(X.n_vertices(), std::move(edges), std::move(tris));
}

/// Reflects a truncated symmetric set back onto a complex: linked parts are
/// the vertex sets of its simplices. Faithful on complexes of dimension <= 2.
inline Complex reflect_u(const TruncSymSet& X) {
  std::vector<Part> facets;
  for (int v = 0; v < X.n_vertices(); ++v) facets.push_back({v});
  for (const auto& e : X.edges()) facets.push_back({e.src, e.dst});
  for (const Triangle& t : X.triangles())
    facets.push_back({X.src(t[0]), X.dst(t[0]), X.dst(t[1])});
  return Complex(X.n_vertices(), std::move(facets));
}

/// Structure-preserving map of truncated sets: vertex images plus an edge
/// image (possibly degenerate) for every nondegenerate edge.
struct TruncMap {
  std::vector<int> v;       // vertex -> vertex
  std::vector<EdgeRef> e;   // nondegenerate edge -> EdgeRef in the target

  EdgeRef edge_image(EdgeRef r) const {
    if (is_deg(r)) return deg_edge(v.at(deg_vertex(r)));
    return e.at(r);
  }
};

inline bool is_map(const TruncSymSet& A, const TruncSymSet& X,
                   const TruncMap& f) {
  if ((int)f.v.size() != A.n_vertices() || f.e.size() != A.edges().size())
    return false;
  for (int u : f.v)
    if (u < 0 || u >= X.n_vertices()) return false;
  for (std::size_t i = 0; i < A.edges().size(); ++i) {
    EdgeRef im = f.e[i];
    if (!is_deg(im) && (im < 0 || im >= (int)X.edges().size())) return false;
    if (X.src(im) != f.v[A.edges()[i].src]) return false;
    if (X.dst(im) != f.v[A.edges()[i].dst]) return false;
    if (f.edge_image(A.edges()[i].rev) != X.rev(im)) return false;
  }
  for (const Triangle& t : A.triangles())
    if (!X.is_triangle(
            {f.edge_image(t[0]), f.edge_image(t[1]), f.edge_image(t[2])}))
      return false;
  return true;
}

inline bool is_map(const TruncDirSet& A, const TruncDirSet& X,
                   const TruncMap& f) {
  if ((int)f.v.size() != A.n_vertices() || f.e.size() != A.edges().size())
    return false;
  for (int u : f.v)
    if (u < 0 || u >= X.n_vertices()) return false;
  for (std::size_t i = 0; i < A.edges().size(); ++i) {
    EdgeRef im = f.e[i];
    if (!is_deg(im) && (im < 0 || im >= (int)X.edges().size())) return false;
    if (X.src(im) != f.v[A.edges()[i].src]) return false;
    if (X.dst(im) != f.v[A.edges()[i].dst]) return false;
  }
  for (const Triangle& t : A.triangles())
    if (!X.is_triangle(
            {f.edge_image(t[0]), f.edge_image(t[1]), f.edge_image(t[2])}))
      return false;
  return true;
}

namespace detail {

template <typename T>
bool iso_edges(const T& A, const T& B, const std::vector<int>& vmap,
               TruncMap& out) {
  std::size_t m = A.edges().size();
  if (m != B.edges().size()) return false;
  std::vector<int> emap(m, -1);
  std::vector<char> used(m, 0);
  // Backtracking over edge assignments inside endpoint buckets.
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == m) return true;
    const auto& ea = A.edges()[i];
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j]) continue;
      const auto& eb = B.edges()[j];
      if (eb.src != vmap[ea.src] || eb.dst != vmap[ea.dst]) continue;
      emap[i] = (int)j;
      used[j] = 1;
      if (go(i + 1)) return true;
      used[j] = 0;
      emap[i] = -1;
    }
    return false;
  };
  if (!go(0)) return false;
  out.v = vmap;
  out.e.assign(emap.begin(), emap.end());
  return true;
}

}  // namespace detail

/// Exact structural isomorphism of small truncated symmetric sets.
inline bool isomorphic(const TruncSymSet& A, const TruncSymSet& B) {
  if (A.n_vertices() != B.n_vertices() ||
      A.edges().size() != B.edges().size() ||
      A.triangles().size() != B.triangles().size())
    return false;
  int n = A.n_vertices();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    TruncMap f;
    std::vector<int> vmap = perm;
    if (!detail::iso_edges(A, B, vmap, f)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < A.edges().size() && ok; ++i)
      ok = f.edge_image(A.edges()[i].rev) == B.rev(f.e[i]);
    if (!ok) continue;
    std::set<Triangle> ca, cb = B.triangle_closure();
    for (const Triangle& t : A.triangle_closure())
      ca.insert({f.edge_image(t[0]), f.edge_image(t[1]), f.edge_image(t[2])});
    if (ca == cb) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Exact structural isomorphism of small truncated directed sets.
inline bool isomorphic(const TruncDirSet& A, const TruncDirSet& B) {
  if (A.n_vertices() != B.n_vertices() ||
      A.edges().size() != B.edges().size() ||
      A.triangles().size() != B.triangles().size())
    return false;
  int n = A.n_vertices();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    TruncMap f;
    std::vector<int> vmap = perm;
    if (!detail::iso_edges(A, B, vmap, f)) continue;
    std::set<Triangle> ca, cb(B.triangles().begin(), B.triangles().end());
    for (const Triangle& t : A.triangles())
      ca.insert({f.edge_image(t[0]), f.edge_image(t[1]), f.edge_image(t[2])});
    if (ca == cb) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace cht
