#pragma once

#include <set>
#include <type_traits>
#include <vector>

#include "cht/trunc.hpp"
#include "cht/util.hpp"

namespace cht {

template <typename T>
struct QuotientResult {
  T set;
  TruncMap proj;  // the canonical projection
};

namespace detail {

template <typename T>
inline constexpr bool kHasRev = std::is_same_v<T, TruncSymSet>;

/// Quotients a truncated set by identifications of vertices and edge refs.
/// Edge identifications must already be endpoint-compatible with the vertex
/// identifications (the colimit constructions below guarantee this).
template <typename T>
QuotientResult<T> quotient(const T& X,
                           const std::vector<std::pair<int, int>>& vertex_ids,
                           const std::vector<std::pair<EdgeRef, EdgeRef>>&
                               edge_ids) {
  UnionFind vuf(X.n_vertices());
  for (auto [a, b] : vertex_ids) vuf.unite(a, b);
  std::vector<int> vlab = vuf.labels();
  int nv = 0;
  for (int l : vlab) nv = std::max(nv, l + 1);

  std::size_t m = X.edges().size();
  // Tokens: one per nondegenerate edge, then one per result vertex class.
  UnionFind euf(m + nv);
  auto token = [&](EdgeRef r) -> std::size_t {
    return is_deg(r) ? m + vlab[deg_vertex(r)] : (std::size_t)r;
  };
  for (auto [a, b] : edge_ids) {
    euf.unite(token(a), token(b));
    if constexpr (kHasRev<T>) euf.unite(token(X.rev(a)), token(X.rev(b)));
  }
  // Classes containing a degenerate token collapse to degeneracy.
  std::vector<char> deg_root(m + nv, 0);
  for (int c = 0; c < nv; ++c) deg_root[euf.find(m + c)] = 1;

  std::vector<int> eclass(m, -1);
  std::vector<typename T::Edge> new_edges;
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t r = euf.find(i);
    if (deg_root[r]) continue;
    bool seen = false;
    for (std::size_t q : roots) seen |= q == r;
    if (!seen) roots.push_back(r);
  }
  auto root_index = [&](std::size_t r) {
    for (std::size_t k = 0; k < roots.size(); ++k)
      if (roots[k] == r) return (int)k;
    return -1;
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t r = euf.find(i);
    eclass[i] = deg_root[r] ? -1 : root_index(r);
  }
  auto image = [&](EdgeRef ref) -> EdgeRef {
    if (is_deg(ref)) return deg_edge(vlab[deg_vertex(ref)]);
    int c = eclass[ref];
    return c < 0 ? deg_edge(vlab[X.src(ref)]) : EdgeRef(c);
  };

  new_edges.resize(roots.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (eclass[i] < 0) continue;
    auto& e = new_edges[eclass[i]];
    e.src = vlab[X.src((EdgeRef)i)];
    e.dst = vlab[X.dst((EdgeRef)i)];
    if constexpr (kHasRev<T>) {
      EdgeRef rv = image(X.rev((EdgeRef)i));
      require(!is_deg(rv), "reversal collapsed without its edge");
      e.rev = rv;
    }
  }

  std::set<Triangle> tris;
  T probe(nv, new_edges, {});
  for (const Triangle& t : X.triangles()) {
    Triangle u{image(t[0]), image(t[1]), image(t[2])};
    if (!probe.degenerate_triangle(u)) tris.insert(u);
  }

  QuotientResult<T> out{
      T(nv, new_edges, std::vector<Triangle>(tris.begin(), tris.end())), {}};
  out.proj.v = vlab;
  out.proj.e.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.proj.e[i] = image((EdgeRef)i);
  return out;
}

}  // namespace detail

template <typename T>
struct SumResult {
  T set;
  TruncMap in_left, in_right;
};

template <typename T>
SumResult<T> disjoint_union(const T& A, const T& B) {
  int nv = A.n_vertices();
  int ne = (int)A.edges().size();
  std::vector<typename T::Edge> edges = A.edges();
  for (auto e : B.edges()) {
    e.src += nv;
    e.dst += nv;
    if constexpr (detail::kHasRev<T>) e.rev += ne;
    edges.push_back(e);
  }
  auto shift = [&](EdgeRef r) -> EdgeRef {
    return is_deg(r) ? deg_edge(deg_vertex(r) + nv) : r + ne;
  };
  std::vector<Triangle> tris = A.triangles();
  for (const Triangle& t : B.triangles())
    tris.push_back({shift(t[0]), shift(t[1]), shift(t[2])});
  SumResult<T> out{T(A.n_vertices() + B.n_vertices(), std::move(edges),
                     std::move(tris)),
                   {}, {}};
  out.in_left.v.resize(A.n_vertices());
  std::iota(out.in_left.v.begin(), out.in_left.v.end(), 0);
  out.in_left.e.resize(A.edges().size());
  std::iota(out.in_left.e.begin(), out.in_left.e.end(), 0);
  out.in_right.v.resize(B.n_vertices());
  std::iota(out.in_right.v.begin(), out.in_right.v.end(), nv);
  out.in_right.e.resize(B.edges().size());
  std::iota(out.in_right.e.begin(), out.in_right.e.end(), ne);
  return out;
}

template <typename T>
struct PushoutResult {
  T set;
  TruncMap from_left, from_right;  // injections of the two feet
};

/// Pushout of X <-f- A -g-> Y. Both f and g must be structure-preserving.
template <typename T>
PushoutResult<T> pushout(const T& A, const T& X, const T& Y, const TruncMap& f,
                         const TruncMap& g) {
  require(is_map(A, X, f), "pushout: left leg is not a map");
  require(is_map(A, Y, g), "pushout: right leg is not a map");
  SumResult<T> s = disjoint_union(X, Y);
  std::vector<std::pair<int, int>> vids;
  for (int a = 0; a < A.n_vertices(); ++a)
    vids.push_back({s.in_left.v[f.v[a]], s.in_right.v[g.v[a]]});
  std::vector<std::pair<EdgeRef, EdgeRef>> eids;
  for (std::size_t a = 0; a < A.edges().size(); ++a)
    eids.push_back({s.in_left.edge_image(f.e[a]),
                    s.in_right.edge_image(g.e[a])});
  auto q = detail::quotient(s.set, vids, eids);
  auto compose = [&](const TruncMap& inj) {
    TruncMap m;
    m.v.reserve(inj.v.size());
    for (int v : inj.v) m.v.push_back(q.proj.v[v]);
    m.e.reserve(inj.e.size());
    for (EdgeRef r : inj.e) m.e.push_back(q.proj.edge_image(r));
    return m;
  };
  return {q.set, compose(s.in_left), compose(s.in_right)};
}

/// Coequalizer of f, g : A -> X.
template <typename T>
QuotientResult<T> coequalizer(const T& A, const T& X, const TruncMap& f,
                              const TruncMap& g) {
  require(is_map(A, X, f), "coequalizer: first leg is not a map");
  require(is_map(A, X, g), "coequalizer: second leg is not a map");
  std::vector<std::pair<int, int>> vids;
  for (int a = 0; a < A.n_vertices(); ++a) vids.push_back({f.v[a], g.v[a]});
  std::vector<std::pair<EdgeRef, EdgeRef>> eids;
  for (std::size_t a = 0; a < A.edges().size(); ++a)
    eids.push_back({f.e[a], g.e[a]});
  return detail::quotient(X, vids, eids);
}

/// One-point union, gluing base_left in A to base_right in B.
template <typename T>
QuotientResult<T> wedge(const T& A, const T& B, int base_left,
                        int base_right) {
  require(base_left >= 0 && base_left < A.n_vertices(), "wedge: bad base");
  require(base_right >= 0 && base_right < B.n_vertices(), "wedge: bad base");
  SumResult<T> s = disjoint_union(A, B);
  return detail::quotient(
      s.set, {{s.in_left.v[base_left], s.in_right.v[base_right]}}, {});
}

/// Disjoint sum of complexes (vertices of B shifted past those of A).
inline Complex disjoint_union(const Complex& A, const Complex& B) {
  std::vector<Part> facets = A.facets();
  for (Part f : B.facets()) {
    for (int& v : f) v += A.n_vertices();
    facets.push_back(std::move(f));
  }
  return Complex(A.n_vertices() + B.n_vertices(), std::move(facets));
}

/// One-point union of complexes at the given base vertices.
inline Complex wedge(const Complex& A, const Complex& B, int base_left,
                     int base_right) {
  require(base_left >= 0 && base_left < A.n_vertices(), "wedge: bad base");
  require(base_right >= 0 && base_right < B.n_vertices(), "wedge: bad base");
  // Relabel: A keeps its ids; B's vertices follow, except its base vertex
  // which lands on A's base.
  std::vector<int> relabel(B.n_vertices());
  int next = A.n_vertices();
  for (int v = 0; v < B.n_vertices(); ++v)
    relabel[v] = v == base_right ? base_left : next++;
  std::vector<Part> facets = A.facets();
  for (Part f : B.facets()) {
    for (int& v : f) v = relabel[v];
    facets.push_back(std::move(f));
  }
  return Complex(A.n_vertices() + B.n_vertices() - 1, std::move(facets));
}

}  // namespace cht
