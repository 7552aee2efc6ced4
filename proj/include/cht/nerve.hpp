#pragma once

#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "cht/presentation.hpp"
#include "cht/trunc.hpp"
#include "cht/util.hpp"
#include "cht/words.hpp"

namespace cht {

namespace detail {

inline void check_category(int n_objects, const std::vector<int>& src,
                           const std::vector<int>& dst,
                           const std::vector<int>& identity,
                           const std::vector<std::vector<int>>& then) {
  int m = (int)src.size();
  require(n_objects >= 0, "negative object count");
  require((int)dst.size() == m, "arrow table sizes differ");
  require((int)identity.size() == n_objects, "one identity per object");
  require((int)then.size() == m, "composition table is not m by m");
  for (const auto& row : then)
    require((int)row.size() == m, "composition table is not m by m");
  for (int f = 0; f < m; ++f)
    require(src[f] >= 0 && src[f] < n_objects && dst[f] >= 0 &&
                dst[f] < n_objects,
            "arrow " + std::to_string(f) + ": endpoints out of range");
  for (int x = 0; x < n_objects; ++x) {
    int e = identity[x];
    require(e >= 0 && e < m && src[e] == x && dst[e] == x,
            "object " + std::to_string(x) + ": identity arrow endpoints");
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      int c = then[f][g];
      std::string at = "then[" + std::to_string(f) + "][" +
                       std::to_string(g) + "]";
      if (dst[f] != src[g]) {
        require(c == -1, at + ": composite of incomposable arrows");
        continue;
      }
      require(c >= 0 && c < m, at + ": missing composite");
      require(src[c] == src[f] && dst[c] == dst[g],
              at + ": composite endpoints");
    }
  for (int f = 0; f < m; ++f)
    require(then[identity[src[f]]][f] == f && then[f][identity[dst[f]]] == f,
            "arrow " + std::to_string(f) + ": identity is not neutral");
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (dst[f] != src[g]) continue;
      for (int h = 0; h < m; ++h) {
        if (dst[g] != src[h]) continue;
        require(then[then[f][g]][h] == then[f][then[g][h]],
                "arrows " + std::to_string(f) + "," + std::to_string(g) +
                    "," + std::to_string(h) +
                    ": composition is not associative");
      }
    }
}

}  // namespace detail

/// Finite category given by tables. Arrows are numbered; `then[f][g]` is the
/// composite "f followed by g", and -1 when dst(f) != src(g). Composition of
/// composable arrows must be total, so categories with infinitely many
/// arrows have no representation here.
struct FiniteCategory {
  int n_objects = 0;
  std::vector<int> src, dst;           // per arrow
  std::vector<int> identity;           // per object
  std::vector<std::vector<int>> then;  // m by m composition table

  int n_arrows() const { return (int)src.size(); }
  bool is_identity(int f) const { return identity[src[f]] == f; }
  bool operator==(const FiniteCategory&) const = default;

  void validate() const {
    detail::check_category(n_objects, src, dst, identity, then);
  }
};

/// Finite groupoid: a finite category with an inverse for every arrow.
struct FiniteGroupoid {
  int n_objects = 0;
  std::vector<int> src, dst;
  std::vector<int> identity;
  std::vector<int> inverse;  // per arrow
  std::vector<std::vector<int>> then;

  int n_arrows() const { return (int)src.size(); }
  bool is_identity(int f) const { return identity[src[f]] == f; }
  bool operator==(const FiniteGroupoid&) const = default;

  void validate() const {
    detail::check_category(n_objects, src, dst, identity, then);
    require(inverse.size() == src.size(), "one inverse per arrow");
    for (int f = 0; f < n_arrows(); ++f) {
      int i = inverse[f];
      require(i >= 0 && i < n_arrows() && src[i] == dst[f] &&
                  dst[i] == src[f],
              "arrow " + std::to_string(f) + ": inverse endpoints");
      require(then[f][i] == identity[src[f]] && then[i][f] == identity[dst[f]],
              "arrow " + std::to_string(f) + ": inverse laws");
    }
  }
};

/// Groupoid with n objects and only identity arrows.
inline FiniteGroupoid discrete_groupoid(int n) {
  require(n >= 0, "negative object count");
  FiniteGroupoid g;
  g.n_objects = n;
  g.then.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) {
    g.src.push_back(x);
    g.dst.push_back(x);
    g.identity.push_back(x);
    g.inverse.push_back(x);
    g.then[x][x] = x;
  }
  return g;
}

/// Groupoid with n objects and exactly one arrow between any two of them.
/// Arrow i*n+j runs from i to j.
inline FiniteGroupoid codiscrete_groupoid(int n) {
  require(n >= 0, "negative object count");
  FiniteGroupoid g;
  g.n_objects = n;
  int m = n * n;
  g.then.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g.src.push_back(i);
      g.dst.push_back(j);
      g.inverse.push_back(j * n + i);
    }
  for (int x = 0; x < n; ++x) g.identity.push_back(x * n + x);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) g.then[i * n + j][j * n + k] = i * n + k;
  return g;
}

/// The cyclic group of order n as a one-object groupoid; arrow k is the k-th
/// power of the generator.
inline FiniteGroupoid cyclic_group(int n) {
  require(n >= 1, "order must be positive");
  FiniteGroupoid g;
  g.n_objects = 1;
  g.identity = {0};
  g.then.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    g.src.push_back(0);
    g.dst.push_back(0);
    g.inverse.push_back((n - a) % n);
    for (int b = 0; b < n; ++b) g.then[a][b] = (a + b) % n;
  }
  return g;
}

/// The four-element group in which every non-identity element squares to the
/// identity, as a one-object groupoid. Composition is bitwise xor.
inline FiniteGroupoid klein_four() {
  FiniteGroupoid g;
  g.n_objects = 1;
  g.identity = {0};
  g.then.assign(4, std::vector<int>(4, -1));
  for (int a = 0; a < 4; ++a) {
    g.src.push_back(0);
    g.dst.push_back(0);
    g.inverse.push_back(a);
    for (int b = 0; b < 4; ++b) g.then[a][b] = a ^ b;
  }
  return g;
}

namespace detail {

/// Category of a finite preorder: one arrow i -> j whenever leq(i, j).
template <typename Leq>
FiniteCategory poset_category(int n, Leq leq) {
  FiniteCategory c;
  c.n_objects = n;
  std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq(i, j)) {
        id[i][j] = c.n_arrows();
        c.src.push_back(i);
        c.dst.push_back(j);
      }
  for (int x = 0; x < n; ++x) c.identity.push_back(id[x][x]);
  int m = c.n_arrows();
  c.then.assign(m, std::vector<int>(m, -1));
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (c.dst[f] == c.src[g]) c.then[f][g] = id[c.src[f]][c.dst[g]];
  return c;
}

}  // namespace detail

/// The linear order 0 < 1 < ... < n as a category. Arrows are the pairs
/// (i, j) with i <= j, numbered in lexicographic order.
inline FiniteCategory ordinal_category(int n) {
  require(n >= 0, "negative ordinal");
  return detail::poset_category(n + 1, [](int i, int j) { return i <= j; });
}

/// The poset square: bottom 0, two incomparable middle objects 1 and 2,
/// top 3, ordered by bitmask inclusion. Its two composites 0 -> 3 agree.
inline FiniteCategory commutative_square() {
  return detail::poset_category(4, [](int i, int j) { return (i & j) == i; });
}

/// The n-simplices of a nerve: (n+1) by (n+1) matrices of arrow ids with
/// identity diagonal whose entries compose consistently,
/// then[a[i][j]][a[j][k]] == a[i][k]. Directed nerves store -1 below the
/// diagonal.
struct NerveSimplexList {
  int dim = 0;
  std::vector<std::vector<std::vector<int>>> matrices;
  long long count() const { return (long long)matrices.size(); }
};

/// Full-matrix n-simplices of a groupoid. Such a matrix is determined by its
/// first row a[0][j] (any arrows leaving a common object, with a[0][0]
/// the identity) through a[i][j] = inverse(a[0][i]) then a[0][j], so the
/// first rows are what gets enumerated.
inline NerveSimplexList symmetric_nerve(const FiniteGroupoid& g, int n) {
  require(n >= 0, "negative dimension");
  g.validate();
  NerveSimplexList out;
  out.dim = n;
  std::vector<std::vector<int>> leaving(g.n_objects);
  for (int f = 0; f < g.n_arrows(); ++f) leaving[g.src[f]].push_back(f);
  for (int x0 = 0; x0 < g.n_objects; ++x0) {
    std::vector<int> pick(n, 0);
    for (;;) {
      std::vector<std::vector<int>> a(n + 1, std::vector<int>(n + 1));
      a[0][0] = g.identity[x0];
      for (int t = 1; t <= n; ++t) a[0][t] = leaving[x0][pick[t - 1]];
      for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= n; ++j) a[i][j] = g.then[g.inverse[a[0][i]]][a[0][j]];
      out.matrices.push_back(std::move(a));
      int t = n - 1;
      while (t >= 0 && pick[t] + 1 == (int)leaving[x0].size()) pick[t--] = 0;
      if (t < 0) break;
      ++pick[t];
    }
  }
  return out;
}

/// Upper-triangular n-simplices of a category: composable chains
/// a[0][1], a[1][2], ..., a[n-1][n], filled in with their composites.
inline NerveSimplexList nerve(const FiniteCategory& c, int n) {
  require(n >= 0, "negative dimension");
  c.validate();
  NerveSimplexList out;
  out.dim = n;
  std::vector<std::vector<int>> leaving(c.n_objects);
  for (int f = 0; f < c.n_arrows(); ++f) leaving[c.src[f]].push_back(f);
  std::vector<int> chain;
  auto emit = [&](int x0) {
    std::vector<std::vector<int>> a(n + 1, std::vector<int>(n + 1, -1));
    std::vector<int> obj{x0};
    for (int f : chain) obj.push_back(c.dst[f]);
    for (int i = 0; i <= n; ++i) {
      a[i][i] = c.identity[obj[i]];
      for (int j = i + 1; j <= n; ++j) {
        int comp = chain[i];
        for (int k = i + 1; k < j; ++k) comp = c.then[comp][chain[k]];
        a[i][j] = comp;
      }
    }
    out.matrices.push_back(std::move(a));
  };
  auto extend = [&](auto&& self, int x0, int at) -> void {
    if ((int)chain.size() == n) {
      emit(x0);
      return;
    }
    for (int f : leaving[at]) {
      chain.push_back(f);
      self(self, x0, c.dst[f]);
      chain.pop_back();
    }
  };
  for (int x0 = 0; x0 < c.n_objects; ++x0) extend(extend, x0, x0);
  return out;
}

/// Truncation of a groupoid's nerve: objects as vertices, one edge per
/// non-identity arrow with reversal given by the inverse, one triangle per
/// composable pair of non-identity arrows. `arrow_edge[f]` locates the edge
/// of f; identity arrows map to degenerate edges.
struct SymNerve {
  TruncSymSet set;
  std::vector<EdgeRef> arrow_edge;
};

inline SymNerve nerve_trunc2(const FiniteGroupoid& g) {
  g.validate();
  int m = g.n_arrows();
  std::vector<EdgeRef> arrow_edge(m);
  std::vector<int> edge_arrow;
  for (int f = 0; f < m; ++f) {
    if (g.is_identity(f)) {
      arrow_edge[f] = deg_edge(g.src[f]);
    } else {
      arrow_edge[f] = (EdgeRef)edge_arrow.size();
      edge_arrow.push_back(f);
    }
  }
  std::vector<TruncSymSet::Edge> edges;
  for (int f : edge_arrow)
    edges.push_back({g.src[f], g.dst[f], arrow_edge[g.inverse[f]]});
  TruncSymSet probe(g.n_objects, edges, {});
  std::vector<Triangle> tris;
  for (int f = 0; f < m; ++f) {
    if (g.is_identity(f)) continue;
    for (int h = 0; h < m; ++h) {
      if (g.is_identity(h) || g.dst[f] != g.src[h]) continue;
      Triangle t{arrow_edge[f], arrow_edge[h], arrow_edge[g.then[f][h]]};
      // A pair of mutually inverse arrows yields a triple the degeneracy
      // rules already provide; storing it is redundant.
      if (!probe.degenerate_triangle(t)) tris.push_back(t);
    }
  }
  return {TruncSymSet(g.n_objects, std::move(edges), std::move(tris)),
          std::move(arrow_edge)};
}

/// Directed counterpart for categories. A composite that lands on an
/// identity is recorded with a degenerate outer side; unlike the symmetric
/// case no degeneracy rule supplies those, so they are stored.
struct DirNerve {
  TruncDirSet set;
  std::vector<EdgeRef> arrow_edge;
};

inline DirNerve nerve_trunc2(const FiniteCategory& c) {
  c.validate();
  int m = c.n_arrows();
  std::vector<EdgeRef> arrow_edge(m);
  std::vector<int> edge_arrow;
  for (int f = 0; f < m; ++f) {
    if (c.is_identity(f)) {
      arrow_edge[f] = deg_edge(c.src[f]);
    } else {
      arrow_edge[f] = (EdgeRef)edge_arrow.size();
      edge_arrow.push_back(f);
    }
  }
  std::vector<TruncDirSet::Edge> edges;
  for (int f : edge_arrow) edges.push_back({c.src[f], c.dst[f]});
  TruncDirSet probe(c.n_objects, edges, {});
  std::vector<Triangle> tris;
  for (int f = 0; f < m; ++f) {
    if (c.is_identity(f)) continue;
    for (int h = 0; h < m; ++h) {
      if (c.is_identity(h) || c.dst[f] != c.src[h]) continue;
      Triangle t{arrow_edge[f], arrow_edge[h], arrow_edge[c.then[f][h]]};
      if (!probe.degenerate_triangle(t)) tris.push_back(t);
    }
  }
  return {TruncDirSet(c.n_objects, std::move(edges), std::move(tris)),
          std::move(arrow_edge)};
}

/// Result of comparing a groupoid or category against the bounded path
/// classes of its truncated nerve. Size checks are only attempted on
/// saturated hom-sets; a class collision between distinct arrows is a
/// definite failure regardless of saturation, because bounded rewriting
/// only ever proves equalities.
struct AdjunctionReport {
  bool saturated = true;     // every hom-set's class count is stable
  bool sizes_ok = true;      // class counts match arrow counts
  bool injective_ok = true;  // distinct arrows land in distinct classes
  bool table_ok = true;      // products land in the class of the composite
  std::vector<std::string> mismatches;

  bool ok() const { return saturated && sizes_ok && injective_ok && table_ok; }
  std::string verdict() const {
    if (!sizes_ok || !injective_ok || !table_ok) return "fail";
    return saturated ? "pass" : "inconclusive";
  }
};

namespace detail {

inline AdjunctionReport counit_report(const Presentation& pres, int n_objects,
                                      const std::vector<int>& src,
                                      const std::vector<int>& dst,
                                      const std::vector<std::vector<int>>& then,
                                      const std::vector<std::vector<int>>& words,
                                      int max_len) {
  require(max_len >= 2, "products of arrow words need two letters");
  WordEngine eng(pres, max_len);
  AdjunctionReport rep;
  int m = (int)src.size();
  std::vector<std::vector<char>> hom_sat(n_objects,
                                         std::vector<char>(n_objects, 0));
  for (int x = 0; x < n_objects; ++x)
    for (int y = 0; y < n_objects; ++y) {
      hom_sat[x][y] = eng.saturated(x, y);
      if (!hom_sat[x][y]) {
        rep.saturated = false;
        continue;
      }
      int want = 0;
      for (int f = 0; f < m; ++f) want += src[f] == x && dst[f] == y;
      int got = eng.hom_count(x, y);
      if (got != want) {
        rep.sizes_ok = false;
        rep.mismatches.push_back("hom(" + std::to_string(x) + "," +
                                 std::to_string(y) + "): " +
                                 std::to_string(got) + " classes for " +
                                 std::to_string(want) + " arrows");
      }
    }
  std::vector<int> cls(m);
  std::map<std::tuple<int, int, int>, int> seen;
  for (int f = 0; f < m; ++f) {
    cls[f] = eng.class_of(src[f], words[f]);
    require(cls[f] >= 0, "arrow word exceeded the length bound");
    auto [it, fresh] = seen.try_emplace({src[f], dst[f], cls[f]}, f);
    if (!fresh) {
      rep.injective_ok = false;
      rep.mismatches.push_back("arrows " + std::to_string(it->second) +
                               " and " + std::to_string(f) +
                               " share a path class");
    }
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (dst[f] != src[g]) continue;
      std::vector<int> w = words[f];
      w.insert(w.end(), words[g].begin(), words[g].end());
      int pc = eng.class_of(src[f], w);
      require(pc >= 0, "product word exceeded the length bound");
      if (pc != cls[then[f][g]] && hom_sat[src[f]][dst[g]]) {
        rep.table_ok = false;
        rep.mismatches.push_back("product of arrows " + std::to_string(f) +
                                 " and " + std::to_string(g) +
                                 " misses its composite's class");
      }
    }
  return rep;
}

}  // namespace detail

/// Compares a groupoid with the bounded path classes of its truncated nerve:
/// hom-set sizes, injectivity on arrows, and composition agreement.
inline AdjunctionReport counit_check(const FiniteGroupoid& g, int max_len = 2) {
  SymNerve n = nerve_trunc2(g);
  EdgePresentation ep = edge_path_groupoid(n.set);
  std::vector<std::vector<int>> words;
  for (int f = 0; f < g.n_arrows(); ++f)
    words.push_back(ep.word_of(n.arrow_edge[f]));
  return detail::counit_report(ep.pres, g.n_objects, g.src, g.dst, g.then,
                               words, max_len);
}

inline AdjunctionReport dir_counit_check(const FiniteCategory& c,
                                         int max_len = 2) {
  DirNerve n = nerve_trunc2(c);
  EdgePresentation ep = fundamental_category(n.set);
  std::vector<std::vector<int>> words;
  for (int f = 0; f < c.n_arrows(); ++f)
    words.push_back(ep.word_of(n.arrow_edge[f]));
  return detail::counit_report(ep.pres, c.n_objects, c.src, c.dst, c.then,
                               words, max_len);
}

/// The comparison map from a symmetric truncated set into the truncated
/// nerve of its bounded path-class groupoid. `complete` is false when some
/// hom-set fails to saturate or a product of representatives exceeds the
/// bound; the remaining fields are only meaningful when it is true.
struct UnitReport {
  bool complete = false;
  bool ok = false;
  FiniteGroupoid groupoid;
  TruncSymSet nerve;
  TruncMap map;
};

inline UnitReport unit_map(const TruncSymSet& x, int max_len) {
  UnitReport rep;
  EdgePresentation ep = edge_path_groupoid(x);
  WordEngine eng(ep.pres, max_len);
  if (!eng.fully_saturated()) return rep;
  FiniteGroupoid g;
  g.n_objects = x.n_vertices();
  std::map<int, int> arrow_of_class;
  std::vector<std::vector<int>> word;
  for (int a = 0; a < g.n_objects; ++a)
    for (int b = 0; b < g.n_objects; ++b)
      for (std::vector<int>& w : eng.class_reps(a, b)) {
        arrow_of_class[eng.class_of(a, w)] = g.n_arrows();
        g.src.push_back(a);
        g.dst.push_back(b);
        word.push_back(std::move(w));
      }
  int m = g.n_arrows();
  for (int v = 0; v < g.n_objects; ++v)
    g.identity.push_back(arrow_of_class.at(eng.class_of(v, {})));
  for (int f = 0; f < m; ++f) {
    auto it = arrow_of_class.find(eng.class_of(g.dst[f], inverse_word(word[f])));
    if (it == arrow_of_class.end()) return rep;
    g.inverse.push_back(it->second);
  }
  g.then.assign(m, std::vector<int>(m, -1));
  for (int f = 0; f < m; ++f)
    for (int h = 0; h < m; ++h) {
      if (g.dst[f] != g.src[h]) continue;
      std::vector<int> w = word[f];
      w.insert(w.end(), word[h].begin(), word[h].end());
      int c = eng.class_of(g.src[f], w);
      // Products of representatives can outgrow the enumerated window even
      // when every hom-set saturates; give up rather than guess.
      if (c < 0) return rep;
      auto it = arrow_of_class.find(c);
      if (it == arrow_of_class.end()) return rep;
      g.then[f][h] = it->second;
    }
  rep.complete = true;
  SymNerve n = nerve_trunc2(g);  // validates the assembled tables
  rep.map.v.resize(x.n_vertices());
  std::iota(rep.map.v.begin(), rep.map.v.end(), 0);
  for (int e = 0; e < (int)x.edges().size(); ++e) {
    int c = eng.class_of(x.src((EdgeRef)e), ep.word_of((EdgeRef)e));
    rep.map.e.push_back(n.arrow_edge[arrow_of_class.at(c)]);
  }
  rep.ok = is_map(x, n.set, rep.map);
  rep.groupoid = std::move(g);
  rep.nerve = std::move(n.set);
  return rep;
}

}  // namespace cht
