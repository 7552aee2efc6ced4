#pragma once

#include <cctype>
#include <numeric>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cht/colimits.hpp"
#include "cht/complex.hpp"
#include "cht/trunc.hpp"
#include "cht/util.hpp"

namespace cht {

/// Interval [i, j] of the combinatorial line, relabelled to 0..j-i.
inline Complex line_window(int i, int j) {
  require(i <= j, "line window needs i <= j");
  int n = j - i + 1;
  std::vector<Part> facets;
  for (int k = 0; k + 1 < n; ++k) facets.push_back({k, k + 1});
  return Complex(n, std::move(facets));
}

/// Interval [i, j] of the directed line, relabelled to 0..j-i.
inline DirectedComplex dir_line_window(int i, int j) {
  require(i <= j, "line window needs i <= j");
  int n = j - i + 1;
  std::vector<Word> gens;
  for (int k = 0; k + 1 < n; ++k) gens.push_back({k, k + 1});
  return DirectedComplex(n, std::move(gens));
}

/// Codiscrete complex on the vertices 0..n: every part is linked.
inline Complex codiscrete(int n) {
  require(n >= 0, "codiscrete needs n >= 0");
  Part all(n + 1);
  std::iota(all.begin(), all.end(), 0);
  return Complex(n + 1, {all});
}

/// Discrete complex on n vertices: only trivial parts are linked.
inline Complex discrete_complex(int n) {
  require(n >= 0, "discrete needs n >= 0");
  return Complex(n, {});
}

/// The ordinal 0 <= 1 <= ... <= n as a directed complex: linked words are
/// the weakly increasing ones.
inline DirectedComplex simplex_dir(int n) {
  require(n >= 0, "simplex needs n >= 0");
  Word all(n + 1);
  std::iota(all.begin(), all.end(), 0);
  return DirectedComplex(n + 1, {all});
}

/// k-point circle for k >= 3 (below that the coequalizer of the interval's
/// faces leaves the world of complexes; see circle_trunc).
inline Complex circle(int k) {
  require(k >= 3, "circle(k) is a complex only for k >= 3");
  std::vector<Part> facets;
  for (int i = 0; i < k; ++i) facets.push_back({i, (i + 1) % k});
  return Complex(k, std::move(facets));
}

/// k-point circle as a truncated symmetric set, any k >= 1. For k <= 2 this
/// is the honest coequalizer of the faces of [0, k]: parallel edges (k = 2)
/// or a loop with its distinct reversal (k = 1).
inline TruncSymSet circle_trunc(int k) {
  require(k >= 1, "circle needs k >= 1");
  std::vector<TruncSymSet::Edge> edges;
  for (int i = 0; i < k; ++i) {
    // Edge pair i runs between vertices i and (i+1) mod k.
    edges.push_back({i, (i + 1) % k, 2 * i + 1});
    edges.push_back({(i + 1) % k, i, 2 * i});
  }
  return TruncSymSet(k, std::move(edges), {});
}

/// k-point directed circle for k >= 3.
inline DirectedComplex dir_circle(int k) {
  require(k >= 3, "dir_circle(k) is a directed complex only for k >= 3");
  std::vector<Word> gens;
  for (int i = 0; i < k; ++i) gens.push_back({i, (i + 1) % k});
  return DirectedComplex(k, std::move(gens));
}

/// k-point directed circle as a truncated directed set, any k >= 1.
inline TruncDirSet dir_circle_trunc(int k) {
  require(k >= 1, "circle needs k >= 1");
  std::vector<TruncDirSet::Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  return TruncDirSet(k, std::move(edges), {});
}

namespace detail {

struct SphereGrid {
  int n, k;
  std::vector<int> strides;

  SphereGrid(int n_, int k_) : n(n_), k(k_), strides(n_) {
    int s = 1;
    for (int d = n - 1; d >= 0; --d) {
      strides[d] = s;
      s *= k;
    }
  }

  bool interior(const std::vector<int>& p) const {
    for (int c : p)
      if (c < 1 || c > k) return false;
    return true;
  }

  // base vertex is 0; interior grid points follow in lexicographic order
  int vertex(const std::vector<int>& p) const {
    if (!interior(p)) return 0;
    int id = 1;
    for (int d = 0; d < n; ++d) id += (p[d] - 1) * strides[d];
    return id;
  }

  int n_vertices() const {
    int t = 1;
    for (int d = 0; d < n; ++d) t *= k;
    return t + 1;
  }

  template <typename F>
  void for_each_cell(F&& f) const {
    std::vector<int> c(n, 0);
    while (true) {
      f(c);
      int d = n - 1;
      while (d >= 0 && c[d] == k) c[d--] = 0;
      if (d < 0) break;
      ++c[d];
    }
  }
};

inline void dir_sphere_chains(const SphereGrid& g, const std::vector<int>& lo,
                              std::vector<int>& p, Word& acc,
                              std::set<Word>& out) {
  acc.push_back(g.vertex(p));
  bool top = true;
  for (int d = 0; d < g.n; ++d) {
    if (p[d] == lo[d]) {
      ++p[d];
      dir_sphere_chains(g, lo, p, acc, out);
      --p[d];
      top = false;
    }
  }
  if (top) {
    Word w = dedup_adjacent(acc);
    if (w.size() >= 2) out.insert(w);
  }
  acc.pop_back();
}

}  // namespace detail

/// k-collapsed n-sphere: the window [0, k+1]^n of the n-fold line product
/// with everything outside [1, k]^n identified to a single base point
/// (vertex 0). Facets are the images of the unit cells.
inline Complex collapsed_sphere(int n, int k) {
  require(n >= 1 && k >= 2, "collapsed sphere needs n >= 1, k >= 2");
  detail::SphereGrid g(n, k);
  std::vector<Part> facets;
  g.for_each_cell([&](const std::vector<int>& c) {
    Part f;
    std::vector<int> p(n);
    for (int mask = 0; mask < (1 << n); ++mask) {
      for (int d = 0; d < n; ++d) p[d] = c[d] + ((mask >> d) & 1);
      f.push_back(g.vertex(p));
    }
    facets.push_back(std::move(f));
  });
  return Complex(g.n_vertices(), std::move(facets));
}

/// Directed k-collapsed n-sphere: generators are the images of the monotone
/// corner chains of the unit cells.
inline DirectedComplex dir_collapsed_sphere(int n, int k) {
  require(n >= 1 && k >= 2, "collapsed sphere needs n >= 1, k >= 2");
  detail::SphereGrid g(n, k);
  std::set<Word> gens;
  g.for_each_cell([&](const std::vector<int>& c) {
    std::vector<int> p = c;
    Word acc;
    detail::dir_sphere_chains(g, c, p, acc, gens);
  });
  return DirectedComplex(g.n_vertices(),
                         std::vector<Word>(gens.begin(), gens.end()));
}

/// A built space: the four shapes a catalog spec can produce.
using BuiltSpace =
    std::variant<Complex, DirectedComplex, TruncSymSet, TruncDirSet>;

inline bool is_directed(const BuiltSpace& s) {
  return std::holds_alternative<DirectedComplex>(s) ||
         std::holds_alternative<TruncDirSet>(s);
}

inline TruncSymSet to_sym_trunc(const BuiltSpace& s) {
  if (auto* c = std::get_if<Complex>(&s)) return two_skeleton(*c);
  if (auto* t = std::get_if<TruncSymSet>(&s)) return *t;
  throw input_error("expected a symmetric space");
}

inline TruncDirSet to_dir_trunc(const BuiltSpace& s) {
  if (auto* c = std::get_if<DirectedComplex>(&s)) return dir_two_skeleton(*c);
  if (auto* t = std::get_if<TruncDirSet>(&s)) return *t;
  throw input_error("expected a directed space");
}

namespace detail {

struct SpecParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit SpecParser(const std::string& str) : s(str) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw input_error("spec parse error at position " + std::to_string(pos) +
                      ": " + what);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) ||
                              s[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected a name");
    return s.substr(start, pos - start);
  }

  int number() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (start == pos) fail("expected a number");
    return std::stoi(s.substr(start, pos - start));
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::vector<int> args(std::size_t want) {
    std::vector<int> out;
    for (std::size_t i = 0; i < want; ++i) {
      if (!eat(':')) fail("expected ':'");
      out.push_back(number());
    }
    return out;
  }

  BuiltSpace parse() {
    BuiltSpace sp = parse_spec();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return sp;
  }

  BuiltSpace parse_spec() {
    std::string name = ident();
    if (name == "wedge") {
      if (!eat('(')) fail("expected '('");
      BuiltSpace a = parse_spec();
      if (!eat(',')) fail("expected ','");
      BuiltSpace b = parse_spec();
      if (!eat(')')) fail("expected ')'");
      return make_wedge(a, b);
    }
    if (name == "line") {
      auto a = args(2);
      return line_window(a[0], a[1]);
    }
    if (name == "dline") {
      auto a = args(2);
      return dir_line_window(a[0], a[1]);
    }
    if (name == "codisc") return codiscrete(args(1)[0]);
    if (name == "discrete") return discrete_complex(args(1)[0]);
    if (name == "point") return discrete_complex(1);
    if (name == "osimplex" || name == "dsimplex") return simplex_dir(args(1)[0]);
    if (name == "circle") {
      int k = args(1)[0];
      if (k >= 3) return circle(k);
      return circle_trunc(k);
    }
    if (name == "dcircle") {
      int k = args(1)[0];
      if (k >= 3) return dir_circle(k);
      return dir_circle_trunc(k);
    }
    if (name == "csphere") {
      auto a = args(2);
      return collapsed_sphere(a[0], a[1]);
    }
    if (name == "dcsphere") {
      auto a = args(2);
      return dir_collapsed_sphere(a[0], a[1]);
    }
    fail("unknown space '" + name + "'");
  }

  static BuiltSpace make_wedge(const BuiltSpace& a, const BuiltSpace& b) {
    bool da = is_directed(a), db = is_directed(b);
    require(da == db, "wedge of a directed and a symmetric space");
    if (da) return cht::wedge(to_dir_trunc(a), to_dir_trunc(b), 0, 0).set;
    if (std::holds_alternative<Complex>(a) &&
        std::holds_alternative<Complex>(b))
      return cht::wedge(std::get<Complex>(a), std::get<Complex>(b), 0, 0);
    return cht::wedge(to_sym_trunc(a), to_sym_trunc(b), 0, 0).set;
  }
};

}  // namespace detail

/// Parses a catalog spec such as "circle:3", "csphere:2:2", "dline:0:5" or
/// "wedge(circle:3,circle:3)".
inline BuiltSpace build_space(const std::string& spec) {
  detail::SpecParser p(spec);
  return p.parse();
}

/// The spec names understood by build_space, for help text.
inline std::vector<std::string> space_catalog() {
  return {"line:i:j",    "dline:i:j", "codisc:n",     "discrete:n",
          "point",       "osimplex:n", "circle:k",    "dcircle:k",
          "csphere:n:k", "dcsphere:n:k", "wedge(spec,spec)"};
}

}  // namespace cht
