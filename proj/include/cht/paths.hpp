#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "cht/trunc.hpp"
#include "cht/util.hpp"

namespace cht {

/// Half-open interval of line positions.
struct Support {
  int lo = 0;
  int hi = 0;
  bool operator==(const Support&) const = default;
};

/// Monotone surjection of the integer line that is the identity outside a
/// finite window: a finite composite of elementary delays. Canonical form:
/// window start plus the fiber sizes of the targets in the window, with
/// size-one fibers trimmed at both ends.
class Delay {
 public:
  Delay() = default;  // identity

  Delay(int lo, std::vector<int> mult) : lo_(lo), mult_(std::move(mult)) {
    for (int m : mult_) require(m >= 1, "fiber size must be positive");
    canonicalize();
  }

  /// The elementary delay at i: repeats the value at i, shifting the rest.
  static Delay elementary(int i) { return Delay(i, {2}); }

  bool is_identity() const { return mult_.empty(); }
  int lo() const { return lo_; }
  const std::vector<int>& multiplicities() const { return mult_; }

  int span() const { return (int)mult_.size(); }
  int total() const {
    int t = 0;
    for (int m : mult_) t += m;
    return t;
  }
  int excess() const { return total() - span(); }

  int operator()(int t) const {
    if (t < lo_) return t;
    int s = lo_;
    for (std::size_t j = 0; j < mult_.size(); ++j) {
      if (t < s + mult_[j]) return lo_ + (int)j;
      s += mult_[j];
    }
    return t - excess();
  }

  /// Smallest preimage of v.
  int pre_min(int v) const {
    if (v < lo_) return v;
    if (v >= lo_ + span()) return v + excess();
    int s = lo_;
    for (int j = 0; j < v - lo_; ++j) s += mult_[j];
    return s;
  }

  /// Largest preimage of v.
  int pre_max(int v) const {
    if (v < lo_ || v >= lo_ + span()) return pre_min(v);
    return pre_min(v) + mult_[v - lo_] - 1;
  }

  /// Positions t with d(t) == d(t+1); these determine the delay.
  std::vector<int> noncuts() const {
    std::vector<int> out;
    for (int j = 0; j < span(); ++j)
      for (int t = pre_min(lo_ + j); t < pre_max(lo_ + j); ++t)
        out.push_back(t);
    return out;
  }

  bool operator==(const Delay& o) const {
    return lo_ == o.lo_ && mult_ == o.mult_;
  }

 private:
  void canonicalize() {
    while (!mult_.empty() && mult_.back() == 1) mult_.pop_back();
    std::size_t cut = 0;
    while (cut < mult_.size() && mult_[cut] == 1) ++cut;
    lo_ += (int)cut;
    mult_.erase(mult_.begin(), mult_.begin() + cut);
    if (mult_.empty()) lo_ = 0;
  }

  int lo_ = 0;
  std::vector<int> mult_;
};

namespace detail {

/// Reads a delay off its values on [lo, hi]; the window must contain the
/// whole non-identity zone.
inline Delay delay_from_values(int lo, const std::vector<int>& vals) {
  std::vector<int> mult;
  std::size_t i = 0;
  while (i < vals.size()) {
    std::size_t j = i;
    while (j < vals.size() && vals[j] == vals[i]) ++j;
    mult.push_back((int)(j - i));
    i = j;
  }
  return Delay(lo, std::move(mult));
}

}  // namespace detail

/// Composite f after g (g is applied first).
inline Delay compose(const Delay& f, const Delay& g) {
  int lo = std::min(f.lo(), g.lo()) - 1;
  // f's merge zone pulls back through g, which can push it up by g's excess.
  int hi = std::max(g.lo() + g.total(), g.pre_max(f.lo() + f.total())) + 1;
  std::vector<int> vals;
  for (int t = lo; t <= hi; ++t) vals.push_back(f(g(t)));
  return detail::delay_from_values(lo, vals);
}

/// Builds the delay whose noncut positions are exactly the given set.
inline Delay delay_from_noncuts(const std::set<int>& noncuts) {
  if (noncuts.empty()) return Delay();
  int lo = *noncuts.begin() - 1;
  int hi = *noncuts.rbegin() + 2;
  std::vector<int> vals;
  int v = lo;
  vals.push_back(v);
  for (int t = lo; t < hi; ++t) {
    if (!noncuts.count(t)) ++v;
    vals.push_back(v);
  }
  return detail::delay_from_values(lo, vals);
}

/// Completes the span (d1, d2) to a commutative square: returns (e1, e2)
/// with e1 after d1 == e2 after d2. The common composite merges exactly the
/// positions merged by either input.
inline std::array<Delay, 2> cofilter_witness(const Delay& d1,
                                             const Delay& d2) {
  std::set<int> nc;
  for (int t : d1.noncuts()) nc.insert(t);
  for (int t : d2.noncuts()) nc.insert(t);
  Delay joint = delay_from_noncuts(nc);
  auto divide = [&](const Delay& d) {
    int lo = std::min(joint.lo(), d.lo()) - 1;
    int hi = std::max(joint.lo() + joint.total(), d.lo() + d.total()) + 1;
    std::vector<int> vals;
    for (int s = lo; s <= hi; ++s) {
      require(joint(d.pre_min(s)) == joint(d.pre_max(s)),
              "joint delay not constant on a fiber");
      vals.push_back(joint(d.pre_min(s)));
    }
    return detail::delay_from_values(lo, vals);
  };
  return {divide(d1), divide(d2)};
}

/// Path in a truncated set, as a map from the line: finitely many edges
/// starting at a base position, constant outside. Degenerate entries are
/// kept; they matter for position bookkeeping but not for equality margins.
template <typename T>
struct PathSeq {
  const T* ctx = nullptr;
  int base = 0;
  int start = 0;                // vertex at position base
  std::vector<EdgeRef> edges;   // edge at positions base, base+1, ...

  int len() const { return (int)edges.size(); }

  /// Vertex at line position p, extended constantly outside the window.
  int vertex_at(int p) const {
    int v = start;
    for (int i = 0; i < std::min(p - base, len()); ++i) v = ctx->dst(edges[i]);
    return v;
  }

  int end_vertex() const { return vertex_at(base + len()); }

  /// Edge at line position p, degenerate outside the stored window.
  EdgeRef edge_at(int p) const {
    if (p < base || p >= base + len()) return deg_edge(vertex_at(p));
    return edges[p - base];
  }

  bool valid() const {
    if (!ctx) return false;
    int v = start;
    if (v < 0 || v >= ctx->n_vertices()) return false;
    for (EdgeRef e : edges) {
      if (!is_deg(e) && (e < 0 || e >= (int)ctx->edges().size())) return false;
      if (ctx->src(e) != v) return false;
      v = ctx->dst(e);
    }
    return true;
  }
};

template <typename T>
PathSeq<T> constant_path(const T& ctx, int vertex, int base = 0) {
  require(vertex >= 0 && vertex < ctx.n_vertices(), "vertex out of range");
  return {&ctx, base, vertex, {}};
}

/// Positions of the first and one past the last nondegenerate edge; the
/// support of a constant path is fixed at [0, 0).
template <typename T>
Support standard_support(const PathSeq<T>& a) {
  int first = -1, last = -1;
  for (int i = 0; i < a.len(); ++i) {
    if (!is_deg(a.edges[i])) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) return {0, 0};
  return {a.base + first, a.base + last + 1};
}

/// Equality as maps from the line: same vertices and edges everywhere, which
/// ignores the degenerate margins but nothing else.
template <typename T>
bool path_equal(const PathSeq<T>& a, const PathSeq<T>& b) {
  Support sa = standard_support(a), sb = standard_support(b);
  if (sa.lo == sa.hi || sb.lo == sb.hi)
    return sa.lo == sa.hi && sb.lo == sb.hi && a.start == b.start;
  if (!(sa == sb)) return false;
  if (a.vertex_at(sa.lo) != b.vertex_at(sa.lo)) return false;
  for (int p = sa.lo; p < sa.hi; ++p)
    if (a.edge_at(p) != b.edge_at(p)) return false;
  return true;
}

template <typename T>
bool concatenable(const PathSeq<T>& a, const PathSeq<T>& b) {
  return a.ctx == b.ctx && a.end_vertex() == b.vertex_at(standard_support(b).lo);
}

/// Pasting: a's content shifted by the start of b's support, then b's
/// content shifted by the end of a's. The seam falls at the sum of the two.
template <typename T>
PathSeq<T> concatenate(const PathSeq<T>& a, const PathSeq<T>& b) {
  require(concatenable(a, b), "paths do not match end to start");
  int rho = standard_support(a).hi;
  int sig = standard_support(b).lo;
  PathSeq<T> c;
  c.ctx = a.ctx;
  c.base = std::min(a.base, rho) + sig;
  c.start = a.start;
  for (int p = std::min(a.base, rho); p < rho; ++p)
    c.edges.push_back(a.edge_at(p));
  for (int q = sig; q < b.base + b.len(); ++q) c.edges.push_back(b.edge_at(q));
  return c;
}

/// Reversed path: position i reads the reversal of the edge at -i-1.
inline PathSeq<TruncSymSet> reverse_path(const PathSeq<TruncSymSet>& a) {
  PathSeq<TruncSymSet> r;
  r.ctx = a.ctx;
  r.base = -(a.base + a.len());
  r.start = a.end_vertex();
  for (int i = a.len() - 1; i >= 0; --i)
    r.edges.push_back(a.ctx->rev(a.edges[i]));
  return r;
}

/// a after the delay d: fibers of d stretch the path by degenerate edges.
template <typename T>
PathSeq<T> apply_delay(const PathSeq<T>& a, const Delay& d) {
  int alo = a.base, ahi = a.base + a.len();
  int lo = std::min(d.pre_min(alo), alo);
  int hi = std::max(d.pre_max(ahi), ahi);
  PathSeq<T> out;
  out.ctx = a.ctx;
  out.base = lo;
  out.start = a.vertex_at(d(lo));
  for (int i = lo; i < hi; ++i) {
    int u = d(i), v = d(i + 1);
    out.edges.push_back(u == v ? deg_edge(a.vertex_at(u)) : a.edge_at(u));
  }
  return out;
}

/// Canonical representative of a path under delays: degenerate edges
/// dropped, rebased at zero.
template <typename T>
PathSeq<T> delay_normal_form(const PathSeq<T>& a) {
  PathSeq<T> out;
  out.ctx = a.ctx;
  out.base = 0;
  out.start = a.vertex_at(standard_support(a).lo);
  for (EdgeRef e : a.edges)
    if (!is_deg(e)) out.edges.push_back(e);
  return out;
}

/// Two paths are congruent when they have a common delayed form; the normal
/// form decides it.
template <typename T>
bool congruent(const PathSeq<T>& a, const PathSeq<T>& b) {
  PathSeq<T> na = delay_normal_form(a), nb = delay_normal_form(b);
  return na.start == nb.start && na.edges == nb.edges;
}

/// Congruence plus free cancellation of adjacent edge/reversal pairs.
inline PathSeq<TruncSymSet> strong_normal_form(
    const PathSeq<TruncSymSet>& a) {
  PathSeq<TruncSymSet> n = delay_normal_form(a);
  std::vector<EdgeRef> stack;
  for (EdgeRef e : n.edges) {
    if (!stack.empty() && stack.back() == a.ctx->rev(e))
      stack.pop_back();
    else
      stack.push_back(e);
  }
  n.edges = std::move(stack);
  return n;
}

}  // namespace cht
