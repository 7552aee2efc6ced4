#pragma once

// Resolution-parametrized structures on metric data: exact tolerance
// relations at resolution eps, their 2-skeletons, and sweeps of homotopy
// invariants across a list of resolutions.

#include <algorithm>
#include <cctype>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cht/abelian.hpp"
#include "cht/complex.hpp"
#include "cht/presentation.hpp"
#include "cht/trunc.hpp"
#include "cht/util.hpp"
#include "cht/words.hpp"

namespace cht {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with a positive denominator, so the
/// defaulted equality is semantic equality.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : num_(v) {}  // NOLINT: literals should convert
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    require(den_ != 0, "rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a) {
    Rational r = a;
    r.num_ = -r.num_;
    return r;
  }

  bool operator==(const Rational& o) const = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

inline Rational abs(const Rational& a) {
  return a.num() < 0 ? -a : a;
}

/// Parses "p", "-p" or "p/q" with an unsigned denominator.
inline Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](const char* what) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
    require(i > start,
            std::string("expected ") + what + " in '" + text + "'");
    return BigInt(text.substr(start, i - start));
  };
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-'))
    neg = text[i++] == '-';
  BigInt num = digits("digits");
  BigInt den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits("a denominator");
  }
  require(i == text.size(), "trailing characters in number '" + text + "'");
  return Rational(neg ? -num : num, std::move(den));
}

enum class Metric { kLInf, kL1, kL2Squared };

inline std::string metric_name(Metric m) {
  switch (m) {
    case Metric::kLInf: return "linf";
    case Metric::kL1: return "l1";
    case Metric::kL2Squared: return "l2sq";
  }
  throw input_error("unknown metric");
}

inline Metric metric_from_name(const std::string& name) {
  if (name == "linf") return Metric::kLInf;
  if (name == "l1") return Metric::kL1;
  if (name == "l2sq") return Metric::kL2Squared;
  throw input_error("unknown metric '" + name + "' (linf, l1, l2sq)");
}

/// Finite list of points with exact coordinates. `values` is either empty
/// or one sample per point (image intensities survive loading here).
struct PointCloud {
  std::vector<std::vector<Rational>> points;
  std::vector<Rational> values;
  Metric metric = Metric::kLInf;

  int size() const { return (int)points.size(); }
  int dim() const { return points.empty() ? 0 : (int)points[0].size(); }

  void validate() const {
    for (const auto& p : points)
      require((int)p.size() == dim(), "points of mixed dimension");
    require(values.empty() || (int)values.size() == size(),
            "sample values do not match the points");
  }
};

/// The quantity compared against a resolution: the distance itself for the
/// max and sum metrics, the squared euclidean distance for the third.
/// Resolutions are then read in squared units and every comparison is exact.
inline Rational distance_measure(const PointCloud& c, int i, int j) {
  const auto& p = c.points[i];
  const auto& q = c.points[j];
  Rational acc;
  for (std::size_t k = 0; k < p.size(); ++k) {
    Rational d = p[k] - q[k];
    switch (c.metric) {
      case Metric::kLInf:
        acc = std::max(acc, abs(d));
        break;
      case Metric::kL1:
        acc = acc + abs(d);
        break;
      case Metric::kL2Squared:
        acc = acc + d * d;
        break;
    }
  }
  return acc;
}

enum class StepRule {
  kCoordinatewise,  // p steps to q when every coordinate is <=
  kIntensity,       // p steps to q when value(p) <= value(q)
  kPairList,        // explicit ordered pairs, reflexivity implied
};

inline std::string step_rule_name(StepRule r) {
  switch (r) {
    case StepRule::kCoordinatewise: return "coords";
    case StepRule::kIntensity: return "intensity";
    case StepRule::kPairList: return "pairs";
  }
  throw input_error("unknown step rule");
}

inline StepRule step_rule_from_name(const std::string& name) {
  if (name == "coords") return StepRule::kCoordinatewise;
  if (name == "intensity") return StepRule::kIntensity;
  if (name == "pairs") return StepRule::kPairList;
  throw input_error("unknown step rule '" + name +
                    "' (coords, intensity, pairs)");
}

/// Point cloud with a precedence relation. The relation is reflexive by
/// construction; `pairs` is consulted only under kPairList and must be
/// sorted (use custom_steps to build one).
struct StepMetricSpace {
  PointCloud cloud;
  StepRule rule = StepRule::kCoordinatewise;
  std::vector<std::pair<int, int>> pairs;

  bool step(int i, int j) const {
    if (i == j) return true;
    switch (rule) {
      case StepRule::kCoordinatewise:
        for (int k = 0; k < cloud.dim(); ++k)
          if (!(cloud.points[i][k] <= cloud.points[j][k])) return false;
        return true;
      case StepRule::kIntensity:
        return cloud.values[i] <= cloud.values[j];
      case StepRule::kPairList:
        return std::binary_search(pairs.begin(), pairs.end(),
                                  std::pair<int, int>(i, j));
    }
    return false;
  }

  void validate() const {
    cloud.validate();
    if (rule == StepRule::kIntensity)
      require(!cloud.values.empty() || cloud.size() == 0,
              "intensity steps need sample values");
    if (rule == StepRule::kPairList) {
      require(std::is_sorted(pairs.begin(), pairs.end()),
              "step pairs must be sorted");
      for (auto [a, b] : pairs)
        require(a >= 0 && a < cloud.size() && b >= 0 && b < cloud.size(),
                "step pair out of range");
    }
  }
};

inline StepMetricSpace custom_steps(PointCloud cloud,
                                    std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  StepMetricSpace s{std::move(cloud), StepRule::kPairList, std::move(pairs)};
  s.validate();
  return s;
}

namespace detail {

inline void check_resolution(const Rational& eps) {
  require(Rational(0) <= eps, "resolution must be nonnegative");
}

/// Per unordered pair, whether the two points tolerate each other at eps.
inline std::vector<std::vector<char>> tolerance_matrix(const PointCloud& c,
                                                       const Rational& eps) {
  int n = c.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    adj[i][i] = 1;
    for (int j = i + 1; j < n; ++j)
      adj[i][j] = adj[j][i] = distance_measure(c, i, j) <= eps ? 1 : 0;
  }
  return adj;
}

/// Skeleton of the tolerance graph built directly, edge and triangle order
/// matching two_skeleton of the clique complex while skipping the clique
/// maximality work that grows with the facet count.
inline TruncSymSet tolerance_skeleton(const PointCloud& cloud,
                                      const Rational& eps) {
  int n = cloud.size();
  auto adj = tolerance_matrix(cloud, eps);
  std::vector<TruncSymSet::Edge> edges;
  std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adj[i][j]) {
        int a = (int)edges.size();
        edges.push_back({i, j, a + 1});
        edges.push_back({j, i, a});
        id[i][j] = a;
        id[j][i] = a + 1;
      }
  std::vector<Triangle> tris;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!adj[i][j]) continue;
      for (int k = j + 1; k < n; ++k)
        if (adj[i][k] && adj[j][k])
          tris.push_back({id[i][j], id[j][k], id[i][k]});
    }
  return TruncSymSet(n, std::move(edges), std::move(tris));
}

}  // namespace detail

/// The tolerance relation at resolution eps.
inline TolSet tolerance_set(const PointCloud& cloud, const Rational& eps) {
  cloud.validate();
  detail::check_resolution(eps);
  TolSet t;
  t.n_vertices = cloud.size();
  for (int i = 0; i < cloud.size(); ++i)
    for (int j = i + 1; j < cloud.size(); ++j)
      if (distance_measure(cloud, i, j) <= eps) t.pairs.emplace_back(i, j);
  return t;
}

/// 2-skeleton of the clique complex of the eps-tolerance graph: facets are
/// the triangles, the edges no triangle covers, and the isolated points.
/// Triangles suffice for the invariants this library computes.
inline Complex rips2(const PointCloud& cloud, const Rational& eps) {
  cloud.validate();
  detail::check_resolution(eps);
  int n = cloud.size();
  auto adj = detail::tolerance_matrix(cloud, eps);
  std::vector<std::vector<char>> covered(n, std::vector<char>(n, 0));
  std::vector<Part> facets;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!adj[i][j]) continue;
      for (int k = j + 1; k < n; ++k)
        if (adj[i][k] && adj[j][k]) {
          facets.push_back({i, j, k});
          covered[i][j] = covered[i][k] = covered[j][k] = 1;
        }
    }
  std::vector<char> in_edge(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adj[i][j]) {
        in_edge[i] = in_edge[j] = 1;
        if (!covered[i][j]) facets.push_back({i, j});
      }
  for (int v = 0; v < n; ++v)
    if (!in_edge[v]) facets.push_back({v});
  return Complex(n, std::move(facets));
}

/// Directed 2-skeleton at resolution eps: edges are the strict precedence
/// steps within eps, triangles the two-step chains whose outer step is also
/// within eps. A chain returning to its start closes on a degenerate outer
/// edge, matching the directed skeleton of a complex.
inline TruncDirSet step_rips2(const StepMetricSpace& space,
                              const Rational& eps) {
  space.validate();
  detail::check_resolution(eps);
  const PointCloud& c = space.cloud;
  int n = c.size();
  auto tol = detail::tolerance_matrix(c, eps);
  std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
  std::vector<TruncDirSet::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && tol[i][j] && space.step(i, j)) {
        id[i][j] = (int)edges.size();
        edges.push_back({i, j});
      }
  std::vector<Triangle> tris;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (id[x][y] < 0) continue;
      for (int z = 0; z < n; ++z) {
        if (id[y][z] < 0) continue;
        if (z == x)
          tris.push_back({id[x][y], id[y][z], deg_edge(x)});
        else if (id[x][z] >= 0)
          tris.push_back({id[x][y], id[y][z], id[x][z]});
      }
    }
  return TruncDirSet(n, std::move(edges), std::move(tris));
}

struct SweepOptions {
  int base = -1;  // vertex whose component is measured; -1 picks the largest
  int max_len = 4;
  long long budget = 4000000;
};

struct InvariantRow {
  Rational eps;
  int components = 0;
  AbelianInvariants h1;
  int generators = 0;
  int relators = 0;
  int loop_classes = -1;  // directed sweeps only; -1 when the window ran out
  bool loops_saturated = false;

  bool operator==(const InvariantRow&) const = default;
};

struct InvariantReport {
  bool directed = false;
  std::vector<InvariantRow> rows;

  bool operator==(const InvariantReport&) const = default;
};

namespace detail {

inline void check_eps_list(const std::vector<Rational>& eps_list) {
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    check_resolution(eps_list[i]);
    if (i > 0)
      require(eps_list[i - 1] < eps_list[i],
              "resolutions must be strictly increasing");
  }
}

struct ComponentMeasure {
  AbelianInvariants h1;
  int generators = 0;
  int relators = 0;
};

inline ComponentMeasure measure_component(const Presentation& pres, int v) {
  GroupPresentation gp = vertex_group(pres, v);
  ComponentMeasure m;
  m.generators = gp.n_gens;
  m.relators = (int)gp.relators.size();
  m.h1 = abelianize(gp);
  return m;
}

inline void fill_symmetric(const TruncSymSet& t, int base, InvariantRow& row) {
  Pi0 comp = pi0(t);
  row.components = comp.count;
  Presentation pres = edge_path_groupoid(t).pres;
  if (base >= 0) {
    require(base < t.n_vertices(), "base vertex out of range");
    ComponentMeasure m = measure_component(pres, base);
    row.h1 = m.h1;
    row.generators = m.generators;
    row.relators = m.relators;
    return;
  }
  // Largest component; equally large ones are ranked by the measured
  // numbers themselves so relabeling the points cannot change the report.
  std::vector<int> size_of(comp.count, 0);
  for (int l : comp.labels) ++size_of[l];
  int largest = *std::max_element(size_of.begin(), size_of.end());
  bool have = false;
  ComponentMeasure best;
  std::vector<char> seen(comp.count, 0);
  for (int v = 0; v < t.n_vertices(); ++v) {
    int l = comp.labels[v];
    if (size_of[l] != largest || seen[l]) continue;
    seen[l] = 1;
    ComponentMeasure m = measure_component(pres, v);
    auto key = [](const ComponentMeasure& c) {
      return std::make_tuple(c.h1.rank, c.h1.torsion, c.generators,
                             c.relators);
    };
    if (!have || key(m) < key(best)) {
      best = m;
      have = true;
    }
  }
  row.h1 = best.h1;
  row.generators = best.generators;
  row.relators = best.relators;
}

}  // namespace detail

/// Invariants of the tolerance skeleton at each listed resolution. An empty
/// cloud yields an empty report.
inline InvariantReport eps_sweep(const PointCloud& cloud,
                                 const std::vector<Rational>& eps_list,
                                 SweepOptions opt = {}) {
  cloud.validate();
  detail::check_eps_list(eps_list);
  InvariantReport rep;
  if (cloud.size() == 0) return rep;
  for (const Rational& eps : eps_list) {
    InvariantRow row;
    row.eps = eps;
    detail::fill_symmetric(detail::tolerance_skeleton(cloud, eps), opt.base,
                           row);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

/// Directed variant: the tolerance invariants of the underlying cloud plus
/// the count of loop classes at the base vertex (default 0) found by a
/// bounded enumeration of the precedence skeleton. The count is reported
/// only when the enumeration saturates; running out of budget reads as an
/// unsaturated search, not an input fault.
inline InvariantReport eps_sweep(const StepMetricSpace& space,
                                 const std::vector<Rational>& eps_list,
                                 SweepOptions opt = {}) {
  space.validate();
  detail::check_eps_list(eps_list);
  InvariantReport rep;
  rep.directed = true;
  if (space.cloud.size() == 0) return rep;
  int base = opt.base >= 0 ? opt.base : 0;
  require(base < space.cloud.size(), "base vertex out of range");
  for (const Rational& eps : eps_list) {
    InvariantRow row;
    row.eps = eps;
    detail::fill_symmetric(detail::tolerance_skeleton(space.cloud, eps),
                           opt.base, row);
    Presentation pres = fundamental_category(step_rips2(space, eps)).pres;
    try {
      WordEngine eng(pres, opt.max_len, opt.budget);
      row.loops_saturated = eng.saturated(base, base);
      if (row.loops_saturated) row.loop_classes = eng.hom_count(base, base);
    } catch (const budget_error&) {
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace cht
