#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "cht/complex.hpp"
#include "cht/paths.hpp"
#include "cht/util.hpp"

namespace cht {

/// Path in a complex given by its vertex word; consecutive vertices must be
/// linked. Extends constantly outside the window.
struct VertexPath {
  const Complex* ctx = nullptr;
  int base = 0;
  std::vector<int> word;  // vertices at positions base, base+1, ...

  int at(int p) const {
    if (word.empty()) return -1;
    if (p <= base) return word.front();
    if (p >= base + (int)word.size()) return word.back();
    return word[p - base];
  }

  bool valid() const {
    if (!ctx || word.empty()) return false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (!ctx->linked({word[i], word[i + 1]})) return false;
    return true;
  }
};

/// Standard support of a vertex word path: first and one past last position
/// where the value changes; constants sit at [0, 0).
inline Support word_support(const VertexPath& a) {
  int first = -1, last = -1;
  for (std::size_t i = 0; i + 1 < a.word.size(); ++i) {
    if (a.word[i] != a.word[i + 1]) {
      if (first < 0) first = (int)i;
      last = (int)i;
    }
  }
  if (first < 0) return {0, 0};
  return {a.base + first, a.base + last + 1};
}

/// Rectangular grid of vertices in a complex: rows[s][t] sits at position
/// (base_s + s, base_t + t).
struct PathGrid {
  const Complex* ctx = nullptr;
  int base_s = 0;
  int base_t = 0;
  std::vector<std::vector<int>> rows;

  int n_rows() const { return (int)rows.size(); }
  int n_cols() const { return rows.empty() ? 0 : (int)rows[0].size(); }
};

/// A grid is admissible when every unit square has a linked corner set (and
/// every adjacent pair along a single row or column is linked, which the
/// squares cover except in degenerate one-row or one-column grids).
inline bool validate_grid(const PathGrid& g) {
  if (!g.ctx || g.rows.empty()) return false;
  for (const auto& row : g.rows)
    if ((int)row.size() != g.n_cols() || row.empty()) return false;
  int R = g.n_rows(), C = g.n_cols();
  for (int s = 0; s < R; ++s)
    for (int t = 0; t + 1 < C; ++t)
      if (!g.ctx->linked({g.rows[s][t], g.rows[s][t + 1]})) return false;
  for (int s = 0; s + 1 < R; ++s)
    for (int t = 0; t < C; ++t)
      if (!g.ctx->linked({g.rows[s][t], g.rows[s + 1][t]})) return false;
  for (int s = 0; s + 1 < R; ++s)
    for (int t = 0; t + 1 < C; ++t)
      if (!g.ctx->linked({g.rows[s][t], g.rows[s][t + 1], g.rows[s + 1][t],
                          g.rows[s + 1][t + 1]}))
        return false;
  return true;
}

inline std::vector<int> grid_row(const PathGrid& g, int s) {
  return g.rows.at(s);
}

inline std::vector<int> grid_col(const PathGrid& g, int t) {
  std::vector<int> out;
  for (const auto& row : g.rows) out.push_back(row.at(t));
  return out;
}

/// Caterpillar between a path and its elementary delay: row t of the grid
/// is the path delayed at position min(max(i, t), j). The first row is the
/// path delayed at i; once j clears the support the last row is the path
/// itself. Consecutive rows differ in a single column.
inline PathGrid caterpillar_grid(const VertexPath& a, int i, int j) {
  require(a.valid(), "caterpillar needs a valid path");
  Support sup = word_support(a);
  require(j >= std::max(i, sup.hi), "delay indices must clear the support");
  int c_lo = std::min(a.base, std::min(i, sup.lo)) - 1;
  int c_hi = std::max(a.base + (int)a.word.size(), j + 2);
  PathGrid g;
  g.ctx = a.ctx;
  g.base_s = i;
  g.base_t = c_lo;
  for (int t = i; t <= j; ++t) {
    Delay d = Delay::elementary(std::min(std::max(i, t), j));
    std::vector<int> row;
    for (int s = c_lo; s <= c_hi; ++s) row.push_back(a.at(d(s)));
    g.rows.push_back(std::move(row));
  }
  return g;
}

/// Connection grids: the square filled with a(s v t) or a(s ^ t).
enum class Connection { kMax, kMin };

inline PathGrid connection_grid(const VertexPath& a, Connection kind, int lo,
                                int hi) {
  require(a.valid(), "connection needs a valid path");
  require(lo <= hi, "empty window");
  PathGrid g;
  g.ctx = a.ctx;
  g.base_s = lo;
  g.base_t = lo;
  for (int s = lo; s <= hi; ++s) {
    std::vector<int> row;
    for (int t = lo; t <= hi; ++t)
      row.push_back(kind == Connection::kMax ? a.at(std::max(s, t))
                                             : a.at(std::min(s, t)));
    g.rows.push_back(std::move(row));
  }
  return g;
}

/// Rows compared one by one up to delays (adjacent repeats dropped).
inline bool rows_congruent(const PathGrid& a, const PathGrid& b) {
  if (a.n_rows() != b.n_rows()) return false;
  for (int s = 0; s < a.n_rows(); ++s)
    if (dedup_adjacent(a.rows[s]) != dedup_adjacent(b.rows[s])) return false;
  return true;
}

/// The set of column words up to delays; invariant under two-dimensional
/// product delays in either variable.
inline std::set<std::vector<int>> column_classes(const PathGrid& g) {
  std::set<std::vector<int>> out;
  for (int t = 0; t < g.n_cols(); ++t) out.insert(dedup_adjacent(grid_col(g, t)));
  return out;
}

namespace detail {

/// All monotone surjections [0, n) -> [0, m) as index vectors.
inline void surjections(int n, int m, std::vector<int>& acc,
                        std::vector<std::vector<int>>& out) {
  int k = (int)acc.size();
  if (k == n) {
    if (acc.back() == m - 1) out.push_back(acc);
    return;
  }
  int lo = k == 0 ? 0 : acc.back();
  int hi = k == 0 ? 0 : std::min(acc.back() + 1, m - 1);
  for (int next = lo; next <= hi; ++next) {
    // remaining positions must still be able to reach m-1
    if ((m - 1 - next) <= (n - 1 - k)) {
      acc.push_back(next);
      surjections(n, m, acc, out);
      acc.pop_back();
    }
  }
}

inline std::vector<std::vector<int>> all_surjections(int n, int m) {
  std::vector<std::vector<int>> out;
  if (n < m || m <= 0) return out;
  std::vector<int> acc;
  surjections(n, m, acc, out);
  return out;
}

}  // namespace detail

/// Reindexes the grid along both axes: result[s][t] = rows[fs(s)][ft(t)].
inline PathGrid apply_grid_delays(const PathGrid& g,
                                  const std::vector<int>& fs,
                                  const std::vector<int>& ft) {
  PathGrid out;
  out.ctx = g.ctx;
  out.base_s = g.base_s;
  out.base_t = g.base_t;
  for (int s : fs) {
    std::vector<int> row;
    for (int t : ft) row.push_back(g.rows.at(s).at(t));
    out.rows.push_back(std::move(row));
  }
  return out;
}

/// Searches for two-dimensional delays exhibiting a common stretched form of
/// the two grids, with both result dimensions capped at the larger input
/// dimension plus the given margin. Returns true when a pair is found.
inline bool delay_coincidence(const PathGrid& a, const PathGrid& b,
                              int margin) {
  int r_lo = std::max(a.n_rows(), b.n_rows());
  int c_lo = std::max(a.n_cols(), b.n_cols());
  for (int R = r_lo; R <= r_lo + margin; ++R)
    for (int C = c_lo; C <= c_lo + margin; ++C) {
      auto sa = detail::all_surjections(R, a.n_rows());
      auto sb = detail::all_surjections(R, b.n_rows());
      auto ta = detail::all_surjections(C, a.n_cols());
      auto tb = detail::all_surjections(C, b.n_cols());
      for (const auto& fa : sa)
        for (const auto& fb : sb)
          for (const auto& ga : ta)
            for (const auto& gb : tb) {
              bool same = true;
              for (int s = 0; s < R && same; ++s)
                for (int t = 0; t < C && same; ++t)
                  same = a.rows[fa[s]][ga[t]] == b.rows[fb[s]][gb[t]];
              if (same) return true;
            }
    }
  return false;
}

}  // namespace cht
