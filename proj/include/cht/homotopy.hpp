#pragma once

#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "cht/complex.hpp"
#include "cht/util.hpp"

namespace cht {

/// Map of directed complexes: a vertex assignment sending linked words to
/// linked words. Checking the generators suffices.
using DcMap = std::vector<int>;

inline bool is_dc_map(const DirectedComplex& A, const DirectedComplex& X,
                      const DcMap& f) {
  if ((int)f.size() != A.n_vertices()) return false;
  for (int v : f)
    if (v < 0 || v >= X.n_vertices()) return false;
  Word img;
  for (const Word& g : A.generators()) {
    img.clear();
    for (int v : g) img.push_back(f[v]);
    if (!X.linked(img)) return false;
  }
  return true;
}

inline DcMap identity_map(const DirectedComplex& A) {
  DcMap f(A.n_vertices());
  std::iota(f.begin(), f.end(), 0);
  return f;
}

/// One-step directed homotopy from f to g: along every generator the two
/// images interchange admissibly. The combined words double the pivot
/// letter, tracing the diagonal of the cylinder square by square; isolated
/// vertices only need their two images linked.
inline bool immediate_homotopy(const DirectedComplex& A,
                               const DirectedComplex& X, const DcMap& f,
                               const DcMap& g) {
  if (!is_dc_map(A, X, f) || !is_dc_map(A, X, g)) return false;
  std::vector<char> in_gen(A.n_vertices(), 0);
  Word w;
  for (const Word& gen : A.generators()) {
    for (int v : gen) in_gen[v] = 1;
    std::size_t n = gen.size();
    for (std::size_t p = 1; p <= n; ++p) {
      w.clear();
      for (std::size_t q = 0; q < p; ++q) w.push_back(f[gen[q]]);
      for (std::size_t q = p - 1; q < n; ++q) w.push_back(g[gen[q]]);
      if (!X.linked(w)) return false;
    }
  }
  for (int v = 0; v < A.n_vertices(); ++v)
    if (!in_gen[v] && !X.linked({f[v], g[v]})) return false;
  return true;
}

/// All maps A -> X, or nothing when the search would visit more than
/// `budget` partial assignments.
inline std::optional<std::vector<DcMap>> enumerate_dc_maps(
    const DirectedComplex& A, const DirectedComplex& X, long long budget) {
  int n = A.n_vertices();
  // Generators are checked as soon as all their letters are assigned.
  std::vector<std::vector<Word>> ready(n + 1);
  for (const Word& g : A.generators()) {
    int mx = 0;
    for (int v : g) mx = std::max(mx, v);
    ready[mx + 1].push_back(g);
  }
  std::vector<DcMap> out;
  DcMap cur(n, -1);
  long long visited = 0;
  bool blown = false;
  Word img;
  auto rec = [&](auto&& self, int depth) -> void {
    if (blown) return;
    if (++visited > budget) {
      blown = true;
      return;
    }
    if (depth == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < X.n_vertices() && !blown; ++v) {
      cur[depth] = v;
      bool ok = true;
      for (const Word& g : ready[depth + 1]) {
        img.clear();
        for (int u : g) img.push_back(cur[u]);
        if (!X.linked(img)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, depth + 1);
    }
    cur[depth] = -1;
  };
  if (n == 0) return std::vector<DcMap>{DcMap{}};
  rec(rec, 0);
  if (blown) return std::nullopt;
  return out;
}

/// Is g reachable from f through immediate homotopies, in at most max_steps
/// one-way steps? Nothing when the map enumeration exceeds the budget.
inline std::optional<bool> homotopy_reachable(const DirectedComplex& A,
                                              const DirectedComplex& X,
                                              const DcMap& f, const DcMap& g,
                                              int max_steps,
                                              long long budget) {
  require(is_dc_map(A, X, f) && is_dc_map(A, X, g),
          "reachability endpoints must be maps");
  auto maps = enumerate_dc_maps(A, X, budget);
  if (!maps) return std::nullopt;
  std::map<DcMap, int> index;
  for (std::size_t i = 0; i < maps->size(); ++i) index[(*maps)[i]] = (int)i;
  int src = index.at(f), dst = index.at(g);
  std::vector<int> dist(maps->size(), -1);
  dist[src] = 0;
  std::deque<int> queue{src};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == dst) return true;
    if (dist[u] == max_steps) continue;
    for (std::size_t v = 0; v < maps->size(); ++v) {
      if (dist[v] >= 0) continue;
      if (immediate_homotopy(A, X, (*maps)[u], (*maps)[v])) {
        dist[v] = dist[u] + 1;
        queue.push_back((int)v);
      }
    }
  }
  return false;
}

}  // namespace cht
