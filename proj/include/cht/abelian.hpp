#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cht/presentation.hpp"
#include "cht/util.hpp"

namespace cht {

/// Isomorphism type of a finitely generated abelian group: free rank plus
/// invariant factors (each > 1, each dividing the next).
struct AbelianInvariants {
  int rank = 0;
  std::vector<long long> torsion;
  bool operator==(const AbelianInvariants&) const = default;
};

namespace detail {

inline long long ck_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("add");
  return r;
}
inline long long ck_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("sub");
  return r;
}
inline long long ck_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("mul");
  return r;
}
inline boost::multiprecision::cpp_int ck_add(
    const boost::multiprecision::cpp_int& a,
    const boost::multiprecision::cpp_int& b) {
  return a + b;
}
inline boost::multiprecision::cpp_int ck_sub(
    const boost::multiprecision::cpp_int& a,
    const boost::multiprecision::cpp_int& b) {
  return a - b;
}
inline boost::multiprecision::cpp_int ck_mul(
    const boost::multiprecision::cpp_int& a,
    const boost::multiprecision::cpp_int& b) {
  return a * b;
}

template <typename I>
I int_abs(const I& x) {
  return x < 0 ? I(-x) : x;
}

/// Diagonal of the Smith normal form. Entries are positive and each divides
/// the next; zero diagonal entries are dropped.
template <typename I>
std::vector<I> smith_diagonal(std::vector<std::vector<I>> m) {
  int rows = (int)m.size();
  int cols = rows ? (int)m[0].size() : 0;
  std::vector<I> diag;
  int t = 0;
  while (t < rows && t < cols) {
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0 &&
            (pi < 0 || int_abs(m[i][j]) < int_abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
    for (;;) {
      bool clean = true;
      do {
        clean = true;
        for (int i = t + 1; i < rows; ++i) {
          if (m[i][t] == 0) continue;
          I q = m[i][t] / m[t][t];
          for (int j = t; j < cols; ++j)
            m[i][j] = ck_sub(m[i][j], ck_mul(q, m[t][j]));
          if (m[i][t] != 0) {
            std::swap(m[t], m[i]);
            clean = false;
          }
        }
        for (int j = t + 1; j < cols; ++j) {
          if (m[t][j] == 0) continue;
          I q = m[t][j] / m[t][t];
          for (int i = t; i < rows; ++i)
            m[i][j] = ck_sub(m[i][j], ck_mul(q, m[i][t]));
          if (m[t][j] != 0) {
            for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
            clean = false;
          }
        }
      } while (!clean);
      // the pivot must divide every remaining entry before moving on
      int bi = -1;
      for (int i = t + 1; i < rows && bi < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      for (int j = t; j < cols; ++j) m[t][j] = ck_add(m[t][j], m[bi][j]);
    }
    diag.push_back(int_abs(m[t][t]));
    ++t;
  }
  return diag;
}

template <typename I>
AbelianInvariants invariants_from(const std::vector<I>& diag, int n_gens) {
  AbelianInvariants out;
  out.rank = n_gens - (int)diag.size();
  for (const I& d : diag)
    if (d > 1) {
      require(d <= I(std::numeric_limits<long long>::max()),
              "torsion coefficient too large");
      out.torsion.push_back(static_cast<long long>(d));
    }
  return out;
}

}  // namespace detail

/// Abelianization of a group presentation. Exponent sums form an integer
/// relation matrix whose Smith normal form gives rank and torsion. Runs in
/// 64-bit arithmetic and falls back to arbitrary precision on overflow.
inline AbelianInvariants abelianize(const GroupPresentation& g) {
  // Exponent rows are collected sparsely and deduplicated before anything
  // dense is allocated: triangle-derived relators repeat heavily, and
  // duplicate or zero rows generate nothing new.
  std::set<std::vector<std::pair<int, long long>>> sparse;
  for (const auto& rel : g.relators) {
    std::map<int, long long> acc;
    for (int l : rel) acc[letter_gen(l)] += l >= 0 ? 1 : -1;
    std::vector<std::pair<int, long long>> row;
    for (auto [c, v] : acc)
      if (v != 0) row.emplace_back(c, v);
    if (!row.empty()) sparse.insert(std::move(row));
  }
  std::vector<std::vector<long long>> m;
  m.reserve(sparse.size());
  for (const auto& row : sparse) {
    std::vector<long long> dense(g.n_gens, 0);
    for (auto [c, v] : row) dense[c] = v;
    m.push_back(std::move(dense));
  }
  try {
    return detail::invariants_from(detail::smith_diagonal(m), g.n_gens);
  } catch (const std::overflow_error&) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      big[i].assign(m[i].begin(), m[i].end());
    return detail::invariants_from<cpp_int>(detail::smith_diagonal(big),
                                            g.n_gens);
  }
}

/// Abelianized loop group of each connected component, listed in component
/// label order.
inline std::vector<AbelianInvariants> first_homology(const TruncSymSet& x) {
  Pi0 comps = pi0(x);
  EdgePresentation ep = edge_path_groupoid(x);
  std::vector<AbelianInvariants> out(comps.count);
  std::vector<char> done(comps.count, 0);
  for (int v = 0; v < x.n_vertices(); ++v) {
    int c = comps.labels[v];
    if (done[c]) continue;
    done[c] = 1;
    out[c] = abelianize(vertex_group(ep.pres, v));
  }
  return out;
}

}  // namespace cht
