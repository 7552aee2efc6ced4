#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "cht/util.hpp"

namespace cht {

using Part = std::vector<int>;   // vertex set, kept sorted and unique
using Word = std::vector<int>;   // vertex sequence, repetitions allowed

inline Part normalized_part(Part p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

/// Collapses adjacent equal entries: (1,1,2,2,1) -> (1,2,1).
inline Word dedup_adjacent(const Word& w) {
  Word out;
  for (int v : w)
    if (out.empty() || out.back() != v) out.push_back(v);
  return out;
}

// true iff `needle` is a (not necessarily contiguous) subsequence of `hay`.
inline bool is_subsequence(const Word& needle, const Word& hay) {
  std::size_t i = 0;
  for (int v : hay) {
    if (i < needle.size() && needle[i] == v) ++i;
  }
  return i == needle.size();
}

/// Simplicial complex given by its maximal linked parts (facets).
/// Vertices are dense integers 0..n_vertices-1. The empty part and all
/// singletons are linked; a part is linked iff it lies inside a facet.
class Complex {
 public:
  Complex() = default;
  Complex(int n_vertices, std::vector<Part> facets)
      : n_(n_vertices), facets_(std::move(facets)) {
    normalize();
  }

  int n_vertices() const { return n_; }
  const std::vector<Part>& facets() const { return facets_; }

  bool linked(const Part& raw) const {
    Part p = normalized_part(raw);
    for (int v : p) check_vertex(v);
    if (p.size() <= 1) return true;
    for (const Part& f : facets_)
      if (std::includes(f.begin(), f.end(), p.begin(), p.end())) return true;
    return false;
  }

  /// All linked parts of size k (k = 2 or 3 in practice), each sorted.
  std::vector<Part> linked_parts_of_size(int k) const {
    std::set<Part> out;
    for (const Part& f : facets_) {
      if ((int)f.size() < k) continue;
      Part idx(k);
      collect_subsets(f, k, 0, idx, 0, out);
    }
    return {out.begin(), out.end()};
  }

  bool operator==(const Complex& o) const {
    return n_ == o.n_ && facets_ == o.facets_;
  }

 private:
  void check_vertex(int v) const {
    require(v >= 0 && v < n_, "vertex id out of range: " + std::to_string(v));
  }

  // Sort, dedupe, drop non-maximal facets, cover isolated vertices with
  // singletons; the facet list ends canonical (an antichain, sorted).
  void normalize() {
    for (Part& f : facets_) {
      f = normalized_part(std::move(f));
      for (int v : f) check_vertex(v);
    }
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    std::vector<Part> maximal;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (facets_[i].empty()) continue;
      bool contained = false;
      for (std::size_t j = 0; j < facets_.size() && !contained; ++j)
        contained = i != j && facets_[j].size() > facets_[i].size() &&
                    std::includes(facets_[j].begin(), facets_[j].end(),
                                  facets_[i].begin(), facets_[i].end());
      if (!contained) maximal.push_back(facets_[i]);
    }
    std::vector<char> covered(n_, 0);
    for (const Part& f : maximal)
      for (int v : f) covered[v] = 1;
    for (int v = 0; v < n_; ++v)
      if (!covered[v]) maximal.push_back({v});
    std::sort(maximal.begin(), maximal.end());
    facets_ = std::move(maximal);
  }

  static void collect_subsets(const Part& f, int k, std::size_t from,
                              Part& idx, int depth, std::set<Part>& out) {
    if (depth == k) {
      out.insert(idx);
      return;
    }
    for (std::size_t i = from; i + (k - depth) <= f.size(); ++i) {
      idx[depth] = f[i];
      collect_subsets(f, k, i + 1, idx, depth + 1, out);
    }
  }

  int n_ = 0;
  std::vector<Part> facets_;
};

/// Tolerance set: a reflexive symmetric relation, stored as unordered pairs
/// of distinct vertices (the reflexive loops are implicit).
struct TolSet {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> pairs;  // each with first < second, sorted

  bool related(int x, int y) const {
    require(x >= 0 && x < n_vertices && y >= 0 && y < n_vertices,
            "vertex id out of range");
    if (x == y) return true;
    auto p = std::minmax(x, y);
    return std::binary_search(pairs.begin(), pairs.end(),
                              std::make_pair(p.first, p.second));
  }

  bool operator==(const TolSet& o) const {
    return n_vertices == o.n_vertices && pairs == o.pairs;
  }
};

/// Directed simplicial complex: linked words are generated by a finite list
/// of vertex words, closed under omitting and repeating entries. A word is
/// linked iff its adjacent-deduplicated form is a subsequence of a generator;
/// the empty word and all unary words are linked unconditionally.
class DirectedComplex {
 public:
  DirectedComplex() = default;
  DirectedComplex(int n_vertices, std::vector<Word> generators)
      : n_(n_vertices), gens_(std::move(generators)) {
    normalize();
  }

  int n_vertices() const { return n_; }
  const std::vector<Word>& generators() const { return gens_; }

  bool linked(const Word& w) const {
    for (int v : w) check_vertex(v);
    if (w.size() <= 1) return true;
    Word d = dedup_adjacent(w);
    if (d.size() <= 1) return true;
    for (const Word& g : gens_)
      if (is_subsequence(d, g)) return true;
    return false;
  }

  bool operator==(const DirectedComplex& o) const {
    return n_ == o.n_ && gens_ == o.gens_;
  }

 private:
  void check_vertex(int v) const {
    require(v >= 0 && v < n_, "vertex id out of range: " + std::to_string(v));
  }

  void normalize() {
    for (Word& g : gens_) {
      for (int v : g) check_vertex(v);
      g = dedup_adjacent(g);
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    // Drop generators already implied by another (subsequence closure);
    // unary and empty generators add nothing.
    std::vector<Word> kept;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].size() < 2) continue;
      bool implied = false;
      for (std::size_t j = 0; j < gens_.size() && !implied; ++j)
        implied = i != j && gens_[j].size() > gens_[i].size() &&
                  is_subsequence(gens_[i], gens_[j]);
      if (!implied) kept.push_back(gens_[i]);
    }
    gens_ = std::move(kept);
  }

  int n_ = 0;
  std::vector<Word> gens_;
};

/// Step set: vertices with an explicit step relation x -> y; a word is
/// linked iff every consecutive pair is a step (or equal).
struct StepSet {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> steps;  // ordered pairs, x != y, sorted

  bool step(int x, int y) const {
    require(x >= 0 && x < n_vertices && y >= 0 && y < n_vertices,
            "vertex id out of range");
    if (x == y) return true;
    return std::binary_search(steps.begin(), steps.end(), std::make_pair(x, y));
  }

  bool linked(const Word& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (!step(w[i], w[i + 1])) return false;
    for (int v : w)
      require(v >= 0 && v < n_vertices, "vertex id out of range");
    return true;
  }
};

/// Tolerance relation underlying a complex: x ! y iff {x, y} is linked.
inline TolSet tol_of(const Complex& X) {
  TolSet t;
  t.n_vertices = X.n_vertices();
  for (const Part& p : X.linked_parts_of_size(2))
    t.pairs.emplace_back(p[0], p[1]);
  std::sort(t.pairs.begin(), t.pairs.end());
  return t;
}

/// Forgets direction at the simple level: linked parts of the result are
/// exactly the supports of linked words.
inline Complex sym_forget(const DirectedComplex& X) {
  std::vector<Part> facets;
  for (const Word& g : X.generators()) facets.push_back(normalized_part(g));
  return Complex(X.n_vertices(), std::move(facets));
}

inline int product_vertex(int x, int y, int ny) { return x * ny + y; }

/// Binary product of complexes: a part is linked iff both projections are.
/// Vertex (x, y) gets id x * Y.n_vertices() + y.
inline Complex product(const Complex& X, const Complex& Y) {
  int ny = Y.n_vertices();
  std::vector<Part> facets;
  for (const Part& a : X.facets())
    for (const Part& b : Y.facets()) {
      Part f;
      f.reserve(a.size() * b.size());
      for (int x : a)
        for (int y : b) f.push_back(product_vertex(x, y, ny));
      facets.push_back(std::move(f));
    }
  return Complex(X.n_vertices() * ny, std::move(facets));
}

namespace detail {
inline void staircases(const Word& u, const Word& v, int ny, std::size_t i,
                       std::size_t j, Word& acc, std::set<Word>& out) {
  acc.push_back(product_vertex(u[i], v[j], ny));
  if (i + 1 == u.size() && j + 1 == v.size()) {
    out.insert(dedup_adjacent(acc));
  } else {
    if (i + 1 < u.size()) staircases(u, v, ny, i + 1, j, acc, out);
    if (j + 1 < v.size()) staircases(u, v, ny, i, j + 1, acc, out);
  }
  acc.pop_back();
}
}  // namespace detail

/// Binary product of directed complexes: a word is linked iff both
/// projections are. Generators are the monotone staircase words over pairs
/// of generators (unary words included so purely vertical or horizontal
/// words are covered).
inline DirectedComplex product(const DirectedComplex& X,
                               const DirectedComplex& Y) {
  int ny = Y.n_vertices();
  auto with_unaries = [](const DirectedComplex& Z) {
    std::vector<Word> ws = Z.generators();
    for (int v = 0; v < Z.n_vertices(); ++v) ws.push_back({v});
    return ws;
  };
  std::set<Word> gens;
  Word acc;
  for (const Word& u : with_unaries(X))
    for (const Word& v : with_unaries(Y))
      detail::staircases(u, v, ny, 0, 0, acc, gens);
  return DirectedComplex(X.n_vertices() * ny,
                         std::vector<Word>(gens.begin(), gens.end()));
}

}  // namespace cht
