#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "cht/complex.hpp"
#include "cht/trunc.hpp"
#include "cht/util.hpp"

namespace cht {

/// Letters of presentation words: k >= 0 is generator k, ~k its inverse.
inline int inv_letter(int l) { return ~l; }
inline int letter_gen(int l) { return l >= 0 ? l : ~l; }
inline bool letter_forward(int l) { return l >= 0; }

inline std::vector<int> inverse_word(const std::vector<int>& w) {
  std::vector<int> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(inv_letter(*it));
  return out;
}

enum class PresKind { kGroupoid, kCategory };

struct ArrowGen {
  int src = 0, dst = 0;
};

/// A pair of parallel words declared equal. Both may be empty, so the
/// endpoints are carried explicitly.
struct Relation {
  int src = 0, dst = 0;
  std::vector<int> lhs, rhs;
};

/// Presentation of a category or groupoid by arrow generators between
/// numbered objects plus word relations. Category words never use inverse
/// letters.
struct Presentation {
  PresKind kind = PresKind::kGroupoid;
  int n_objects = 0;
  std::vector<ArrowGen> gens;
  std::vector<Relation> relations;

  int letter_src(int l) const {
    return l >= 0 ? gens.at(l).src : gens.at(~l).dst;
  }
  int letter_dst(int l) const {
    return l >= 0 ? gens.at(l).dst : gens.at(~l).src;
  }

  bool letter_ok(int l) const {
    int g = letter_gen(l);
    if (g < 0 || g >= (int)gens.size()) return false;
    return kind == PresKind::kGroupoid || l >= 0;
  }

  /// Endpoint check for a typed word starting at src.
  bool word_typed(int src, const std::vector<int>& w, int* dst_out) const {
    int cur = src;
    for (int l : w) {
      if (!letter_ok(l) || letter_src(l) != cur) return false;
      cur = letter_dst(l);
    }
    if (dst_out) *dst_out = cur;
    return true;
  }

  void validate() const {
    for (const ArrowGen& g : gens)
      require(g.src >= 0 && g.src < n_objects && g.dst >= 0 &&
                  g.dst < n_objects,
              "generator endpoint out of range");
    for (const Relation& r : relations) {
      int d = -1;
      require(word_typed(r.src, r.lhs, &d) && d == r.dst,
              "relation left side not typed");
      require(word_typed(r.src, r.rhs, &d) && d == r.dst,
              "relation right side not typed");
    }
  }
};

/// Group presentation: numbered generators and relator words equal to the
/// identity.
struct GroupPresentation {
  int n_gens = 0;
  std::vector<std::vector<int>> relators;
};

inline std::vector<int> free_reduce(std::vector<int> w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == inv_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

struct Pi0 {
  std::vector<int> labels;
  int count = 0;
};

namespace detail {

inline Pi0 pi0_from(int n, const std::vector<std::pair<int, int>>& links) {
  UnionFind uf(n);
  for (auto [a, b] : links) uf.unite(a, b);
  Pi0 out;
  out.labels = uf.labels();
  out.count = (int)uf.class_count();
  return out;
}

}  // namespace detail

inline Pi0 pi0(const Complex& x) {
  std::vector<std::pair<int, int>> links;
  for (const Part& f : x.facets())
    for (std::size_t i = 1; i < f.size(); ++i) links.push_back({f[0], f[i]});
  return detail::pi0_from(x.n_vertices(), links);
}

inline Pi0 pi0(const DirectedComplex& x) {
  std::vector<std::pair<int, int>> links;
  for (const Word& g : x.generators())
    for (std::size_t i = 1; i < g.size(); ++i) links.push_back({g[0], g[i]});
  return detail::pi0_from(x.n_vertices(), links);
}

inline Pi0 pi0(const TruncSymSet& x) {
  std::vector<std::pair<int, int>> links;
  for (const auto& e : x.edges()) links.push_back({e.src, e.dst});
  return detail::pi0_from(x.n_vertices(), links);
}

inline Pi0 pi0(const TruncDirSet& x) {
  std::vector<std::pair<int, int>> links;
  for (const auto& e : x.edges()) links.push_back({e.src, e.dst});
  return detail::pi0_from(x.n_vertices(), links);
}

/// Presentation extracted from a truncated set, together with the word each
/// edge maps to (one letter, or its inverse for the partner of a reversal
/// pair; degenerate edges map to the empty word).
struct EdgePresentation {
  Presentation pres;
  std::vector<std::vector<int>> edge_word;  // per nondegenerate edge id
  std::vector<int> gen_edge;                // generator -> chosen edge id

  std::vector<int> word_of(EdgeRef r) const {
    if (is_deg(r)) return {};
    return edge_word.at(r);
  }
};

/// Edge path groupoid: one generator per reversal pair, oriented by the
/// lexicographically least (src, dst, id); a self-reversed loop contributes
/// an involutive generator. Each triangle gives a relation "first then
/// second equals third".
inline EdgePresentation edge_path_groupoid(const TruncSymSet& x) {
  EdgePresentation out;
  out.pres.kind = PresKind::kGroupoid;
  out.pres.n_objects = x.n_vertices();
  int m = (int)x.edges().size();
  out.edge_word.resize(m);
  for (int e = 0; e < m; ++e) {
    int r = x.rev(e);
    if (e > r) continue;
    int rep = e;
    if (std::tuple{x.src(r), x.dst(r), r} < std::tuple{x.src(e), x.dst(e), e})
      rep = r;
    int k = (int)out.pres.gens.size();
    out.pres.gens.push_back({x.src(rep), x.dst(rep)});
    out.gen_edge.push_back(rep);
    out.edge_word[rep] = {k};
    if (r != e) {
      out.edge_word[rep == e ? r : e] = {inv_letter(k)};
    } else {
      // self-reversed loop: the generator squares to the identity
      out.pres.relations.push_back(
          {x.src(e), x.src(e), {k, k}, {}});
    }
  }
  for (const Triangle& t : x.triangles()) {
    Relation r;
    r.src = x.src(t[0]);
    r.dst = x.dst(t[1]);
    r.lhs = out.word_of(t[0]);
    for (int l : out.word_of(t[1])) r.lhs.push_back(l);
    r.rhs = out.word_of(t[2]);
    out.pres.relations.push_back(std::move(r));
  }
  out.pres.validate();
  return out;
}

/// Fundamental category of a directed truncated set: every edge generates,
/// nothing is invertible, triangles give the relations.
inline EdgePresentation fundamental_category(const TruncDirSet& x) {
  EdgePresentation out;
  out.pres.kind = PresKind::kCategory;
  out.pres.n_objects = x.n_vertices();
  int m = (int)x.edges().size();
  out.edge_word.resize(m);
  for (int e = 0; e < m; ++e) {
    out.pres.gens.push_back({x.src(e), x.dst(e)});
    out.gen_edge.push_back(e);
    out.edge_word[e] = {e};
  }
  for (const Triangle& t : x.triangles()) {
    Relation r;
    r.src = x.src(t[0]);
    r.dst = x.dst(t[1]);
    r.lhs = out.word_of(t[0]);
    for (int l : out.word_of(t[1])) r.lhs.push_back(l);
    r.rhs = out.word_of(t[2]);
    out.pres.relations.push_back(std::move(r));
  }
  out.pres.validate();
  return out;
}

/// Group of loops at the base object: spanning tree of the base component,
/// one group generator per non-tree arrow, relations carried over with the
/// tree letters deleted.
inline GroupPresentation vertex_group(const Presentation& p, int base) {
  require(p.kind == PresKind::kGroupoid, "vertex group needs a groupoid");
  require(base >= 0 && base < p.n_objects, "base object out of range");
  // incidence of generators on objects
  std::vector<std::vector<int>> touching(p.n_objects);
  for (int k = 0; k < (int)p.gens.size(); ++k) {
    touching[p.gens[k].src].push_back(k);
    touching[p.gens[k].dst].push_back(k);
  }
  std::vector<char> seen(p.n_objects, 0);
  std::vector<char> in_tree(p.gens.size(), 0);
  std::deque<int> queue{base};
  seen[base] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int k : touching[u]) {
      int w = p.gens[k].src == u ? p.gens[k].dst : p.gens[k].src;
      if (seen[w]) continue;
      seen[w] = 1;
      in_tree[k] = 1;
      queue.push_back(w);
    }
  }
  GroupPresentation out;
  std::vector<int> gen_index(p.gens.size(), -1);
  for (int k = 0; k < (int)p.gens.size(); ++k)
    if (seen[p.gens[k].src] && !in_tree[k]) gen_index[k] = out.n_gens++;
  auto image = [&](const std::vector<int>& w) {
    std::vector<int> img;
    for (int l : w) {
      int k = letter_gen(l);
      if (in_tree[k]) continue;
      img.push_back(l >= 0 ? gen_index[k] : inv_letter(gen_index[k]));
    }
    return img;
  };
  for (const Relation& r : p.relations) {
    if (!seen[r.src]) continue;
    std::vector<int> w = r.lhs;
    for (int l : inverse_word(r.rhs)) w.push_back(l);
    std::vector<int> rel = free_reduce(image(w));
    if (!rel.empty()) out.relators.push_back(std::move(rel));
  }
  return out;
}

}  // namespace cht
