#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "cht/presentation.hpp"
#include "cht/trunc.hpp"
#include "cht/util.hpp"

namespace cht {

/// Saturation verdict for one hom set at a length bound L. no_new: every
/// word of length L+1 is already equivalent to one of length at most L.
/// no_merge: allowing intermediates of length L+1 merges no classes of
/// shorter words. Both together mean the bound is self-certifying: raising
/// it by one changes nothing.
struct HomSaturation {
  bool no_new = true;
  bool no_merge = true;
  bool ok() const { return no_new && no_merge; }
};

/// Equivalence classes of typed words of bounded length under the relation
/// rewrites of a presentation (plus inverse cancellation for groupoids).
/// All rewriting stays within length max_len + 1; see HomSaturation for the
/// resulting guarantee.
class WordEngine {
 public:
  WordEngine(const Presentation& p, int max_len,
             std::size_t word_budget = 4'000'000)
      : p_(&p), max_len_(max_len) {
    require(max_len >= 0, "negative length bound");
    rels_ = p.relations;
    if (p.kind == PresKind::kGroupoid) {
      for (int k = 0; k < (int)p.gens.size(); ++k) {
        rels_.push_back(
            {p.gens[k].src, p.gens[k].src, {k, inv_letter(k)}, {}});
        rels_.push_back(
            {p.gens[k].dst, p.gens[k].dst, {inv_letter(k), k}, {}});
      }
      close_relations();
    }
    enumerate(word_budget);
    uf_hi_ = UnionFind(words_.size());
    uf_lo_ = UnionFind(words_.size());
    rewrite();
  }

  int max_len() const { return max_len_; }
  const Presentation& presentation() const { return *p_; }

  int word_index(int src, const std::vector<int>& letters) const {
    std::vector<int> enc{src};
    enc.insert(enc.end(), letters.begin(), letters.end());
    auto it = index_.find(enc);
    return it == index_.end() ? -1 : it->second;
  }

  /// Classes of words of length <= max_len from x to y.
  int hom_count(int x, int y) {
    std::vector<int> roots;
    for (int i : hom_words(x, y))
      if (len(i) <= max_len_) roots.push_back((int)uf_hi_.find(i));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return (int)roots.size();
  }

  /// Shortest, lexicographically least representative of each class of
  /// words of length <= max_len from x to y, in (length, lex) order.
  std::vector<std::vector<int>> class_reps(int x, int y) {
    std::map<int, std::vector<int>> best;
    for (int i : hom_words(x, y)) {
      if (len(i) > max_len_) continue;
      std::vector<int> w(words_[i].begin() + 1, words_[i].end());
      auto [it, fresh] = best.try_emplace((int)uf_hi_.find(i), w);
      if (!fresh && (w.size() < it->second.size() ||
                     (w.size() == it->second.size() && w < it->second)))
        it->second = w;
    }
    std::vector<std::vector<int>> reps;
    for (auto& [root, w] : best) reps.push_back(std::move(w));
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return reps;
  }

  HomSaturation hom_saturation(int x, int y) {
    HomSaturation out;
    std::map<int, int> shortest;  // hi root -> shortest member length
    std::map<int, int> lo_of_hi;  // hi root -> lo root, words <= L only
    for (int i : hom_words(x, y)) {
      int hi = (int)uf_hi_.find(i);
      auto [it, fresh] = shortest.try_emplace(hi, len(i));
      if (!fresh) it->second = std::min(it->second, len(i));
      if (len(i) <= max_len_) {
        int lo = (int)uf_lo_.find(i);
        auto [jt, lo_fresh] = lo_of_hi.try_emplace(hi, lo);
        if (!lo_fresh && jt->second != lo) out.no_merge = false;
      }
    }
    for (auto [root, l] : shortest)
      if (l > max_len_) out.no_new = false;
    return out;
  }

  bool saturated(int x, int y) { return hom_saturation(x, y).ok(); }

  bool fully_saturated() {
    for (int x = 0; x < p_->n_objects; ++x)
      for (int y = 0; y < p_->n_objects; ++y)
        if (!saturated(x, y)) return false;
    return true;
  }

  /// Class id (hi root) of a word, or -1 when it is longer than max_len + 1.
  int class_of(int src, const std::vector<int>& letters) {
    int i = word_index(src, letters);
    return i < 0 ? -1 : (int)uf_hi_.find(i);
  }

 private:
  int len(int i) const { return (int)words_[i].size() - 1; }

  /// Groupoid consequences of each relation obtained by inverting it or by
  /// moving a boundary letter across the equality. This makes every derived
  /// one-step rewrite available directly, so no merge ever needs headroom
  /// beyond what the rewrite itself uses. Moving a letter keeps the total
  /// length of the two sides fixed, hence the closure is finite.
  void close_relations() {
    std::set<std::tuple<int, int, std::vector<int>, std::vector<int>>> seen;
    std::deque<Relation> queue;
    std::vector<Relation> out;
    auto push = [&](Relation r) {
      if (seen.insert({r.src, r.dst, r.lhs, r.rhs}).second) {
        out.push_back(r);
        queue.push_back(std::move(r));
      }
    };
    for (const Relation& r : rels_) push(r);
    while (!queue.empty()) {
      Relation r = queue.front();
      queue.pop_front();
      push({r.src, r.dst, r.rhs, r.lhs});
      push({r.dst, r.src, inverse_word(r.lhs), inverse_word(r.rhs)});
      if (!r.lhs.empty()) {
        int h = r.lhs.front();
        std::vector<int> u(r.lhs.begin() + 1, r.lhs.end());
        std::vector<int> v{inv_letter(h)};
        v.insert(v.end(), r.rhs.begin(), r.rhs.end());
        push({p_->letter_dst(h), r.dst, std::move(u), std::move(v)});
        int t = r.lhs.back();
        std::vector<int> u2(r.lhs.begin(), r.lhs.end() - 1);
        std::vector<int> v2 = r.rhs;
        v2.push_back(inv_letter(t));
        push({r.src, p_->letter_src(t), std::move(u2), std::move(v2)});
      }
    }
    rels_ = std::move(out);
  }

  std::vector<int> hom_words(int x, int y) const {
    std::vector<int> out;
    for (int i = 0; i < (int)words_.size(); ++i)
      if (words_[i][0] == x && dst_[i] == y) out.push_back(i);
    return out;
  }

  void enumerate(std::size_t budget) {
    std::vector<int> letters;
    for (int k = 0; k < (int)p_->gens.size(); ++k) {
      letters.push_back(k);
      if (p_->kind == PresKind::kGroupoid) letters.push_back(inv_letter(k));
    }
    for (int v = 0; v < p_->n_objects; ++v) push_word({v}, v);
    std::size_t head = 0;
    while (head < words_.size()) {
      std::vector<int> w = words_[head];
      int d = dst_[head];
      ++head;
      if ((int)w.size() - 1 == max_len_ + 1) continue;
      for (int l : letters) {
        if (p_->letter_src(l) != d) continue;
        w.push_back(l);
        push_word(w, p_->letter_dst(l));
        w.pop_back();
        if (words_.size() > budget) throw budget_error("word budget exceeded");
      }
    }
  }

  void push_word(const std::vector<int>& enc, int dst) {
    if (index_.emplace(enc, (int)words_.size()).second) {
      words_.push_back(enc);
      dst_.push_back(dst);
    }
  }

  void rewrite() {
    for (int i = 0; i < (int)words_.size(); ++i) {
      std::vector<int> w(words_[i].begin() + 1, words_[i].end());
      int src = words_[i][0];
      // vertices along the word
      std::vector<int> at(w.size() + 1);
      at[0] = src;
      for (std::size_t q = 0; q < w.size(); ++q)
        at[q + 1] = p_->letter_dst(w[q]);
      for (const Relation& r : rels_) {
        apply_side(i, src, w, at, r.lhs, r.rhs, r.src);
        apply_side(i, src, w, at, r.rhs, r.lhs, r.src);
      }
    }
  }

  void apply_side(int i, int src, const std::vector<int>& w,
                  const std::vector<int>& at, const std::vector<int>& from,
                  const std::vector<int>& to, int rel_src) {
    int n = (int)w.size();
    int f = (int)from.size();
    int out_len = n - f + (int)to.size();
    if (out_len > max_len_ + 1) return;
    for (int pos = 0; pos + f <= n; ++pos) {
      if (at[pos] != rel_src) continue;
      if (!std::equal(from.begin(), from.end(), w.begin() + pos)) continue;
      std::vector<int> enc{src};
      enc.insert(enc.end(), w.begin(), w.begin() + pos);
      enc.insert(enc.end(), to.begin(), to.end());
      enc.insert(enc.end(), w.begin() + pos + f, w.end());
      auto it = index_.find(enc);
      require(it != index_.end(), "rewrite left the enumerated set");
      uf_hi_.unite(i, it->second);
      if (n <= max_len_ && out_len <= max_len_) uf_lo_.unite(i, it->second);
    }
  }

  const Presentation* p_;
  int max_len_;
  std::vector<Relation> rels_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> words_;
  std::vector<int> dst_;
  UnionFind uf_hi_, uf_lo_;
};

/// Number of words of length <= max_len from x to y in the free category or
/// free groupoid on the generators (the presentation must have no
/// relations): category words count as they are, groupoid classes are
/// counted through their unique freely reduced representatives.
inline long long free_word_count(const Presentation& p, int x, int y,
                                 int max_len) {
  require(p.relations.empty(), "presentation has relations");
  std::vector<int> letters;
  for (int k = 0; k < (int)p.gens.size(); ++k) {
    letters.push_back(k);
    if (p.kind == PresKind::kGroupoid) letters.push_back(inv_letter(k));
  }
  // ways[v][l]: reduced words of the current length ending at v whose last
  // letter is l (index in letters); the empty word is handled separately
  std::map<std::pair<int, int>, long long> ways;
  long long total = x == y ? 1 : 0;
  for (int li = 0; li < (int)letters.size(); ++li)
    if (p.letter_src(letters[li]) == x)
      ways[{p.letter_dst(letters[li]), li}] += 1;
  for (int n = 1; n <= max_len; ++n) {
    for (auto& [key, cnt] : ways)
      if (key.first == y) total += cnt;
    std::map<std::pair<int, int>, long long> next;
    for (auto& [key, cnt] : ways) {
      auto [v, li] = key;
      for (int mi = 0; mi < (int)letters.size(); ++mi) {
        if (p.letter_src(letters[mi]) != v) continue;
        if (p.kind == PresKind::kGroupoid &&
            letters[mi] == inv_letter(letters[li]))
          continue;
        next[{p.letter_dst(letters[mi]), mi}] += cnt;
      }
    }
    ways = std::move(next);
  }
  return total;
}

/// Loop classes at an object with the partial composition table. Entries
/// whose product cannot be identified within the length bound are -1.
struct PiMonoid {
  std::vector<std::vector<int>> reps;
  std::vector<std::vector<int>> table;
  bool saturated = false;
};

inline PiMonoid pi_monoid(WordEngine& eng, int object) {
  PiMonoid out;
  out.reps = eng.class_reps(object, object);
  out.saturated = eng.saturated(object, object);
  std::map<int, int> root_index;
  for (int i = 0; i < (int)out.reps.size(); ++i)
    root_index[eng.class_of(object, out.reps[i])] = i;
  int n = (int)out.reps.size();
  out.table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> prod = out.reps[i];
      prod.insert(prod.end(), out.reps[j].begin(), out.reps[j].end());
      if ((int)prod.size() > eng.max_len() + 1) continue;
      int c = eng.class_of(object, prod);
      auto it = root_index.find(c);
      if (it != root_index.end()) out.table[i][j] = it->second;
    }
  return out;
}

/// Independent class count for chains of nondegenerate edges, working
/// directly from the triangle data of a truncated set. Moves: an adjacent
/// pair collapses to a third edge of a triangle (or vanishes when that edge
/// is degenerate), and conversely. Everything stays within length
/// max_len + 1.
struct BruteClasses {
  int count = 0;
  HomSaturation sat;
};

namespace detail {

template <typename TSet>
BruteClasses brute_classes_impl(const TSet& x, int from, int to, int max_len,
                                std::size_t budget) {
  require(from >= 0 && from < x.n_vertices() && to >= 0 &&
              to < x.n_vertices(),
          "vertex out of range");
  require(max_len >= 0, "negative length bound");
  int m = (int)x.edges().size();
  std::vector<std::vector<int>> out_edges(x.n_vertices());
  for (int e = 0; e < m; ++e) out_edges[x.src(e)].push_back(e);

  // chains from `from` of length <= max_len + 1, any endpoint; only those
  // ending at `to` are counted, but moves never change endpoints anyway
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> chains;
  std::vector<int> ends;
  auto push = [&](const std::vector<int>& c, int end) {
    if (index.emplace(c, (int)chains.size()).second) {
      chains.push_back(c);
      ends.push_back(end);
      if (chains.size() > budget) throw budget_error("chain budget exceeded");
    }
  };
  push({}, from);
  std::size_t head = 0;
  while (head < chains.size()) {
    std::vector<int> c = chains[head];
    int end = ends[head];
    ++head;
    if ((int)c.size() == max_len + 1) continue;
    for (int e : out_edges[end]) {
      c.push_back(e);
      push(c, x.dst(e));
      c.pop_back();
    }
  }

  UnionFind uf_hi(chains.size()), uf_lo(chains.size());
  auto unite = [&](int a, const std::vector<int>& cb, int na, int nb) {
    auto it = index.find(cb);
    require(it != index.end(), "move left the enumerated set");
    uf_hi.unite(a, it->second);
    if (na <= max_len && nb <= max_len) uf_lo.unite(a, it->second);
  };
  for (int i = 0; i < (int)chains.size(); ++i) {
    const std::vector<int>& c = chains[i];
    int n = (int)c.size();
    // vertices along the chain
    std::vector<int> at(n + 1);
    at[0] = from;
    for (int q = 0; q < n; ++q) at[q + 1] = x.dst(c[q]);
    // pair -> single or pair -> nothing
    for (int q = 0; q + 1 < n; ++q) {
      int a = c[q], b = c[q + 1];
      std::vector<int> rep(c.begin(), c.begin() + q);
      if (at[q] == at[q + 2] &&
          x.is_triangle({a, b, deg_edge(at[q])})) {
        std::vector<int> shorter = rep;
        shorter.insert(shorter.end(), c.begin() + q + 2, c.end());
        unite(i, shorter, n, n - 2);
      }
      for (int e : out_edges[at[q]]) {
        if (x.dst(e) != at[q + 2] || !x.is_triangle({a, b, e})) continue;
        std::vector<int> single = rep;
        single.push_back(e);
        single.insert(single.end(), c.begin() + q + 2, c.end());
        unite(i, single, n, n - 1);
      }
    }
    // single -> pair
    if (n + 1 <= max_len + 1)
      for (int q = 0; q < n; ++q)
        for (int a : out_edges[at[q]])
          for (int b : out_edges[x.dst(a)]) {
            if (x.dst(b) != at[q + 1] || !x.is_triangle({a, b, c[q]}))
              continue;
            std::vector<int> longer(c.begin(), c.begin() + q);
            longer.push_back(a);
            longer.push_back(b);
            longer.insert(longer.end(), c.begin() + q + 1, c.end());
            unite(i, longer, n, n + 1);
          }
    // single -> single through a triangle with a degenerate side
    for (int q = 0; q < n; ++q)
      for (int e : out_edges[at[q]]) {
        if (e == c[q] || x.dst(e) != at[q + 1]) continue;
        if (x.is_triangle({c[q], deg_edge(at[q + 1]), e}) ||
            x.is_triangle({deg_edge(at[q]), c[q], e})) {
          std::vector<int> other = c;
          other[q] = e;
          unite(i, other, n, n);
        }
      }
    // a loop declared equal to the identity can appear anywhere
    if (n + 1 <= max_len + 1)
      for (int q = 0; q <= n; ++q)
        for (int e : out_edges[at[q]]) {
          if (x.dst(e) != at[q]) continue;
          if (!x.is_triangle({deg_edge(at[q]), deg_edge(at[q]), e})) continue;
          std::vector<int> longer(c.begin(), c.begin() + q);
          longer.push_back(e);
          longer.insert(longer.end(), c.begin() + q, c.end());
          unite(i, longer, n, n + 1);
        }
    // nothing -> pair
    if (n + 2 <= max_len + 1)
      for (int q = 0; q <= n; ++q)
        for (int a : out_edges[at[q]])
          for (int b : out_edges[x.dst(a)]) {
            if (x.dst(b) != at[q] || !x.is_triangle({a, b, deg_edge(at[q])}))
              continue;
            std::vector<int> longer(c.begin(), c.begin() + q);
            longer.push_back(a);
            longer.push_back(b);
            longer.insert(longer.end(), c.begin() + q, c.end());
            unite(i, longer, n, n + 2);
          }
  }

  BruteClasses out;
  std::map<int, int> shortest;
  std::map<int, int> lo_of_hi;
  std::vector<int> roots;
  for (int i = 0; i < (int)chains.size(); ++i) {
    if (ends[i] != to) continue;
    int n = (int)chains[i].size();
    int hi = (int)uf_hi.find(i);
    auto [it, fresh] = shortest.try_emplace(hi, n);
    if (!fresh) it->second = std::min(it->second, n);
    if (n <= max_len) {
      roots.push_back(hi);
      int lo = (int)uf_lo.find(i);
      auto [jt, lo_fresh] = lo_of_hi.try_emplace(hi, lo);
      if (!lo_fresh && jt->second != lo) out.sat.no_merge = false;
    }
  }
  for (auto [root, l] : shortest)
    if (l > max_len) out.sat.no_new = false;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  out.count = (int)roots.size();
  return out;
}

}  // namespace detail

inline BruteClasses brute_force_classes(const TruncSymSet& x, int from,
                                        int to, int max_len,
                                        std::size_t budget = 4'000'000) {
  return detail::brute_classes_impl(x, from, to, max_len, budget);
}

inline BruteClasses brute_force_classes(const TruncDirSet& x, int from,
                                        int to, int max_len,
                                        std::size_t budget = 4'000'000) {
  return detail::brute_classes_impl(x, from, to, max_len, budget);
}

}  // namespace cht
