#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "cht/presentation.hpp"

namespace cht {

struct TietzeOptions {
  /// Defining relators longer than this are never used for elimination,
  /// which bounds the growth of the surviving relators.
  int max_substitution_len = 16;
  int max_rounds = 1000;
};

namespace detail {

inline std::vector<int> cyclic_reduce(std::vector<int> w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front() == inv_letter(w.back())) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

/// Least rotation over the relator and its inverse; relators that name the
/// same cyclic word up to inversion collapse to one representative.
inline std::vector<int> cyclic_canon(const std::vector<int>& w) {
  std::vector<int> best;
  bool first = true;
  auto consider = [&](const std::vector<int>& u) {
    for (std::size_t s = 0; s < u.size(); ++s) {
      std::vector<int> rot(u.begin() + s, u.end());
      rot.insert(rot.end(), u.begin(), u.begin() + s);
      if (first || rot < best) {
        best = std::move(rot);
        first = false;
      }
    }
  };
  consider(w);
  consider(inverse_word(w));
  return best;
}

/// Replace every occurrence of the generator g by the word w (g does not
/// occur in w), then renumber g away.
inline void eliminate_generator(GroupPresentation& p, int g,
                                const std::vector<int>& w) {
  std::vector<std::vector<int>> next;
  for (const std::vector<int>& r : p.relators) {
    std::vector<int> out;
    for (int l : r) {
      if (letter_gen(l) != g) {
        out.push_back(l);
      } else if (l >= 0) {
        out.insert(out.end(), w.begin(), w.end());
      } else {
        std::vector<int> iw = inverse_word(w);
        out.insert(out.end(), iw.begin(), iw.end());
      }
    }
    next.push_back(free_reduce(std::move(out)));
  }
  for (std::vector<int>& r : next)
    for (int& l : r) {
      int k = letter_gen(l);
      if (k > g) l = l >= 0 ? l - 1 : l + 1;
    }
  p.relators = std::move(next);
  p.n_gens -= 1;
}

}  // namespace detail

/// Iteratively shrinks a group presentation: relators are freely and
/// cyclically reduced and deduplicated, length-one relators kill their
/// generator, and a generator occurring once in a short relator is solved
/// for and eliminated. The group is unchanged up to isomorphism.
inline GroupPresentation tietze_simplify(GroupPresentation p,
                                         TietzeOptions opt = {}) {
  for (int round = 0; round < opt.max_rounds; ++round) {
    bool changed = false;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> rels;
    for (const std::vector<int>& r : p.relators) {
      std::vector<int> w = detail::cyclic_reduce(r);
      if (w.empty()) {
        if (!r.empty()) changed = true;
        continue;
      }
      if (w.size() != r.size()) changed = true;
      if (seen.insert(detail::cyclic_canon(w)).second)
        rels.push_back(std::move(w));
      else
        changed = true;
    }
    p.relators = std::move(rels);

    // pick the shortest relator usable to eliminate a generator: one of its
    // letters must be the only occurrence of that generator inside it
    int best_rel = -1, best_pos = -1;
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
      const std::vector<int>& r = p.relators[ri];
      if ((int)r.size() > opt.max_substitution_len) continue;
      if (best_rel >= 0 && r.size() >= p.relators[best_rel].size()) continue;
      for (std::size_t i = 0; i < r.size(); ++i) {
        int g = letter_gen(r[i]);
        bool unique = true;
        for (std::size_t j = 0; j < r.size(); ++j)
          if (j != i && letter_gen(r[j]) == g) unique = false;
        if (unique) {
          best_rel = (int)ri;
          best_pos = (int)i;
          break;
        }
      }
    }
    if (best_rel >= 0) {
      std::vector<int> r = p.relators[best_rel];
      p.relators.erase(p.relators.begin() + best_rel);
      // rotate the chosen letter to the front, then solve for it
      std::rotate(r.begin(), r.begin() + best_pos, r.end());
      int l = r[0];
      std::vector<int> rest(r.begin() + 1, r.end());
      std::vector<int> w =
          l >= 0 ? inverse_word(rest) : rest;
      detail::eliminate_generator(p, letter_gen(l), w);
      changed = true;
    }
    if (!changed) break;
  }
  return p;
}

}  // namespace cht
