#pragma once

#include <map>
#include <vector>

#include "coxsort/element.hpp"
#include "coxsort/errors.hpp"
#include "coxsort/sorting.hpp"

// Independent reference computations the fast implementations are checked
// against. These favor obviousness over speed.
namespace coxsort::testing {

// Minimal number of reflections multiplying to w, by breadth-first search
// over the whole group.
inline int bfs_absolute_length(const Element& w) {
  const CoxeterSystem& sys = w.system();
  std::vector<Element> refls;
  for (int t = 0; t < sys.num_positive_roots(); ++t)
    refls.push_back(Element::reflection(sys, t));

  std::map<Element, int> dist;
  std::vector<Element> frontier{Element::identity(sys)};
  dist.emplace(frontier.front(), 0);
  int d = 0;
  while (!frontier.empty()) {
    for (const Element& x : frontier)
      if (x == w) return d;
    std::vector<Element> next;
    for (const Element& x : frontier)
      for (const Element& t : refls) {
        Element y = x * t;
        if (dist.emplace(y, d + 1).second) next.push_back(y);
      }
    frontier = std::move(next);
    ++d;
  }
  throw Error("element unreachable by reflections");
}

inline void all_reduced_words(const Element& w, ReducedWord& prefix,
                              std::vector<ReducedWord>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int s = 0; s < w.system().rank(); ++s) {
    if (!w.left_descent(s)) continue;
    prefix.push_back(s);
    all_reduced_words(w.simple_times(s), prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<ReducedWord> all_reduced_words(const Element& w) {
  std::vector<ReducedWord> out;
  ReducedWord prefix;
  all_reduced_words(w, prefix, out);
  return out;
}

struct SubwordOracle {
  std::vector<int> letters;
  std::vector<int> positions;  // positions in c^infinity
};

// Leftmost embedding of a fixed word as a subword of c^infinity.
inline std::vector<int> greedy_embedding(const ReducedWord& word,
                                         const CoxeterElement& c) {
  int n = c.size();
  std::vector<int> positions;
  int j = 0;
  for (int s : word) {
    while (c.word()[j % n] != s) ++j;
    positions.push_back(j++);
  }
  return positions;
}

// Lexicographically first reduced subword of c^infinity with product w,
// found by embedding every reduced word of w and taking the minimum.
inline SubwordOracle lex_first_subword(const Element& w,
                                       const CoxeterElement& c) {
  SubwordOracle best;
  bool have = false;
  for (const ReducedWord& word : all_reduced_words(w)) {
    std::vector<int> positions = greedy_embedding(word, c);
    if (!have || positions < best.positions) {
      best = {word, positions};
      have = true;
    }
  }
  if (!have && w.is_identity()) return {};
  if (!have) throw Error("element has no reduced word");
  return best;
}

}  // namespace coxsort::testing
