#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "coxsort/element.hpp"

namespace coxsort {

// A Coxeter element of the standard parabolic W_J, J = support of the word.
// The identity of a Coxeter element is its diagram orientation, not the
// particular reduced word.
class CoxeterElement {
 public:
  CoxeterElement(const CoxeterSystem& sys, ReducedWord word);

  const CoxeterSystem& system() const { return *sys_; }
  const ReducedWord& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<bool>& support() const { return support_; }
  Element element() const;

  // Position of s in the word; -1 when s is outside the support.
  int position(int s) const { return pos_[s]; }
  // Edge s -> t of the induced diagram orientation.
  bool edge(int s, int t) const;

  std::vector<int> initial_letters() const;
  std::vector<int> final_letters() const;
  bool is_initial(int s) const;
  bool is_final(int s) const;

  CoxeterElement conjugate(int s) const;  // scs, s must be initial
  CoxeterElement restrict(const std::vector<bool>& J) const;
  CoxeterElement inverse() const;  // reversed word

  // Same support and same orientation.
  bool same_orientation(const CoxeterElement& other) const;
  // Deterministic key encoding support and orientation; memoization handle.
  std::uint64_t orientation_key() const;

 private:
  const CoxeterSystem* sys_;
  ReducedWord word_;
  std::vector<bool> support_;
  std::vector<int> pos_;
};

struct SortingWord {
  ReducedWord letters;
  std::vector<int> positions;  // positions in c^infinity
  std::vector<int> block_of;   // block index per letter

  int num_blocks() const;
  std::set<int> block(int b) const;
};

// Greedy scan of c^infinity, taking every available left descent.
SortingWord sorting_word(const Element& w, const CoxeterElement& c);

bool is_sortable(const Element& w, const CoxeterElement& c);

// Depth-first search-tree traversal; children ordered by appended letter.
// Returns each c-sortable element exactly once.
std::vector<Element> enumerate_sortables(const CoxeterElement& c);
void for_each_sortable(const CoxeterElement& c,
                       const std::function<void(const Element&)>& fn);

// Shortest sequence of initial-letter conjugations carrying c to the
// bipartite Coxeter element for the canonical 2-coloring of the diagram.
std::vector<int> bipartite_path(const CoxeterElement& c);

// Canonical 2-coloring: breadth-first from the lowest simple index per
// diagram component. color 0 letters form c_-.
std::vector<int> diagram_coloring(const CoxeterSystem& sys,
                                  const std::vector<bool>& support);

}  // namespace coxsort
