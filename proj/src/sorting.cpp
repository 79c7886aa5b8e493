#include "coxsort/sorting.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

#include "coxsort/errors.hpp"

namespace coxsort {

CoxeterElement::CoxeterElement(const CoxeterSystem& sys, ReducedWord word)
    : sys_(&sys), word_(std::move(word)), support_(sys.rank(), false),
      pos_(sys.rank(), -1) {
  for (int i = 0; i < static_cast<int>(word_.size()); ++i) {
    int s = word_[i];
    if (s < 0 || s >= sys.rank() || support_[s])
      throw Error("Coxeter word must be a permutation of a subset of S");
    support_[s] = true;
    pos_[s] = i;
  }
}

Element CoxeterElement::element() const {
  return Element::from_word(*sys_, word_);
}

bool CoxeterElement::edge(int s, int t) const {
  return support_[s] && support_[t] && sys_->matrix().bond(s, t) &&
         pos_[s] < pos_[t];
}

bool CoxeterElement::is_initial(int s) const {
  if (!support_[s]) return false;
  for (int t = 0; t < sys_->rank(); ++t)
    if (edge(t, s)) return false;
  return true;
}

bool CoxeterElement::is_final(int s) const {
  if (!support_[s]) return false;
  for (int t = 0; t < sys_->rank(); ++t)
    if (edge(s, t)) return false;
  return true;
}

std::vector<int> CoxeterElement::initial_letters() const {
  std::vector<int> out;
  for (int s = 0; s < sys_->rank(); ++s)
    if (is_initial(s)) out.push_back(s);
  return out;
}

std::vector<int> CoxeterElement::final_letters() const {
  std::vector<int> out;
  for (int s = 0; s < sys_->rank(); ++s)
    if (is_final(s)) out.push_back(s);
  return out;
}

CoxeterElement CoxeterElement::conjugate(int s) const {
  if (!is_initial(s)) throw NotInitial("letter is not initial");
  ReducedWord w;
  for (int letter : word_)
    if (letter != s) w.push_back(letter);
  w.push_back(s);
  return CoxeterElement(*sys_, std::move(w));
}

CoxeterElement CoxeterElement::restrict(const std::vector<bool>& J) const {
  ReducedWord w;
  for (int letter : word_)
    if (J[letter]) w.push_back(letter);
  return CoxeterElement(*sys_, std::move(w));
}

CoxeterElement CoxeterElement::inverse() const {
  ReducedWord w(word_.rbegin(), word_.rend());
  return CoxeterElement(*sys_, std::move(w));
}

std::uint64_t CoxeterElement::orientation_key() const {
  std::uint64_t key = 0;
  int bit = 0;
  for (int s = 0; s < sys_->rank(); ++s) {
    if (support_[s]) key |= 1ull << bit;
    ++bit;
  }
  for (int s = 0; s < sys_->rank(); ++s) {
    for (int t = s + 1; t < sys_->rank(); ++t) {
      if (!sys_->matrix().bond(s, t)) continue;
      if (edge(s, t)) key |= 1ull << bit;
      ++bit;
      if (bit >= 63) throw Error("orientation key overflow");
    }
  }
  return key;
}

bool CoxeterElement::same_orientation(const CoxeterElement& other) const {
  return sys_ == other.sys_ && orientation_key() == other.orientation_key();
}

int SortingWord::num_blocks() const {
  return block_of.empty() ? 0 : block_of.back() + 1;
}

std::set<int> SortingWord::block(int b) const {
  std::set<int> out;
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (block_of[i] == b) out.insert(letters[i]);
  return out;
}

SortingWord sorting_word(const Element& w, const CoxeterElement& c) {
  SortingWord out;
  const ReducedWord& cword = c.word();
  int m = static_cast<int>(cword.size());
  if (m == 0) {
    if (!w.is_identity()) throw Error("sorting word of nonidentity w.r.t. empty c");
    return out;
  }
  Element u = w;
  int pos = 0;
  int taken_in_cycle = 0;
  while (!u.is_identity()) {
    int s = cword[pos % m];
    if (u.left_descent(s)) {
      out.letters.push_back(s);
      out.positions.push_back(pos);
      out.block_of.push_back(pos / m);
      u = u.simple_times(s);
      ++taken_in_cycle;
    }
    ++pos;
    if (pos % m == 0) {
      if (taken_in_cycle == 0)
        throw Error("element is not in the parabolic of the Coxeter word");
      taken_in_cycle = 0;
    }
  }
  return out;
}

bool is_sortable(const Element& w, const CoxeterElement& c) {
  SortingWord sw = sorting_word(w, c);
  int blocks = sw.num_blocks();
  for (int b = 0; b + 1 < blocks; ++b) {
    std::set<int> cur = sw.block(b);
    std::set<int> next = sw.block(b + 1);
    if (!std::includes(cur.begin(), cur.end(), next.begin(), next.end()))
      return false;
  }
  return true;
}

namespace {

void sortable_dfs(const CoxeterElement& c, const Element& v,
                  const SortingWord& vword,
                  const std::function<void(const Element&)>& fn) {
  fn(v);
  for (int s = 0; s < v.system().rank(); ++s) {
    if (!c.support()[s] || v.right_descent(s)) continue;
    Element w = v.times_simple(s);
    SortingWord wword = sorting_word(w, c);
    if (wword.letters.size() != vword.letters.size() + 1) continue;
    if (!std::equal(vword.letters.begin(), vword.letters.end(),
                    wword.letters.begin()))
      continue;
    if (wword.letters.back() != s) continue;
    if (!is_sortable(w, c)) continue;
    sortable_dfs(c, w, wword, fn);
  }
}

}  // namespace

void for_each_sortable(const CoxeterElement& c,
                       const std::function<void(const Element&)>& fn) {
  Element id = Element::identity(c.system());
  sortable_dfs(c, id, SortingWord{}, fn);
}

std::vector<Element> enumerate_sortables(const CoxeterElement& c) {
  std::vector<Element> out;
  for_each_sortable(c, [&](const Element& w) { out.push_back(w); });
  return out;
}

std::vector<int> diagram_coloring(const CoxeterSystem& sys,
                                  const std::vector<bool>& support) {
  std::vector<int> color(sys.rank(), -1);
  for (int start = 0; start < sys.rank(); ++start) {
    if (!support[start] || color[start] >= 0) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int s = q.front();
      q.pop();
      for (int t = 0; t < sys.rank(); ++t) {
        if (!support[t] || !sys.matrix().bond(s, t)) continue;
        if (color[t] < 0) {
          color[t] = 1 - color[s];
          q.push(t);
        }
      }
    }
  }
  return color;
}

std::vector<int> bipartite_path(const CoxeterElement& c) {
  const CoxeterSystem& sys = c.system();
  std::vector<int> color = diagram_coloring(sys, c.support());
  // Target orientation: every bond goes color 0 -> color 1 (c = c_- c_+).
  ReducedWord target_word;
  for (int s = 0; s < sys.rank(); ++s)
    if (c.support()[s] && color[s] == 0) target_word.push_back(s);
  for (int s = 0; s < sys.rank(); ++s)
    if (c.support()[s] && color[s] == 1) target_word.push_back(s);
  CoxeterElement target(sys, target_word);
  std::uint64_t goal = target.orientation_key();

  struct Node {
    CoxeterElement c;
    std::vector<int> path;
  };
  std::map<std::uint64_t, bool> visited;
  std::deque<Node> frontier;
  frontier.push_back({c, {}});
  visited[c.orientation_key()] = true;
  while (!frontier.empty()) {
    Node node = std::move(frontier.front());
    frontier.pop_front();
    if (node.c.orientation_key() == goal) return node.path;
    for (int s : node.c.initial_letters()) {
      CoxeterElement next = node.c.conjugate(s);
      std::uint64_t key = next.orientation_key();
      if (visited.emplace(key, true).second) {
        auto path = node.path;
        path.push_back(s);
        frontier.push_back({std::move(next), std::move(path)});
      }
    }
  }
  throw SearchExhausted("no conjugation path to the bipartite element");
}

}  // namespace coxsort
