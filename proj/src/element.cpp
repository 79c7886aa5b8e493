#include "coxsort/element.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "coxsort/errors.hpp"

namespace coxsort {

namespace {

int count_negatives(const std::vector<SignedId>& act) {
  int c = 0;
  for (SignedId v : act)
    if (v < 0) ++c;
  return c;
}

std::vector<SignedId> invert(const std::vector<SignedId>& act) {
  std::vector<SignedId> inv(act.size(), 0);
  for (int i = 0; i < static_cast<int>(act.size()); ++i) {
    int j = std::abs(act[i]) - 1;
    inv[j] = act[i] < 0 ? -(i + 1) : (i + 1);
  }
  return inv;
}

}  // namespace

Element::Element(const CoxeterSystem& sys, std::vector<SignedId> act)
    : sys_(&sys), act_(std::move(act)), inv_act_(invert(act_)),
      length_(count_negatives(act_)) {}

Element Element::identity(const CoxeterSystem& sys) {
  std::vector<SignedId> act(sys.num_positive_roots());
  for (int i = 0; i < static_cast<int>(act.size()); ++i) act[i] = i + 1;
  return Element(sys, std::move(act));
}

Element Element::simple(const CoxeterSystem& sys, int s) {
  std::vector<SignedId> act(sys.num_positive_roots());
  for (int i = 0; i < static_cast<int>(act.size()); ++i)
    act[i] = sys.reflect(s, i);
  return Element(sys, std::move(act));
}

Element Element::from_word(const CoxeterSystem& sys, const ReducedWord& word) {
  Element e = identity(sys);
  for (int s : word) e = e.times_simple(s);
  return e;
}

Element Element::reflection(const CoxeterSystem& sys, int root_id) {
  const Root& mirror = sys.root(root_id);
  double norm = sys.form(mirror, mirror);
  int count = sys.num_positive_roots();
  std::vector<SignedId> act(count);
  for (int i = 0; i < count; ++i) {
    double c = 2.0 * sys.form(mirror, sys.root(i)) / norm;
    Root image = sys.root(i);
    for (std::size_t k = 0; k < image.size(); ++k) image[k] -= c * mirror[k];
    auto id = sys.find_root(image);
    if (!id) throw Error("reflection image left the root system");
    act[i] = *id;
  }
  return Element(sys, std::move(act));
}

SignedId Element::act(SignedId signed_id) const {
  SignedId v = act_[std::abs(signed_id) - 1];
  return signed_id < 0 ? -v : v;
}

SignedId Element::act_inverse(SignedId signed_id) const {
  SignedId v = inv_act_[std::abs(signed_id) - 1];
  return signed_id < 0 ? -v : v;
}

Element Element::operator*(const Element& other) const {
  if (sys_ != other.sys_) throw SystemMismatch("elements from different systems");
  std::vector<SignedId> act(act_.size());
  for (int i = 0; i < static_cast<int>(act_.size()); ++i)
    act[i] = this->act(other.act_[i]);
  return Element(*sys_, std::move(act));
}

Element Element::inverse() const {
  auto inv = inv_act_;
  return Element(*sys_, std::move(inv));
}

bool Element::operator==(const Element& other) const {
  return sys_ == other.sys_ && act_ == other.act_;
}

Element Element::times_simple(int s) const {
  std::vector<SignedId> act(act_.size());
  for (int i = 0; i < static_cast<int>(act_.size()); ++i)
    act[i] = this->act(sys_->reflect(s, i));
  return Element(*sys_, std::move(act));
}

Element Element::simple_times(int s) const {
  std::vector<SignedId> act(act_.size());
  for (int i = 0; i < static_cast<int>(act_.size()); ++i) {
    SignedId v = act_[i];
    SignedId image = sys_->reflect(s, std::abs(v) - 1);
    act[i] = v < 0 ? -image : image;
  }
  return Element(*sys_, std::move(act));
}

bool Element::right_descent(int s) const {
  return act_[sys_->simple_root_id(s)] < 0;
}

bool Element::left_descent(int s) const {
  return inv_act_[sys_->simple_root_id(s)] < 0;
}

std::vector<int> Element::inversion_set() const {
  std::vector<int> out;
  out.reserve(length_);
  for (int i = 0; i < static_cast<int>(inv_act_.size()); ++i)
    if (inv_act_[i] < 0) out.push_back(i);
  return out;
}

bool Element::is_inversion(int root_id) const { return inv_act_[root_id] < 0; }

std::vector<int> Element::descents() const {
  std::vector<int> out;
  for (int s = 0; s < sys_->rank(); ++s)
    if (right_descent(s)) out.push_back(s);
  return out;
}

std::vector<int> Element::cover_reflections() const {
  // w s w^-1 has root w(alpha_s), made positive.
  std::vector<int> out;
  for (int s = 0; s < sys_->rank(); ++s) {
    if (!right_descent(s)) continue;
    out.push_back(std::abs(act_[sys_->simple_root_id(s)]) - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReducedWord Element::reduced_word() const {
  ReducedWord word;
  Element w = *this;
  while (!w.is_identity()) {
    int s = -1;
    for (int cand = 0; cand < sys_->rank(); ++cand) {
      if (w.right_descent(cand)) {
        s = cand;
        break;
      }
    }
    word.push_back(s);
    w = w.times_simple(s);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> Element::support() const {
  std::vector<bool> seen(sys_->rank(), false);
  for (int s : reduced_word()) seen[s] = true;
  std::vector<int> out;
  for (int s = 0; s < sys_->rank(); ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

bool Element::has_full_support() const {
  return static_cast<int>(support().size()) == sys_->rank();
}

bool Element::in_standard_parabolic(const std::vector<bool>& J) const {
  for (int t : inversion_set())
    if (!sys_->root_in_parabolic(t, J)) return false;
  return true;
}

int Element::reflection_id() const {
  int found = -1;
  for (int i = 0; i < static_cast<int>(act_.size()); ++i) {
    if (act_[i] == -(i + 1)) {
      if (found >= 0) return -1;  // -1 eigenspace is a line for reflections
      found = i;
    }
  }
  if (found < 0) return -1;
  // Confirm it is an involution fixing the mirror complement.
  return (*this * *this).is_identity() && length_ % 2 == 1 ? found : -1;
}

std::vector<Root> Element::matrix_columns() const {
  std::vector<Root> cols(sys_->rank());
  for (int s = 0; s < sys_->rank(); ++s) {
    SignedId v = act_[sys_->simple_root_id(s)];
    Root col = sys_->root(std::abs(v) - 1);
    if (v < 0)
      for (double& x : col) x = -x;
    cols[s] = std::move(col);
  }
  return cols;
}

std::size_t Element::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (SignedId v : act_) {
    h ^= static_cast<std::size_t>(v + (1 << 20));
    h *= 1099511628211ull;
  }
  return h;
}

Element longest_element(const CoxeterSystem& sys) {
  return longest_element(sys, std::vector<bool>(sys.rank(), true));
}

Element longest_element(const CoxeterSystem& sys, const std::vector<bool>& J) {
  Element w = Element::identity(sys);
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int s = 0; s < sys.rank(); ++s) {
      if (J[s] && !w.right_descent(s)) {
        w = w.times_simple(s);
        progressed = true;
      }
    }
  }
  return w;
}

std::vector<Element> all_elements(const CoxeterSystem& sys) {
  std::vector<Element> out;
  std::unordered_set<Element, ElementHash> seen;
  std::queue<Element> frontier;
  Element id = Element::identity(sys);
  out.push_back(id);
  seen.insert(id);
  frontier.push(id);
  while (!frontier.empty()) {
    Element w = frontier.front();
    frontier.pop();
    for (int s = 0; s < sys.rank(); ++s) {
      if (w.right_descent(s)) continue;
      Element next = w.times_simple(s);
      if (seen.insert(next).second) {
        out.push_back(next);
        frontier.push(next);
      }
    }
  }
  return out;
}

}  // namespace coxsort
