#pragma once

#include <cstdint>
#include <vector>

#include "coxsort/root_system.hpp"

namespace coxsort {

using ReducedWord = std::vector<int>;  // simple-generator indices

// A group element represented by its action on the positive roots.
// Immutable value; equality and hashing go through the action table.
class Element {
 public:
  static Element identity(const CoxeterSystem& sys);
  static Element simple(const CoxeterSystem& sys, int s);
  static Element from_word(const CoxeterSystem& sys, const ReducedWord& word);
  // The reflection with root `root_id`.
  static Element reflection(const CoxeterSystem& sys, int root_id);

  const CoxeterSystem& system() const { return *sys_; }

  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  SignedId act(SignedId signed_id) const;
  SignedId act_inverse(SignedId signed_id) const;

  Element operator*(const Element& other) const;
  Element inverse() const;
  bool operator==(const Element& other) const;
  bool operator!=(const Element& other) const { return !(*this == other); }
  bool operator<(const Element& other) const { return act_ < other.act_; }

  Element times_simple(int s) const;  // w s
  Element simple_times(int s) const;  // s w

  bool right_descent(int s) const;  // l(ws) < l(w)
  bool left_descent(int s) const;   // l(sw) < l(w)

  // Reflection ids t with l(tw) < l(w); size equals length().
  std::vector<int> inversion_set() const;
  bool is_inversion(int root_id) const;

  std::vector<int> descents() const;          // simple indices
  std::vector<int> cover_reflections() const; // root ids of w s w^-1

  // Canonical word: repeatedly strip the smallest-index right descent.
  ReducedWord reduced_word() const;
  std::vector<int> support() const;
  bool has_full_support() const;

  bool in_standard_parabolic(const std::vector<bool>& J) const;

  // If this element is a reflection, its root id; -1 otherwise.
  int reflection_id() const;

  // Matrix in the reflection representation, column s = coords of w(alpha_s).
  std::vector<Root> matrix_columns() const;

  std::size_t hash() const;

 private:
  Element(const CoxeterSystem& sys, std::vector<SignedId> act);

  const CoxeterSystem* sys_;
  std::vector<SignedId> act_;      // act_[i] = signed image of root i
  std::vector<SignedId> inv_act_;  // inverse action
  int length_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

Element longest_element(const CoxeterSystem& sys);
// Longest element of the standard parabolic W_J.
Element longest_element(const CoxeterSystem& sys, const std::vector<bool>& J);

// Every element of W, breadth-first from the identity, deterministic order.
std::vector<Element> all_elements(const CoxeterSystem& sys);

}  // namespace coxsort
