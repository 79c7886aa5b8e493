#pragma once

#include <initializer_list>
#include <string>

#include "coxsort/coxeter_matrix.hpp"
#include "coxsort/element.hpp"
#include "coxsort/sorting.hpp"

namespace coxsort::testing {

inline CoxeterSystem make_system(const std::string& name) {
  return CoxeterSystem(CoxeterMatrix::from_name(name));
}

inline Element el(const CoxeterSystem& sys, const ReducedWord& word) {
  return Element::from_word(sys, word);
}

inline CoxeterElement cox(const CoxeterSystem& sys, const ReducedWord& word) {
  return CoxeterElement(sys, word);
}

// Standard-order Coxeter element s_0 s_1 ... s_{n-1}.
inline CoxeterElement cox(const CoxeterSystem& sys) {
  ReducedWord word(sys.rank());
  for (int s = 0; s < sys.rank(); ++s) word[s] = s;
  return CoxeterElement(sys, word);
}

inline int refl_id(const CoxeterSystem& sys, const ReducedWord& word) {
  return Element::from_word(sys, word).reflection_id();
}

}  // namespace coxsort::testing
