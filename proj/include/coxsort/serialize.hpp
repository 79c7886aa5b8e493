#pragma once

#include <string>
#include <vector>

#include "coxsort/clusters.hpp"
#include "coxsort/element.hpp"

namespace coxsort {

// Elements print as their canonical reduced word "0,1,0"; identity as "e".
std::string word_string(const ReducedWord& w);
std::string element_string(const Element& e);
// Reflections print as the canonical reduced word of the palindrome.
std::string reflection_string(const CoxeterSystem& sys, int root_id);
std::string almost_reflection_string(const CoxeterSystem& sys,
                                     AlmostReflection t);

ReducedWord parse_word(const std::string& s);

}  // namespace coxsort
