#pragma once

#include <vector>

#include "coxsort/sorting.hpp"

namespace coxsort {

using TWord = std::vector<int>;  // reflection ids

// Length of a reduced T-word, via the codimension of the fixed space.
int absolute_length(const Element& w);

bool le_T(const Element& x, const Element& y);

// Reflection ids t with fixed space containing the fixed space of x,
// i.e. the reflections of the parabolic subgroup associated to x.
std::vector<int> parabolic_reflections(const Element& x);

struct NCPartition {
  Element element;
  int rank;
  std::vector<int> canonical_generators;  // reflection ids
};

// All x <=_T c, breadth-first by rank, deterministic order.
std::vector<NCPartition> nc_interval(const CoxeterElement& c);

Element nc_map(const Element& w, const CoxeterElement& c);

// Forward table over enumerate_sortables, inverted. Immutable after build.
class NCBijection {
 public:
  explicit NCBijection(const CoxeterElement& c);

  const std::vector<Element>& sortables() const { return sortables_; }
  const std::vector<Element>& images() const { return images_; }

  Element inverse(const Element& x) const;  // NotNoncrossing on miss
  TWord canonical_T_word(const Element& x) const;

 private:
  CoxeterElement c_;
  std::vector<Element> sortables_;
  std::vector<Element> images_;
};

Element nc_inverse(const Element& x, const CoxeterElement& c);
TWord canonical_T_word(const Element& x, const CoxeterElement& c);

}  // namespace coxsort
