#pragma once

#include <optional>
#include <vector>

#include "coxsort/sorting.hpp"

namespace coxsort {

// Reflection ids in the order of prefix conjugates a1..ai..a1 of the
// c-sorting word of the longest element of the support parabolic.
std::vector<int> reflection_order(const CoxeterElement& c);

struct OrientationEdge {
  int source;  // reflection id
  int target;
};

// Edge between the canonical generators of an irreducible rank-two
// parabolic: earlier in the reflection order -> later.
OrientationEdge orient(const CoxeterElement& c, const RankTwoParabolic& p);

bool is_aligned(const Element& w, const CoxeterElement& c);

// First violated parabolic, as a witness; nullopt when aligned.
std::optional<RankTwoParabolic> alignment_violation(const Element& w,
                                                    const CoxeterElement& c);

// Second route: I(w) meets W' - {t2} nonempty implies t1 in I(w).
// Kept independent of is_aligned and asserted equal in tests.
bool is_aligned_segment_form(const Element& w, const CoxeterElement& c);

}  // namespace coxsort
