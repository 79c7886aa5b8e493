#pragma once

#include <set>
#include <vector>

#include "coxsort/sorting.hpp"

namespace coxsort {

enum class Kind { A, B, D };

// One-line notation. Type A: a permutation of [n+1]. Types B and D: the
// long one-line pi(-n)..pi(-1) pi(1)..pi(n) of a (even-)signed permutation.
struct OneLine {
  Kind kind;
  int n;                    // A: symbols [n+1]; B/D: symbols +-[n]
  std::vector<int> entries; // A: length n+1; B/D: length 2n

  int at(int position) const;  // B/D positions in +-[n], A positions in [n+1]
};

OneLine to_one_line(const Element& w, Kind kind);
Element from_one_line(const CoxeterSystem& sys, const OneLine& p);

// Reflection id of the transposition (i j) (type A over [n+1], types B/D
// signed; for B, (-i i) is passed as j = -i).
int transposition_reflection(const CoxeterSystem& sys, Kind kind, int i, int j);

struct Barring {
  Kind kind;
  int n;
  bool d_symmetric = false;         // D only
  std::set<int> upper;              // includes negatives for B/D
  std::set<int> lower;

  bool is_upper(int v) const;
  bool is_lower(int v) const;
  bool is_central(int v) const;     // D only
};

// Barring encoding c's diagram orientation, per type.
Barring barring(const CoxeterElement& c, Kind kind);

bool condition_A(const OneLine& p, const Barring& b);
bool condition_B(const OneLine& p, const Barring& b);
bool condition_D(const OneLine& p, const Barring& b);
bool condition_for(const OneLine& p, const Barring& b);  // dispatch on kind

bool is_231_avoiding(const OneLine& p);

// Descents read off the one-line notation, for coherence checks.
std::vector<int> one_line_descents(const OneLine& p);

}  // namespace coxsort
