#pragma once

#include <string>
#include <vector>

namespace coxsort {

// Order m(s,t) of a product of two simple generators. kInfinite encodes
// m(s,t) = infinity; any such entry makes the group non-finite.
inline constexpr int kInfinite = 0;

class CoxeterMatrix {
 public:
  CoxeterMatrix(int rank, std::vector<std::vector<int>> entries);

  // Named constructors keyed the way the Catalan table is.
  static CoxeterMatrix type_a(int n);
  static CoxeterMatrix type_b(int n);
  static CoxeterMatrix type_d(int n);
  static CoxeterMatrix type_e(int n);  // n in {6,7,8}
  static CoxeterMatrix type_f4();
  static CoxeterMatrix type_h(int n);  // n in {3,4}
  static CoxeterMatrix type_i2(int m);
  static CoxeterMatrix type_g2() { return type_i2(6); }

  // Parses "A3", "B4", "H3", "G2", "I2(7)" / "I7".
  static CoxeterMatrix from_name(const std::string& name);

  int rank() const { return rank_; }
  int order(int s, int t) const { return entries_[s][t]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  bool bond(int s, int t) const { return s != t && entries_[s][t] >= 3; }

 private:
  int rank_;
  std::vector<std::vector<int>> entries_;
};

}  // namespace coxsort
