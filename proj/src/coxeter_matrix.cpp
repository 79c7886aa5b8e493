#include "coxsort/coxeter_matrix.hpp"

#include <cctype>
#include <regex>

#include "coxsort/errors.hpp"

namespace coxsort {

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<std::vector<int>> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank <= 0) throw MalformedMatrix("rank must be positive");
  if (static_cast<int>(entries_.size()) != rank)
    throw MalformedMatrix("entry rows do not match rank");
  for (int s = 0; s < rank; ++s) {
    if (static_cast<int>(entries_[s].size()) != rank)
      throw MalformedMatrix("entry columns do not match rank");
    if (entries_[s][s] != 1) throw MalformedMatrix("diagonal must be 1");
    for (int t = 0; t < rank; ++t) {
      if (s == t) continue;
      int m = entries_[s][t];
      if (m != kInfinite && m < 2)
        throw MalformedMatrix("off-diagonal order must be >= 2 or infinite");
      if (m != entries_[t][s]) throw MalformedMatrix("matrix must be symmetric");
    }
  }
}

namespace {

std::vector<std::vector<int>> blank(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void set_bond(std::vector<std::vector<int>>& m, int s, int t, int order) {
  m[s][t] = order;
  m[t][s] = order;
}

}  // namespace

CoxeterMatrix CoxeterMatrix::type_a(int n) {
  if (n < 1) throw MalformedMatrix("A_n requires n >= 1");
  auto m = blank(n);
  for (int i = 0; i + 1 < n; ++i) set_bond(m, i, i + 1, 3);
  return CoxeterMatrix(n, m);
}

CoxeterMatrix CoxeterMatrix::type_b(int n) {
  if (n < 2) throw MalformedMatrix("B_n requires n >= 2");
  auto m = blank(n);
  set_bond(m, 0, 1, 4);
  for (int i = 1; i + 1 < n; ++i) set_bond(m, i, i + 1, 3);
  return CoxeterMatrix(n, m);
}

CoxeterMatrix CoxeterMatrix::type_d(int n) {
  if (n < 3) throw MalformedMatrix("D_n requires n >= 3");
  auto m = blank(n);
  set_bond(m, 0, 2, 3);
  for (int i = 1; i + 1 < n; ++i) set_bond(m, i, i + 1, 3);
  return CoxeterMatrix(n, m);
}

CoxeterMatrix CoxeterMatrix::type_e(int n) {
  if (n < 6 || n > 8) throw MalformedMatrix("E_n requires n in {6,7,8}");
  auto m = blank(n);
  set_bond(m, 0, 3, 3);
  for (int i = 1; i + 1 < n; ++i) set_bond(m, i, i + 1, 3);
  return CoxeterMatrix(n, m);
}

CoxeterMatrix CoxeterMatrix::type_f4() {
  auto m = blank(4);
  set_bond(m, 0, 1, 3);
  set_bond(m, 1, 2, 4);
  set_bond(m, 2, 3, 3);
  return CoxeterMatrix(4, m);
}

CoxeterMatrix CoxeterMatrix::type_h(int n) {
  if (n < 3 || n > 4) throw MalformedMatrix("H_n requires n in {3,4}");
  auto m = blank(n);
  set_bond(m, 0, 1, 5);
  for (int i = 1; i + 1 < n; ++i) set_bond(m, i, i + 1, 3);
  return CoxeterMatrix(n, m);
}

CoxeterMatrix CoxeterMatrix::type_i2(int m_order) {
  if (m_order < 3) throw MalformedMatrix("I2(m) requires m >= 3");
  auto m = blank(2);
  set_bond(m, 0, 1, m_order);
  return CoxeterMatrix(2, m);
}

CoxeterMatrix CoxeterMatrix::from_name(const std::string& name) {
  static const std::regex pattern(R"(^([ABDEFGHI])(\d+)(?:\((\d+)\))?$)");
  std::smatch match;
  if (!std::regex_match(name, match, pattern))
    throw MalformedMatrix("unrecognized group name: " + name);
  char type = match[1].str()[0];
  int n = std::stoi(match[2].str());
  switch (type) {
    case 'A':
      return type_a(n);
    case 'B':
      return type_b(n);
    case 'D':
      return type_d(n);
    case 'E':
      return type_e(n);
    case 'F':
      if (n != 4) throw MalformedMatrix("only F4 exists");
      return type_f4();
    case 'G':
      if (n != 2) throw MalformedMatrix("only G2 exists");
      return type_g2();
    case 'H':
      return type_h(n);
    case 'I':
      // "I2(m)" or the shorthand "Im".
      if (match[3].matched) {
        if (n != 2) throw MalformedMatrix("dihedral groups are I2(m)");
        return type_i2(std::stoi(match[3].str()));
      }
      return type_i2(n);
    default:
      throw MalformedMatrix("unrecognized group name: " + name);
  }
}

}  // namespace coxsort
