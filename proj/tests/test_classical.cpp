#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coxsort/classical.hpp"
#include "coxsort/enumeration.hpp"
#include "coxsort/errors.hpp"
#include "helpers.hpp"

using namespace coxsort;
using namespace coxsort::testing;

TEST_CASE("one-line notation round trips") {
  struct Case {
    const char* name;
    Kind kind;
  };
  for (Case cs : {Case{"A4", Kind::A}, Case{"B3", Kind::B}, Case{"D4", Kind::D}}) {
    CoxeterSystem sys = make_system(cs.name);
    for (const Element& w : all_elements(sys)) {
      OneLine p = to_one_line(w, cs.kind);
      CHECK(from_one_line(sys, p) == w);
      // Descents of the one-line match the abstract descents.
      CHECK(one_line_descents(p) == w.descents());
    }
  }
}

TEST_CASE("signed one-line golden values in B2") {
  CoxeterSystem sys = make_system("B2");
  OneLine id = to_one_line(Element::identity(sys), Kind::B);
  CHECK(id.at(-2) == -2);
  CHECK(id.at(-1) == -1);
  CHECK(id.at(1) == 1);
  CHECK(id.at(2) == 2);

  // s1 s0 is the signed permutation -1 2 -2 1 (long one-line).
  OneLine p = to_one_line(el(sys, {1, 0}), Kind::B);
  CHECK(p.at(-2) == -1);
  CHECK(p.at(-1) == 2);
  CHECK(p.at(1) == -2);
  CHECK(p.at(2) == 1);

  // s1 s0 s1 is 2 -1 1 -2.
  OneLine q = to_one_line(el(sys, {1, 0, 1}), Kind::B);
  CHECK(q.at(-2) == 2);
  CHECK(q.at(-1) == -1);
  CHECK(q.at(1) == 1);
  CHECK(q.at(2) == -2);
}

TEST_CASE("type A barring golden for S9") {
  // c = s8 s7 s4 s1 s2 s3 s5 s6 in S9 (1-based letters).
  CoxeterSystem sys = make_system("A8");
  CoxeterElement c = cox(sys, {7, 6, 3, 0, 1, 2, 4, 5});
  Barring b = barring(c, Kind::A);
  CHECK(b.upper == std::set<int>{4, 7, 8});
  CHECK(b.lower == std::set<int>{2, 3, 5, 6});
}

TEST_CASE("type B barring golden for B6") {
  CoxeterSystem sys = make_system("B6");
  CoxeterElement c = cox(sys, {5, 1, 0, 2, 3, 4});
  Barring b = barring(c, Kind::B);
  CHECK(b.upper == std::set<int>{1, 5, -2, -3, -4});
  CHECK(b.lower == std::set<int>{2, 3, 4, -1, -5});
}

TEST_CASE("B2 barring and condition (B) golden") {
  CoxeterSystem sys = make_system("B2");
  CoxeterElement c = cox(sys, {0, 1});
  Barring b = barring(c, Kind::B);
  CHECK(b.is_upper(-1));
  CHECK(b.is_lower(1));
  CHECK(!b.is_upper(2));
  CHECK(!b.is_lower(2));

  // The two non-sortable elements fail through the subsequences
  // (-1) 2 (-2)  and  (-1) 1 (-2).
  CHECK(!condition_B(to_one_line(el(sys, {1, 0}), Kind::B), b));
  CHECK(!condition_B(to_one_line(el(sys, {1, 0, 1}), Kind::B), b));
  for (ReducedWord w : std::vector<ReducedWord>{
           {}, {0}, {0, 1}, {0, 1, 0}, {0, 1, 0, 1}, {1}})
    CHECK(condition_B(to_one_line(el(sys, w), Kind::B), b));
}

TEST_CASE("type D barring fixture") {
  CoxeterSystem sys = make_system("D6");
  // Asymmetric orientation: s1 -> s2 -> s0, s2 -> s3, s4 -> s3, s5 -> s4.
  CoxeterElement c = cox(sys, {1, 2, 0, 5, 4, 3});
  Barring b = barring(c, Kind::D);
  CHECK(!b.d_symmetric);
  CHECK(b.is_upper(1));
  CHECK(b.is_lower(-1));
  CHECK(b.is_lower(3));
  CHECK(b.is_upper(4));
  CHECK(b.is_upper(5));
  CHECK(b.is_central(2));
  CHECK(b.is_central(-2));
  CHECK(!b.is_central(1));
  // n and -n carry both bars in type D.
  CHECK(b.is_upper(6));
  CHECK(b.is_lower(6));
  CHECK(b.is_upper(-6));
  CHECK(b.is_lower(-6));

  // A symmetric orientation has central +-1 instead.
  CoxeterElement csym = cox(sys, {0, 1, 2, 3, 4, 5});
  Barring bsym = barring(csym, Kind::D);
  CHECK(bsym.d_symmetric);
  CHECK(bsym.is_central(1));
  CHECK(!bsym.is_central(2));
}

TEST_CASE("pattern conditions agree with sortability") {
  struct Case {
    const char* name;
    Kind kind;
  };
  for (Case cs : {Case{"A4", Kind::A}, Case{"B3", Kind::B}, Case{"D4", Kind::D}}) {
    CoxeterSystem sys = make_system(cs.name);
    for (const CoxeterElement& c : all_coxeter_elements(sys)) {
      Barring b = barring(c, cs.kind);
      for (const Element& w : all_elements(sys))
        CHECK(condition_for(to_one_line(w, cs.kind), b) == is_sortable(w, c));
    }
  }
}

TEST_CASE("231-avoiding permutations are the sortables for the cycle c") {
  for (int n : {3, 4}) {
    CoxeterSystem sys = make_system("A" + std::to_string(n));
    ReducedWord word;
    for (int s = n - 1; s >= 0; --s) word.push_back(s);
    CoxeterElement c = cox(sys, word);  // c = (n n+1)...(2 3)(1 2)
    long long avoiding = 0;
    for (const Element& w : all_elements(sys)) {
      bool avoid = is_231_avoiding(to_one_line(w, Kind::A));
      CHECK(avoid == is_sortable(w, c));
      if (avoid) ++avoiding;
    }
    CHECK(avoiding == (n == 3 ? 14 : 42));
  }
}

TEST_CASE("transpositions map to reflections") {
  CoxeterSystem a3 = make_system("A3");
  int t = transposition_reflection(a3, Kind::A, 1, 3);
  OneLine p = to_one_line(Element::reflection(a3, t), Kind::A);
  CHECK(p.at(1) == 3);
  CHECK(p.at(3) == 1);
  CHECK(p.at(2) == 2);

  CoxeterSystem b3 = make_system("B3");
  int u = transposition_reflection(b3, Kind::B, 1, -1);
  OneLine q = to_one_line(Element::reflection(b3, u), Kind::B);
  CHECK(q.at(1) == -1);
  CHECK(q.at(2) == 2);
  int v = transposition_reflection(b3, Kind::B, 1, -2);
  OneLine r = to_one_line(Element::reflection(b3, v), Kind::B);
  CHECK(r.at(1) == -2);
  CHECK(r.at(2) == -1);
}

TEST_CASE("kind mismatches are rejected") {
  CoxeterSystem sys = make_system("B3");
  CHECK_THROWS_AS(to_one_line(Element::identity(sys), Kind::A), KindMismatch);
  OneLine bad{Kind::B, 3, {1, 2, 3, 1, 2, 3}};  // not antisymmetric
  CHECK_THROWS_AS(from_one_line(sys, bad), KindMismatch);
}
