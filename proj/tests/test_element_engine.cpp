#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coxsort/errors.hpp"
#include "helpers.hpp"

using namespace coxsort;
using namespace coxsort::testing;

TEST_CASE("group orders") {
  CHECK(all_elements(make_system("A2")).size() == 6);
  CHECK(all_elements(make_system("B2")).size() == 8);
  CHECK(all_elements(make_system("G2")).size() == 12);
  CHECK(all_elements(make_system("A3")).size() == 24);
  CHECK(all_elements(make_system("B3")).size() == 48);
  CHECK(all_elements(make_system("H3")).size() == 120);
  CHECK(all_elements(make_system("D4")).size() == 192);
  CHECK(all_elements(make_system("I2(7)")).size() == 14);
}

TEST_CASE("longest element lengths equal the number of positive roots") {
  for (const char* name : {"A3", "B3", "H3", "D4"}) {
    CoxeterSystem sys = make_system(name);
    Element w0 = longest_element(sys);
    CHECK(w0.length() == sys.num_positive_roots());
    CHECK((w0 * w0).is_identity());
    for (int s = 0; s < sys.rank(); ++s) {
      CHECK(w0.right_descent(s));
      CHECK(w0.left_descent(s));
    }
  }
}

TEST_CASE("length equals inversion count; reduced words round trip") {
  CoxeterSystem sys = make_system("B3");
  std::set<Element> seen;
  for (const Element& w : all_elements(sys)) {
    CHECK(seen.insert(w).second);
    std::vector<int> inv = w.inversion_set();
    CHECK(static_cast<int>(inv.size()) == w.length());
    for (int t : inv) CHECK(w.is_inversion(t));

    ReducedWord word = w.reduced_word();
    CHECK(static_cast<int>(word.size()) == w.length());
    CHECK(Element::from_word(sys, word) == w);
  }
  CHECK(seen.size() == 48);
}

TEST_CASE("group axioms and inverse") {
  CoxeterSystem sys = make_system("A3");
  std::vector<Element> elems = all_elements(sys);
  Element id = Element::identity(sys);
  for (const Element& u : elems) {
    CHECK(u * u.inverse() == id);
    CHECK(u.inverse().length() == u.length());
  }
  // Associativity and anti-homomorphism of inverse, spot-checked.
  Element a = el(sys, {0, 1}), b = el(sys, {2, 1}), c = el(sys, {1, 0, 2});
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * b).inverse() == b.inverse() * a.inverse());
}

TEST_CASE("times_simple and simple_times agree with products") {
  CoxeterSystem sys = make_system("B3");
  for (const Element& w : all_elements(sys)) {
    for (int s = 0; s < sys.rank(); ++s) {
      CHECK(w.times_simple(s) == w * Element::simple(sys, s));
      CHECK(w.simple_times(s) == Element::simple(sys, s) * w);
      CHECK(w.right_descent(s) == (w.times_simple(s).length() < w.length()));
      CHECK(w.left_descent(s) == (w.simple_times(s).length() < w.length()));
    }
  }
}

TEST_CASE("descents and cover reflections") {
  CoxeterSystem sys = make_system("B2");
  for (const Element& w : all_elements(sys)) {
    std::vector<int> desc = w.descents();
    std::vector<int> covers = w.cover_reflections();
    CHECK(desc.size() == covers.size());
    std::set<int> expected;
    for (int s : desc) {
      Element t = w * Element::simple(sys, s) * w.inverse();
      REQUIRE(t.reflection_id() >= 0);
      expected.insert(t.reflection_id());
    }
    CHECK(std::set<int>(covers.begin(), covers.end()) == expected);
  }
}

TEST_CASE("reflection round trip") {
  CoxeterSystem sys = make_system("B3");
  for (int t = 0; t < sys.num_positive_roots(); ++t) {
    Element r = Element::reflection(sys, t);
    CHECK(r.reflection_id() == t);
    CHECK((r * r).is_identity());
    CHECK(r.length() % 2 == 1);
  }
  CHECK(el(sys, {0, 1}).reflection_id() == -1);
  CHECK(Element::identity(sys).reflection_id() == -1);
}

TEST_CASE("standard parabolic membership") {
  CoxeterSystem sys = make_system("A3");
  std::vector<bool> J{true, true, false};
  int count = 0;
  for (const Element& w : all_elements(sys))
    if (w.in_standard_parabolic(J)) ++count;
  CHECK(count == 6);  // the A2 parabolic

  Element w0J = longest_element(sys, J);
  CHECK(w0J.length() == 3);
  CHECK(w0J.in_standard_parabolic(J));
}

TEST_CASE("support") {
  CoxeterSystem sys = make_system("B3");
  CHECK(el(sys, {0, 2}).support() == std::vector<int>{0, 2});
  CHECK(longest_element(sys).has_full_support());
  CHECK(!el(sys, {1}).has_full_support());
}
