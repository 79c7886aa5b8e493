#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coxsort/enumeration.hpp"
#include "coxsort/errors.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace coxsort;
using namespace coxsort::testing;

TEST_CASE("B2 golden sortable set for c = s0 s1") {
  CoxeterSystem sys = make_system("B2");
  CoxeterElement c = cox(sys, {0, 1});

  std::set<Element> expected;
  for (ReducedWord w : std::vector<ReducedWord>{
           {}, {0}, {0, 1}, {0, 1, 0}, {0, 1, 0, 1}, {1}})
    expected.insert(el(sys, w));

  std::vector<Element> sortables = enumerate_sortables(c);
  CHECK(std::set<Element>(sortables.begin(), sortables.end()) == expected);
  CHECK(sortables.size() == 6);

  CHECK(!is_sortable(el(sys, {1, 0}), c));
  CHECK(!is_sortable(el(sys, {1, 0, 1}), c));
  for (const Element& w : expected) CHECK(is_sortable(w, c));
}

TEST_CASE("B2 golden sorting words and blocks") {
  CoxeterSystem sys = make_system("B2");
  CoxeterElement c = cox(sys, {0, 1});

  SortingWord w0 = sorting_word(longest_element(sys), c);
  CHECK(w0.letters == ReducedWord{0, 1, 0, 1});
  CHECK(w0.block_of == std::vector<int>{0, 0, 1, 1});
  CHECK(w0.num_blocks() == 2);
  CHECK(w0.block(0) == std::set<int>{0, 1});
  CHECK(w0.block(1) == std::set<int>{0, 1});

  SortingWord s1s0 = sorting_word(el(sys, {1, 0}), c);
  CHECK(s1s0.letters == ReducedWord{1, 0});
  CHECK(s1s0.block(0) == std::set<int>{1});
  CHECK(s1s0.block(1) == std::set<int>{0});
}

TEST_CASE("initial and final letters; conjugation") {
  CoxeterSystem sys = make_system("B2");
  CoxeterElement c = cox(sys, {0, 1});
  CHECK(c.initial_letters() == std::vector<int>{0});
  CHECK(c.final_letters() == std::vector<int>{1});
  CHECK(c.conjugate(0).word() == ReducedWord{1, 0});
  CHECK_THROWS_AS(c.conjugate(1), NotInitial);

  CoxeterSystem a3 = make_system("A3");
  CoxeterElement d = cox(a3, {1, 0, 2});
  CHECK(d.initial_letters() == std::vector<int>{1});
  std::vector<int> finals = d.final_letters();
  CHECK(finals == std::vector<int>{0, 2});
  CHECK(d.conjugate(1).element() ==
        Element::simple(a3, 1) * d.element() * Element::simple(a3, 1));
}

TEST_CASE("sortable counts match the Catalan numbers") {
  auto count = [](const std::string& name) {
    CoxeterSystem sys = make_system(name);
    std::size_t expected = 0;
    bool first = true;
    for (const CoxeterElement& c : all_coxeter_elements(sys)) {
      std::size_t n = enumerate_sortables(c).size();
      if (first) expected = n;
      first = false;
      CHECK(n == expected);
    }
    return expected;
  };
  CHECK(count("A2") == 5);
  CHECK(count("A3") == 14);
  CHECK(count("B2") == 6);
  CHECK(count("B3") == 20);
  CHECK(count("G2") == 8);
  CHECK(count("H3") == 32);
}

TEST_CASE("sortables with restricted support multiply over components") {
  CoxeterSystem sys = make_system("B3");
  CoxeterElement c = cox(sys, {0, 2});  // two commuting A1 factors
  CHECK(enumerate_sortables(c).size() == 4);
  for (const Element& w : enumerate_sortables(c))
    CHECK(w.in_standard_parabolic(c.support()));
}

TEST_CASE("sorting word is the lexicographically first reduced subword") {
  for (const char* name : {"A3", "B3"}) {
    CoxeterSystem sys = make_system(name);
    for (const CoxeterElement& c : all_coxeter_elements(sys)) {
      for (const Element& w : all_elements(sys)) {
        SubwordOracle oracle = lex_first_subword(w, c);
        SortingWord sw = sorting_word(w, c);
        CHECK(sw.letters == oracle.letters);
        CHECK(sw.positions == oracle.positions);
      }
    }
  }
  // One larger spot check.
  CoxeterSystem h3 = make_system("H3");
  CoxeterElement c = cox(h3, {2, 0, 1});
  for (const Element& w : all_elements(h3)) {
    SubwordOracle oracle = lex_first_subword(w, c);
    SortingWord sw = sorting_word(w, c);
    CHECK(sw.letters == oracle.letters);
    CHECK(sw.positions == oracle.positions);
  }
}

TEST_CASE("sortability is independent of the chosen word for c") {
  CoxeterSystem sys = make_system("A3");
  CoxeterElement c1 = cox(sys, {0, 2, 1});
  CoxeterElement c2 = cox(sys, {2, 0, 1});  // same orientation
  CHECK(c1.same_orientation(c2));
  for (const Element& w : all_elements(sys))
    CHECK(is_sortable(w, c1) == is_sortable(w, c2));
}

TEST_CASE("diagram coloring and the bipartite conjugation path") {
  CoxeterSystem sys = make_system("A3");
  CHECK(diagram_coloring(sys, {true, true, true}) == std::vector<int>{0, 1, 0});

  CoxeterElement c = cox(sys, {0, 1, 2});
  std::vector<int> path = bipartite_path(c);
  CoxeterElement cur = c;
  for (int s : path) cur = cur.conjugate(s);
  // End result is the bipartite orientation: color-0 letters first.
  CoxeterElement bipartite = cox(sys, {0, 2, 1});
  CHECK(cur.same_orientation(bipartite));
}
