#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coxsort/errors.hpp"
#include "helpers.hpp"

using namespace coxsort;
using namespace coxsort::testing;

TEST_CASE("positive root counts") {
  // Classical values nh/2 for (type, Coxeter number) pairs.
  CHECK(make_system("A1").num_positive_roots() == 1);
  CHECK(make_system("A2").num_positive_roots() == 3);
  CHECK(make_system("B2").num_positive_roots() == 4);
  CHECK(make_system("G2").num_positive_roots() == 6);
  CHECK(make_system("A3").num_positive_roots() == 6);
  CHECK(make_system("B3").num_positive_roots() == 9);
  CHECK(make_system("H3").num_positive_roots() == 15);
  CHECK(make_system("D4").num_positive_roots() == 12);
  CHECK(make_system("F4").num_positive_roots() == 24);
  CHECK(make_system("I2(7)").num_positive_roots() == 7);
}

TEST_CASE("simple roots are unit coordinate vectors") {
  CoxeterSystem sys = make_system("B3");
  std::set<int> ids;
  for (int s = 0; s < sys.rank(); ++s) {
    int id = sys.simple_root_id(s);
    ids.insert(id);
    const Root& r = sys.root(id);
    for (int t = 0; t < sys.rank(); ++t)
      CHECK(r[t] == doctest::Approx(t == s ? 1.0 : 0.0));
  }
  CHECK(static_cast<int>(ids.size()) == sys.rank());
}

TEST_CASE("reflection tables are involutions") {
  CoxeterSystem sys = make_system("H3");
  for (int s = 0; s < sys.rank(); ++s) {
    for (int id = 0; id < sys.num_positive_roots(); ++id) {
      SignedId image = sys.reflect(s, id);
      int abs_id = std::abs(image) - 1;
      SignedId back = sys.reflect(s, abs_id);
      if (image > 0)
        CHECK(back == id + 1);
      else
        CHECK(back == -(id + 1));
    }
    // s negates exactly its own simple root.
    CHECK(sys.reflect(s, sys.simple_root_id(s)) == -(sys.simple_root_id(s) + 1));
  }
}

TEST_CASE("find_root handles both signs and rejects non-roots") {
  CoxeterSystem sys = make_system("B3");
  for (int id = 0; id < sys.num_positive_roots(); ++id) {
    Root r = sys.root(id);
    CHECK(sys.find_root(r) == id + 1);
    for (double& x : r) x = -x;
    CHECK(sys.find_root(r) == -(id + 1));
  }
  Root junk(sys.rank(), 0.37);
  CHECK(!sys.find_root(junk).has_value());
}

TEST_CASE("infinite and affine inputs are rejected") {
  CHECK_THROWS_AS(CoxeterSystem(CoxeterMatrix(2, {{1, kInfinite}, {kInfinite, 1}})),
                  NotFinite);
  // Affine A2: triangle of bonds of order 3; form is only semidefinite.
  CHECK_THROWS_AS(CoxeterSystem(CoxeterMatrix(3, {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}})),
                  NotFinite);
}

TEST_CASE("rank-two parabolic of B2 and its chain") {
  CoxeterSystem sys = make_system("B2");
  const auto& parabolics = sys.rank_two_parabolics();
  REQUIRE(parabolics.size() == 1);
  const RankTwoParabolic& p = parabolics.front();
  CHECK(p.irreducible);
  CHECK(p.reflections == std::vector<int>{0, 1, 2, 3});
  std::vector<int> chain = sys.dyer_chain(p);
  REQUIRE(chain.size() == 4);
  CHECK(chain.front() == p.canon_first);
  CHECK(chain.back() == p.canon_second);
}

TEST_CASE("dyer chain is the alternating product sequence") {
  // chain[k] = t1 t2 t1 ... (2k+1 letters) for canonical generators t1, t2.
  for (const char* name : {"B2", "G2", "A3", "H3"}) {
    CoxeterSystem sys = make_system(name);
    for (const RankTwoParabolic& p : sys.rank_two_parabolics()) {
      Element t1 = Element::reflection(sys, p.canon_first);
      Element t2 = Element::reflection(sys, p.canon_second);
      std::vector<int> chain = sys.dyer_chain(p);
      Element left = Element::identity(sys);
      for (std::size_t k = 0; k < chain.size(); ++k) {
        const Element& center = k % 2 == 0 ? t1 : t2;
        CHECK(Element::reflection(sys, chain[k]) ==
              left * center * left.inverse());
        left = left * center;
      }
    }
  }
}

TEST_CASE("canonical generators of the full reflection set are the simples") {
  for (const char* name : {"A3", "B3", "H3"}) {
    CoxeterSystem sys = make_system(name);
    std::vector<int> all;
    for (int t = 0; t < sys.num_positive_roots(); ++t) all.push_back(t);
    std::vector<int> gens = sys.canonical_generators(all);
    std::vector<int> expected;
    for (int s = 0; s < sys.rank(); ++s) expected.push_back(sys.simple_root_id(s));
    std::sort(expected.begin(), expected.end());
    std::sort(gens.begin(), gens.end());
    CHECK(gens == expected);
  }
}

TEST_CASE("root_in_parabolic sees exactly the span") {
  CoxeterSystem sys = make_system("A3");
  std::vector<bool> J{true, true, false};
  int count = 0;
  for (int t = 0; t < sys.num_positive_roots(); ++t)
    if (sys.root_in_parabolic(t, J)) ++count;
  CHECK(count == 3);  // positive roots of the A2 subsystem
}
