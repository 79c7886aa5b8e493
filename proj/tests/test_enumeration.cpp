#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coxsort/enumeration.hpp"
#include "helpers.hpp"

using namespace coxsort;
using namespace coxsort::testing;

namespace {

void check_degrees(const std::string& name, int h, std::vector<int> exponents) {
  CoxeterSystem sys = make_system(name);
  Degrees d = degrees(sys);
  CHECK(d.coxeter_number() == h);
  CHECK(d.all_exponents() == exponents);
}

}  // namespace

TEST_CASE("coxeter numbers and exponents") {
  check_degrees("A1", 2, {1});
  check_degrees("A3", 4, {1, 2, 3});
  check_degrees("B3", 6, {1, 3, 5});
  check_degrees("H3", 10, {1, 5, 9});
  check_degrees("D4", 6, {1, 3, 3, 5});
  check_degrees("F4", 12, {1, 5, 7, 11});
  check_degrees("G2", 6, {1, 5});
  check_degrees("I2(7)", 7, {1, 6});
  check_degrees("E6", 12, {1, 4, 5, 7, 8, 11});
  check_degrees("H4", 30, {1, 11, 19, 29});
}

TEST_CASE("catalan numbers from the degree formula") {
  auto catalan = [](const std::string& name) {
    return catalan_formula(degrees(make_system(name)));
  };
  CHECK(catalan("A1") == 2);
  CHECK(catalan("A2") == 5);
  CHECK(catalan("A3") == 14);
  CHECK(catalan("A4") == 42);
  CHECK(catalan("A5") == 132);
  CHECK(catalan("B2") == 6);
  CHECK(catalan("B3") == 20);
  CHECK(catalan("B4") == 70);
  CHECK(catalan("D4") == 50);
  CHECK(catalan("G2") == 8);
  CHECK(catalan("H3") == 32);
  CHECK(catalan("F4") == 105);
  CHECK(catalan("H4") == 280);
  CHECK(catalan("E6") == 833);
  for (int m = 3; m <= 8; ++m)
    CHECK(catalan("I2(" + std::to_string(m) + ")") == m + 2);
}

TEST_CASE("count report cross-checks B2 golden") {
  CoxeterSystem sys = make_system("B2");
  CountReport r = count_report(cox(sys, {0, 1}));
  CHECK(r.catalan == 6);
  CHECK(r.sortable_count == 6);
  CHECK(r.nc_count == 6);
  CHECK(r.cluster_count == 6);
  CHECK(r.positive_catalan == 3);
  CHECK(r.full_support_sortables == 3);
  CHECK(r.narayana_by_descents == std::vector<long long>{1, 4, 1});
  CHECK(r.narayana_by_rank == std::vector<long long>{1, 4, 1});
  CHECK(r.all_match);
}

TEST_CASE("count report cross-checks A3 and G2") {
  CountReport a3 = count_report(cox(make_system("A3")));
  CHECK(a3.catalan == 14);
  CHECK(a3.narayana_by_descents == std::vector<long long>{1, 6, 6, 1});
  CHECK(a3.all_match);

  CountReport g2 = count_report(cox(make_system("G2")));
  CHECK(g2.catalan == 8);
  CHECK(g2.all_match);
}

TEST_CASE("all Coxeter elements are the acyclic orientations") {
  CHECK(all_coxeter_elements(make_system("B2")).size() == 2);
  CHECK(all_coxeter_elements(make_system("A3")).size() == 4);
  CHECK(all_coxeter_elements(make_system("B3")).size() == 4);
  CHECK(all_coxeter_elements(make_system("A4")).size() == 8);
  CHECK(all_coxeter_elements(make_system("D4")).size() == 8);

  CoxeterSystem sys = make_system("A3");
  std::set<std::uint64_t> keys;
  for (const CoxeterElement& c : all_coxeter_elements(sys)) {
    CHECK(c.size() == sys.rank());
    CHECK(keys.insert(c.orientation_key()).second);
  }
}

TEST_CASE("verify battery passes exhaustively on small groups") {
  for (const char* name : {"B2", "A3"}) {
    CoxeterSystem sys = make_system(name);
    for (const CoxeterElement& c : all_coxeter_elements(sys)) {
      VerifyReport report = verify_all(c, VerifyOptions{});
      CHECK(!report.checks.empty());
      for (const CheckResult& check : report.checks) {
        INFO(std::string(name) << " " << check.name << ": " << check.witness);
        CHECK(check.passed);
        CHECK(check.cases >= 0);
      }
      CHECK(report.all_passed());
    }
  }
}

TEST_CASE("sampled verification is deterministic for a fixed seed") {
  CoxeterSystem sys = make_system("B3");
  VerifyOptions opts;
  opts.mode = VerifyMode::Sampled;
  opts.seed = 42;
  opts.sample_size = 500;
  VerifyReport a = verify_all(cox(sys), opts);
  VerifyReport b = verify_all(cox(sys), opts);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].cases == b.checks[i].cases);
    CHECK(a.checks[i].passed);
    CHECK(b.checks[i].passed);
  }
}

TEST_CASE("alignment battery kernels agree") {
  CoxeterSystem sys = make_system("A3");
  for (const CoxeterElement& c : all_coxeter_elements(sys)) {
    CHECK(alignment_mismatches_serial(c).empty());
    CHECK(alignment_mismatches_parallel(c).empty());
  }
}
