#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxsort/sorting.hpp"

namespace coxsort {

struct ComponentDegrees {
  std::vector<int> simples;    // diagram component, sorted
  int h;                       // Coxeter number of the component
  std::vector<int> exponents;  // sorted
};

struct Degrees {
  std::vector<ComponentDegrees> components;

  int coxeter_number() const;          // lcm over components
  std::vector<int> all_exponents() const;
};

Degrees degrees(const CoxeterSystem& sys);

// Exact rational evaluation of prod (e_i + h + 1)/(e_i + 1) per component.
long long catalan_formula(const Degrees& d);

struct CountReport {
  long long catalan = 0;           // formula value
  long long sortable_count = 0;
  long long nc_count = 0;
  long long cluster_count = 0;
  long long positive_catalan = 0;  // positive clusters
  long long full_support_sortables = 0;
  std::vector<long long> narayana_by_descents;
  std::vector<long long> narayana_by_rank;
  bool all_match = false;
};

CountReport count_report(const CoxeterElement& c);

enum class VerifyMode { Exhaustive, Sampled };

struct CheckResult {
  std::string name;
  bool passed = true;
  long long cases = 0;
  std::string witness;  // first failure, serialized

  void fail(const std::string& w) {
    if (passed) witness = w;
    passed = false;
  }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Exhaustive;
  std::uint64_t seed = 0;
  int sample_size = 10000;
  bool parallel = false;
};

// Runs the full cross-check battery for (W, c).
VerifyReport verify_all(const CoxeterElement& c, const VerifyOptions& opts);

// All Coxeter elements of the system (acyclic diagram orientations),
// deterministic order, one canonical word each.
std::vector<CoxeterElement> all_coxeter_elements(const CoxeterSystem& sys);

// Alignment battery kernels: a serial reference and an OpenMP version.
// Both return the elements where is_sortable and is_aligned disagree.
std::vector<Element> alignment_mismatches_serial(const CoxeterElement& c);
std::vector<Element> alignment_mismatches_parallel(const CoxeterElement& c);

}  // namespace coxsort
