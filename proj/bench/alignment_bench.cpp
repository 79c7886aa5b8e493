// Times the serial and OpenMP alignment-battery kernels on a few groups
// and reports the speedup. Both kernels must return identical mismatch
// lists (expected empty).

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "coxsort/coxeter_matrix.hpp"
#include "coxsort/enumeration.hpp"
#include "coxsort/sorting.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double run_ms(const std::function<std::vector<coxsort::Element>()>& fn,
              int reps, std::size_t& mismatches) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    auto start = Clock::now();
    auto out = fn();
    auto stop = Clock::now();
    mismatches = out.size();
    best = std::min(
        best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> groups{"A4", "B3", "H3", "D4"};
  if (argc > 1) groups.assign(argv + 1, argv + argc);
  for (const std::string& name : groups) {
    coxsort::CoxeterSystem sys(coxsort::CoxeterMatrix::from_name(name));
    coxsort::ReducedWord word(sys.rank());
    std::iota(word.begin(), word.end(), 0);
    coxsort::CoxeterElement c(sys, word);

    std::size_t serial_bad = 0, parallel_bad = 0;
    double serial =
        run_ms([&] { return coxsort::alignment_mismatches_serial(c); }, 3,
               serial_bad);
    double parallel =
        run_ms([&] { return coxsort::alignment_mismatches_parallel(c); }, 3,
               parallel_bad);
    bool agree =
        coxsort::alignment_mismatches_serial(c) ==
        coxsort::alignment_mismatches_parallel(c);
    std::cout << name << "  serial " << serial << " ms  parallel " << parallel
              << " ms  speedup " << serial / parallel << "x  mismatches "
              << serial_bad << "/" << parallel_bad
              << (agree ? "" : "  KERNELS DISAGREE") << "\n";
  }
  return 0;
}
