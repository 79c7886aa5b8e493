#include "coxsort/enumeration.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "coxsort/alignment.hpp"
#include "coxsort/clusters.hpp"
#include "coxsort/errors.hpp"
#include "coxsort/noncrossing.hpp"
#include "coxsort/serialize.hpp"

namespace coxsort {

int Degrees::coxeter_number() const {
  int h = 1;
  for (const ComponentDegrees& comp : components) h = std::lcm(h, comp.h);
  return h;
}

std::vector<int> Degrees::all_exponents() const {
  std::vector<int> out;
  for (const ComponentDegrees& comp : components)
    out.insert(out.end(), comp.exponents.begin(), comp.exponents.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::vector<int>> diagram_components(const CoxeterSystem& sys,
                                                 const std::vector<bool>& J) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(sys.rank(), false);
  for (int start = 0; start < sys.rank(); ++start) {
    if (!J[start] || seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int t = 0; t < sys.rank(); ++t)
        if (J[t] && !seen[t] && sys.matrix().bond(comp[i], t)) {
          seen[t] = true;
          comp.push_back(t);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

int element_order(const Element& w, int cap) {
  Element power = w;
  for (int k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = power * w;
  }
  throw IterationCap("element order exceeded the cap");
}

ComponentDegrees component_degrees(const CoxeterSystem& sys,
                                   const std::vector<int>& comp) {
  ComponentDegrees out;
  out.simples = comp;
  Element c = Element::from_word(sys, comp);
  out.h = element_order(c, 200);

  int n = sys.rank();
  Eigen::MatrixXd M(n, n);
  std::vector<Root> cols = c.matrix_columns();
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < n; ++i) M(i, s) = cols[s][i];
  Eigen::EigenSolver<Eigen::MatrixXd> eig(M);
  for (int i = 0; i < n; ++i) {
    std::complex<double> lambda = eig.eigenvalues()(i);
    double theta = std::arg(lambda);
    if (theta < -1e-9) theta += 2.0 * std::numbers::pi;
    double m = theta * out.h / (2.0 * std::numbers::pi);
    long long rounded = std::llround(m);
    if (std::abs(m - rounded) > 1e-4)
      throw NonInteger("eigenvalue angle is not a multiple of pi/h");
    if (rounded > 0) out.exponents.push_back(static_cast<int>(rounded));
  }
  std::sort(out.exponents.begin(), out.exponents.end());
  if (static_cast<int>(out.exponents.size()) != static_cast<int>(comp.size()))
    throw NumericalDrift("wrong number of nontrivial eigenvalue angles");
  return out;
}

Degrees degrees_for(const CoxeterSystem& sys, const std::vector<bool>& J) {
  Degrees d;
  for (const std::vector<int>& comp : diagram_components(sys, J))
    d.components.push_back(component_degrees(sys, comp));
  return d;
}

}  // namespace

Degrees degrees(const CoxeterSystem& sys) {
  return degrees_for(sys, std::vector<bool>(sys.rank(), true));
}

long long catalan_formula(const Degrees& d) {
  long long result = 1;
  for (const ComponentDegrees& comp : d.components) {
    long long num = 1, den = 1;
    for (int e : comp.exponents) {
      num *= e + comp.h + 1;
      den *= e + 1;
      long long g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
    if (den != 1) throw NonInteger("degree product is not an integer");
    result *= num;
  }
  return result;
}

CountReport count_report(const CoxeterElement& c) {
  const CoxeterSystem& sys = c.system();
  int n = 0;
  for (bool b : c.support()) n += b ? 1 : 0;

  CountReport r;
  r.catalan = catalan_formula(degrees_for(sys, c.support()));
  r.narayana_by_descents.assign(n + 1, 0);
  r.narayana_by_rank.assign(n + 1, 0);

  for_each_sortable(c, [&](const Element& w) {
    ++r.sortable_count;
    r.narayana_by_descents[w.descents().size()]++;
    if (w.support() == [&] {
          std::vector<int> J;
          for (int s = 0; s < sys.rank(); ++s)
            if (c.support()[s]) J.push_back(s);
          return J;
        }())
      ++r.full_support_sortables;
  });

  for (const NCPartition& x : nc_interval(c)) {
    ++r.nc_count;
    r.narayana_by_rank[x.rank]++;
  }

  for (const Cluster& cl : enumerate_clusters(c)) {
    ++r.cluster_count;
    if (is_positive(cl)) ++r.positive_catalan;
  }

  r.all_match = r.catalan == r.sortable_count && r.catalan == r.nc_count &&
                r.catalan == r.cluster_count &&
                r.narayana_by_descents == r.narayana_by_rank &&
                r.positive_catalan == r.full_support_sortables;
  return r;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::vector<Element> alignment_mismatches_serial(const CoxeterElement& c) {
  std::vector<Element> out;
  for (const Element& w : all_elements(c.system())) {
    if (!w.in_standard_parabolic(c.support())) continue;
    if (is_sortable(w, c) != is_aligned(w, c)) out.push_back(w);
  }
  return out;
}

std::vector<Element> alignment_mismatches_parallel(const CoxeterElement& c) {
  std::vector<Element> population;
  for (const Element& w : all_elements(c.system()))
    if (w.in_standard_parabolic(c.support())) population.push_back(w);
  int m = static_cast<int>(population.size());
  std::vector<char> bad(m, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (int i = 0; i < m; ++i)
    bad[i] = is_sortable(population[i], c) != is_aligned(population[i], c);
  std::vector<Element> out;
  for (int i = 0; i < m; ++i)
    if (bad[i]) out.push_back(population[i]);
  return out;
}


std::vector<CoxeterElement> all_coxeter_elements(const CoxeterSystem& sys) {
  int n = sys.rank();
  std::vector<std::pair<int, int>> edges;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (sys.matrix().bond(s, t)) edges.emplace_back(s, t);
  int m = static_cast<int>(edges.size());

  std::vector<CoxeterElement> out;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (int e = 0; e < m; ++e) {
      auto [s, t] = edges[e];
      if (mask & (1ull << e)) std::swap(s, t);
      succ[s].push_back(t);
      ++indeg[t];
    }
    // Smallest-index-first topological sort; failure means a cycle.
    ReducedWord word;
    std::vector<int> deg = indeg;
    std::vector<bool> used(n, false);
    for (int step = 0; step < n; ++step) {
      int pick = -1;
      for (int s = 0; s < n; ++s)
        if (!used[s] && deg[s] == 0) {
          pick = s;
          break;
        }
      if (pick < 0) break;
      used[pick] = true;
      word.push_back(pick);
      for (int t : succ[pick]) --deg[t];
    }
    if (static_cast<int>(word.size()) == n)
      out.emplace_back(sys, std::move(word));
  }
  std::sort(out.begin(), out.end(),
            [](const CoxeterElement& a, const CoxeterElement& b) {
              return a.word() < b.word();
            });
  return out;
}

}  // namespace coxsort
