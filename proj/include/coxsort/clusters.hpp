#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "coxsort/sorting.hpp"

namespace coxsort {

// Element of T_{>=-1}: a reflection id, or a formal negative -s.
// Encoded as id >= 0 (reflection) or -(s+1) (formal negative of simple s).
struct AlmostReflection {
  int code;

  static AlmostReflection refl(int root_id) { return {root_id}; }
  static AlmostReflection neg(int s) { return {-(s + 1)}; }

  bool is_negative() const { return code < 0; }
  int root_id() const { return code; }
  int simple() const { return -code - 1; }

  auto operator<=>(const AlmostReflection&) const = default;
};

AlmostReflection sigma(const CoxeterSystem& sys, int s, AlmostReflection t);

// Smallest k admitting an initial-letter sequence s_0..s_k with t_k = -s_k.
int mu(AlmostReflection t, const CoxeterElement& c);

// Memoized c-compatibility; safe for concurrent queries.
class Compatibility {
 public:
  explicit Compatibility(const CoxeterSystem& sys) : sys_(&sys) {}

  bool compatible(AlmostReflection t1, AlmostReflection t2,
                  const CoxeterElement& c) const;

 private:
  bool evaluate(AlmostReflection t1, AlmostReflection t2,
                const CoxeterElement& c) const;

  const CoxeterSystem* sys_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<std::uint64_t, int, int>, bool> memo_;
};

bool compatible(AlmostReflection t1, AlmostReflection t2,
                const CoxeterElement& c);

using Cluster = std::vector<AlmostReflection>;  // sorted members

bool is_positive(const Cluster& cl);

// All elements of (T_J)_{>=-1} for the support J of c, sorted.
std::vector<AlmostReflection> almost_reflections(const CoxeterElement& c);

// Maximal cliques of the compatibility graph, deterministic order.
std::vector<Cluster> enumerate_clusters(const CoxeterElement& c,
                                        bool parallel_graph = false);

Cluster cl_map(const Element& w, const CoxeterElement& c);

}  // namespace coxsort
