#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "coxsort/coxeter_matrix.hpp"

namespace coxsort {

// Coordinates over the simple-root basis.
using Root = std::vector<double>;

inline constexpr double kSignEps = 1e-9;
inline constexpr double kRoundGrid = 1e-6;
inline constexpr int kRootCap = 10000;

// Signed root index: +(id+1) for a positive root, -(id+1) for its negative.
using SignedId = int;

struct RankTwoParabolic {
  std::vector<int> reflections;  // all reflection ids in the plane, sorted
  int canon_first;               // extreme rays of the positive cone
  int canon_second;              // ordered by id: canon_first < canon_second
  bool irreducible;              // canonical generators do not commute
};

// Immutable after construction; safe for unrestricted concurrent reads.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterMatrix matrix);

  int rank() const { return n_; }
  const CoxeterMatrix& matrix() const { return matrix_; }

  double form(int s, int t) const { return form_[s][t]; }
  // Bilinear form extended to arbitrary coordinate vectors.
  double form(const Root& x, const Root& y) const;

  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  const Root& root(int id) const { return roots_[id]; }
  int simple_root_id(int s) const { return simple_id_[s]; }

  // Action of simple reflection s on positive root id.
  SignedId reflect(int s, int id) const { return tables_[s][id]; }

  // r - 2 B(r, alpha_s)/B(alpha_s, alpha_s) * alpha_s, as coordinates.
  Root reflect_root(const Root& r, int s) const;

  // Root id for arbitrary coordinates; nullopt when not (+/-) a system root.
  // Returned SignedId carries the sign.
  std::optional<SignedId> find_root(const Root& r) const;

  // All irreducible rank-two parabolic subgroups, deduplicated.
  const std::vector<RankTwoParabolic>& rank_two_parabolics() const;

  RankTwoParabolic rank_two_parabolic(int t1, int t2) const;

  // The Dyer chain t1, t1 t2 t1, ..., t2 t1 t2, t2 for the canonical
  // generator pair of p, as reflection ids.
  std::vector<int> dyer_chain(const RankTwoParabolic& p) const;

  // Canonical generators of the parabolic subgroup whose reflection set is
  // `refl_ids`: members that keep every other member's root positive.
  std::vector<int> canonical_generators(const std::vector<int>& refl_ids) const;

  // True when the root lies in span{alpha_j : j in J}.
  bool root_in_parabolic(int id, const std::vector<bool>& J) const;

  // Per-instance memo for derived data keyed by (tag, key). Tying the cache
  // to the system's lifetime keeps cached pointers into this object valid
  // and avoids collisions when another system reuses the same address.
  template <class T, class Build>
  std::shared_ptr<const T> memoized(const char* tag, std::uint64_t key,
                                    Build&& build) const {
    auto map_key = std::make_pair(tag, key);
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      auto it = memo_.find(map_key);
      if (it != memo_.end()) return std::static_pointer_cast<const T>(it->second);
    }
    std::shared_ptr<const T> built = build();
    std::lock_guard<std::mutex> lock(memo_mutex_);
    return std::static_pointer_cast<const T>(
        memo_.try_emplace(map_key, built).first->second);
  }

  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

 private:
  void enumerate_roots();
  void build_rank_two_cache() const;

  CoxeterMatrix matrix_;
  int n_;
  std::vector<std::vector<double>> form_;
  std::vector<Root> roots_;
  std::vector<std::vector<long long>> keys_;  // rounded coords, sorted
  std::vector<int> simple_id_;
  std::vector<std::vector<SignedId>> tables_;
  mutable std::vector<RankTwoParabolic> rank_two_cache_;
  mutable bool rank_two_built_ = false;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<const char*, std::uint64_t>,
                   std::shared_ptr<const void>>
      memo_;
};

}  // namespace coxsort
