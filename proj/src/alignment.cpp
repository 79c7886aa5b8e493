#include "coxsort/alignment.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "coxsort/errors.hpp"

namespace coxsort {

std::vector<int> reflection_order(const CoxeterElement& c) {
  const CoxeterSystem& sys = c.system();
  Element w0 = longest_element(sys, c.support());
  SortingWord a = sorting_word(w0, c);
  std::vector<int> order;
  order.reserve(a.letters.size());
  Element prefix = Element::identity(sys);
  for (int s : a.letters) {
    // a1..a_{i-1} a_i a_{i-1}..a1 has root prefix(alpha_{a_i}).
    SignedId image = prefix.act(sys.simple_root_id(s) + 1);
    order.push_back(std::abs(image) - 1);
    prefix = prefix.times_simple(s);
  }
  return order;
}

OrientationEdge orient(const CoxeterElement& c, const RankTwoParabolic& p) {
  if (!p.irreducible) throw Reducible("canonical generators commute");
  std::vector<int> order = reflection_order(c);
  int pos1 = -1, pos2 = -1;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    if (order[i] == p.canon_first) pos1 = i;
    if (order[i] == p.canon_second) pos2 = i;
  }
  if (pos1 < 0 || pos2 < 0)
    throw Error("canonical generators outside the reflection order");
  if (pos1 < pos2) return {p.canon_first, p.canon_second};
  return {p.canon_second, p.canon_first};
}

namespace {

struct OrientedParabolic {
  const RankTwoParabolic* p;
  int source;
  int target;
  int target_conj_source;  // root id of t2 t1 t2
};

struct OrientationData {
  std::vector<OrientedParabolic> parabolics;
};

int reflect_id(const CoxeterSystem& sys, int mirror_id, int root_id) {
  const Root& mirror = sys.root(mirror_id);
  double coef =
      2.0 * sys.form(mirror, sys.root(root_id)) / sys.form(mirror, mirror);
  Root image = sys.root(root_id);
  for (std::size_t i = 0; i < image.size(); ++i) image[i] -= coef * mirror[i];
  auto id = sys.find_root(image);
  if (!id) throw Error("reflection image left the root system");
  return std::abs(*id) - 1;
}

// Per-orientation cache of the oriented parabolic list, owned by the
// system; the data is immutable once built and shared across readers.
std::shared_ptr<const OrientationData> oriented_parabolics(
    const CoxeterElement& c) {
  const CoxeterSystem& sys = c.system();
  return sys.memoized<OrientationData>(
      "oriented_parabolics", c.orientation_key(), [&] {
        auto data = std::make_shared<OrientationData>();
        std::vector<int> order = reflection_order(c);
        std::vector<int> rank_of(sys.num_positive_roots(), -1);
        for (int i = 0; i < static_cast<int>(order.size()); ++i)
          rank_of[order[i]] = i;
        for (const RankTwoParabolic& p : sys.rank_two_parabolics()) {
          bool inside = true;
          for (int t : p.reflections)
            if (rank_of[t] < 0) inside = false;
          if (!inside) continue;  // outside the support parabolic
          int source, target;
          if (rank_of[p.canon_first] < rank_of[p.canon_second]) {
            source = p.canon_first;
            target = p.canon_second;
          } else {
            source = p.canon_second;
            target = p.canon_first;
          }
          data->parabolics.push_back(
              {&p, source, target, reflect_id(sys, target, source)});
        }
        return data;
      });
}

}  // namespace

std::optional<RankTwoParabolic> alignment_violation(const Element& w,
                                                    const CoxeterElement& c) {
  auto data = oriented_parabolics(c);
  for (const OrientedParabolic& op : data->parabolics) {
    if (w.is_inversion(op.target_conj_source) && !w.is_inversion(op.source))
      return *op.p;
  }
  return std::nullopt;
}

bool is_aligned(const Element& w, const CoxeterElement& c) {
  return !alignment_violation(w, c).has_value();
}

bool is_aligned_segment_form(const Element& w, const CoxeterElement& c) {
  auto data = oriented_parabolics(c);
  for (const OrientedParabolic& op : data->parabolics) {
    if (w.is_inversion(op.source)) continue;
    for (int t : op.p->reflections) {
      if (t == op.target) continue;
      if (w.is_inversion(t)) return false;
    }
  }
  return true;
}

}  // namespace coxsort
