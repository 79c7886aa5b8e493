#include "coxsort/noncrossing.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "coxsort/errors.hpp"

namespace coxsort {

namespace {

constexpr double kPivotTol = 1e-8;

Eigen::MatrixXd action_matrix(const Element& w) {
  int n = w.system().rank();
  Eigen::MatrixXd M(n, n);
  std::vector<Root> cols = w.matrix_columns();
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < n; ++i) M(i, s) = cols[s][i];
  return M;
}

// Basis of the fixed space of w, in simple-root coordinates. Note that
// Eigen's kernel() pads a trivial kernel with one zero column, so the
// matrix is cut down to dimensionOfKernel() columns.
Eigen::MatrixXd fixed_space(const Element& w) {
  int n = w.system().rank();
  Eigen::MatrixXd M = action_matrix(w) - Eigen::MatrixXd::Identity(n, n);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  lu.setThreshold(kPivotTol);
  Eigen::Index dim = lu.dimensionOfKernel();
  if (dim == 0) return Eigen::MatrixXd(n, 0);
  return lu.kernel().leftCols(dim);
}

}  // namespace

int absolute_length(const Element& w) {
  int n = w.system().rank();
  return n - static_cast<int>(fixed_space(w).cols());
}

bool le_T(const Element& x, const Element& y) {
  return absolute_length(x) + absolute_length(x.inverse() * y) ==
         absolute_length(y);
}

std::vector<int> parabolic_reflections(const Element& x) {
  const CoxeterSystem& sys = x.system();
  int n = sys.rank();
  Eigen::MatrixXd fix = fixed_space(x);
  std::vector<int> out;
  for (int t = 0; t < sys.num_positive_roots(); ++t) {
    const Root& beta = sys.root(t);
    bool orthogonal = true;
    for (int k = 0; k < fix.cols() && orthogonal; ++k) {
      Root v(n);
      for (int i = 0; i < n; ++i) v[i] = fix(i, k);
      if (std::abs(sys.form(beta, v)) > 1e-7) orthogonal = false;
    }
    if (orthogonal) out.push_back(t);
  }
  return out;
}

std::vector<NCPartition> nc_interval(const CoxeterElement& c) {
  const CoxeterSystem& sys = c.system();
  Element top = c.element();
  int top_len = absolute_length(top);

  std::vector<NCPartition> out;
  std::vector<Element> layer{Element::identity(sys)};
  std::map<Element, bool> seen;
  seen.emplace(layer[0], true);
  for (int rank = 0; rank <= top_len; ++rank) {
    std::vector<Element> next;
    for (const Element& x : layer) {
      out.push_back(
          {x, rank, sys.canonical_generators(parabolic_reflections(x))});
      if (rank == top_len) continue;
      for (int t = 0; t < sys.num_positive_roots(); ++t) {
        Element y = x * Element::reflection(sys, t);
        if (absolute_length(y) != rank + 1) continue;
        if (absolute_length(y.inverse() * top) != top_len - rank - 1) continue;
        if (seen.emplace(y, true).second) next.push_back(y);
      }
    }
    // std::map insertion already visits layers in canonical element order,
    // but the frontier itself must be sorted for deterministic output.
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

namespace {

// Cover reflections of w, in the order their prefix reflections
// a_1..a_i..a_1 occur along the c-sorting word of w.
TWord ordered_cover_word(const Element& w, const CoxeterElement& c) {
  const CoxeterSystem& sys = w.system();
  SortingWord sw = sorting_word(w, c);
  std::vector<bool> is_cover(sys.num_positive_roots(), false);
  for (int t : w.cover_reflections()) is_cover[t] = true;
  TWord word;
  Element prefix = Element::identity(sys);
  for (int s : sw.letters) {
    int t = std::abs(prefix.act(sys.simple_root_id(s) + 1)) - 1;
    if (is_cover[t]) {
      word.push_back(t);
      is_cover[t] = false;
    }
    prefix = prefix.times_simple(s);
  }
  return word;
}

}  // namespace

Element nc_map(const Element& w, const CoxeterElement& c) {
  const CoxeterSystem& sys = w.system();
  Element image = Element::identity(sys);
  for (int t : ordered_cover_word(w, c))
    image = image * Element::reflection(sys, t);
  return image;
}

NCBijection::NCBijection(const CoxeterElement& c)
    : c_(c), sortables_(enumerate_sortables(c)) {
  images_.reserve(sortables_.size());
  std::map<Element, bool> seen;
  for (const Element& w : sortables_) {
    Element x = nc_map(w, c_);
    if (!seen.emplace(x, true).second)
      throw BijectionViolation("two sortable elements share an image");
    images_.push_back(std::move(x));
  }
}

Element NCBijection::inverse(const Element& x) const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == x) return sortables_[i];
  throw NotNoncrossing("element is not in the image of the sortable map");
}

TWord NCBijection::canonical_T_word(const Element& x) const {
  return ordered_cover_word(inverse(x), c_);
}

namespace {

std::shared_ptr<const NCBijection> cached_bijection(const CoxeterElement& c) {
  return c.system().memoized<NCBijection>(
      "nc_bijection", c.orientation_key(),
      [&] { return std::make_shared<const NCBijection>(c); });
}

}  // namespace

Element nc_inverse(const Element& x, const CoxeterElement& c) {
  return cached_bijection(c)->inverse(x);
}

TWord canonical_T_word(const Element& x, const CoxeterElement& c) {
  return cached_bijection(c)->canonical_T_word(x);
}

}  // namespace coxsort
