#include "coxsort/root_system.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "coxsort/errors.hpp"

namespace coxsort {

namespace {

std::vector<long long> rounded(const Root& r) {
  std::vector<long long> key(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    key[i] = std::llround(r[i] / kRoundGrid);
  return key;
}

bool is_positive_root(const Root& r) {
  for (double x : r)
    if (x < -kSignEps) return false;
  return true;
}

bool is_negative_root(const Root& r) {
  for (double x : r)
    if (x > kSignEps) return false;
  return true;
}

Root negated(Root r) {
  for (double& x : r) x = -x;
  return r;
}

}  // namespace

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix)
    : matrix_(std::move(matrix)), n_(matrix_.rank()) {
  form_.assign(n_, std::vector<double>(n_, 0.0));
  for (int s = 0; s < n_; ++s) {
    for (int t = 0; t < n_; ++t) {
      int m = matrix_.order(s, t);
      if (m == kInfinite) throw NotFinite("infinite bond order m(s,t)");
      form_[s][t] = -std::cos(std::numbers::pi / m);
    }
  }

  Eigen::MatrixXd B(n_, n_);
  for (int s = 0; s < n_; ++s)
    for (int t = 0; t < n_; ++t) B(s, t) = form_[s][t];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(B);
  if (eig.eigenvalues().minCoeff() < 1e-9)
    throw NotFinite("bilinear form is not positive definite");

  enumerate_roots();
  build_rank_two_cache();
}

double CoxeterSystem::form(const Root& x, const Root& y) const {
  double acc = 0.0;
  for (int s = 0; s < n_; ++s) {
    if (x[s] == 0.0) continue;
    for (int t = 0; t < n_; ++t) acc += x[s] * form_[s][t] * y[t];
  }
  return acc;
}

Root CoxeterSystem::reflect_root(const Root& r, int s) const {
  double coef = 0.0;
  for (int t = 0; t < n_; ++t) coef += form_[s][t] * r[t];
  Root out = r;
  out[s] -= 2.0 * coef;  // simple roots have B(alpha_s, alpha_s) = 1
  return out;
}

std::optional<SignedId> CoxeterSystem::find_root(const Root& r) const {
  auto lookup = [this](const std::vector<long long>& k) -> int {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
    if (it != keys_.end() && *it == k)
      return static_cast<int>(it - keys_.begin());
    return -1;
  };
  if (is_positive_root(r)) {
    int id = lookup(rounded(r));
    if (id >= 0) return id + 1;
  } else if (is_negative_root(r)) {
    int id = lookup(rounded(negated(r)));
    if (id >= 0) return -(id + 1);
  }
  return std::nullopt;
}

void CoxeterSystem::enumerate_roots() {
  std::map<std::vector<long long>, Root> found;
  std::vector<Root> frontier;
  for (int s = 0; s < n_; ++s) {
    Root alpha(n_, 0.0);
    alpha[s] = 1.0;
    found.emplace(rounded(alpha), alpha);
    frontier.push_back(alpha);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& r : frontier) {
      for (int s = 0; s < n_; ++s) {
        Root image = reflect_root(r, s);
        if (is_negative_root(image)) continue;
        if (!is_positive_root(image))
          throw NotFinite("mixed-sign image in root closure");
        auto key = rounded(image);
        if (found.emplace(key, image).second) {
          next.push_back(std::move(image));
          if (static_cast<int>(found.size()) > kRootCap)
            throw NotFinite("root closure exceeded the hard cap");
        }
      }
    }
    frontier = std::move(next);
  }

  roots_.reserve(found.size());
  keys_.reserve(found.size());
  // std::map ordering is the canonical lexicographic order on rounded coords.
  for (auto& [key, r] : found) {
    keys_.push_back(key);
    roots_.push_back(std::move(r));
  }

  simple_id_.assign(n_, -1);
  for (int id = 0; id < static_cast<int>(roots_.size()); ++id) {
    int nonzero = -1;
    bool simple = true;
    for (int s = 0; s < n_; ++s) {
      if (std::abs(roots_[id][s]) > kSignEps) {
        if (nonzero >= 0) {
          simple = false;
          break;
        }
        nonzero = s;
      }
    }
    if (simple && nonzero >= 0 &&
        std::abs(roots_[id][nonzero] - 1.0) < kRoundGrid)
      simple_id_[nonzero] = id;
  }
  for (int s = 0; s < n_; ++s)
    if (simple_id_[s] < 0) throw NotFinite("simple root missing from closure");

  tables_.assign(n_, std::vector<SignedId>(roots_.size(), 0));
  for (int s = 0; s < n_; ++s) {
    for (int id = 0; id < static_cast<int>(roots_.size()); ++id) {
      auto image = find_root(reflect_root(roots_[id], s));
      if (!image) throw NotFinite("closure not closed under reflection");
      tables_[s][id] = *image;
    }
  }
}

bool CoxeterSystem::root_in_parabolic(int id, const std::vector<bool>& J) const {
  const Root& r = roots_[id];
  for (int s = 0; s < n_; ++s)
    if (!J[s] && std::abs(r[s]) > kSignEps) return false;
  return true;
}

namespace {

// Coordinates of r in the plane basis (b1, b2), least squares; nullopt when
// r is outside the plane.
std::optional<std::pair<double, double>> plane_coords(const Root& r,
                                                      const Root& b1,
                                                      const Root& b2) {
  int n = static_cast<int>(r.size());
  Eigen::MatrixXd A(n, 2);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    A(i, 0) = b1[i];
    A(i, 1) = b2[i];
    y(i) = r[i];
  }
  Eigen::Vector2d x = A.colPivHouseholderQr().solve(y);
  if ((A * x - y).norm() > 1e-7) return std::nullopt;
  return std::make_pair(x(0), x(1));
}

}  // namespace

RankTwoParabolic CoxeterSystem::rank_two_parabolic(int t1, int t2) const {
  const Root& b1 = roots_[t1];
  const Root& b2 = roots_[t2];
  struct Member {
    int id;
    double angle;
  };
  std::vector<Member> members;
  for (int id = 0; id < static_cast<int>(roots_.size()); ++id) {
    auto xy = plane_coords(roots_[id], b1, b2);
    if (!xy) continue;
    members.push_back({id, std::atan2(xy->second, xy->first)});
  }
  std::sort(members.begin(), members.end(),
            [](const Member& a, const Member& b) { return a.angle < b.angle; });
  // Positive roots of the parabolic lie in a cone of angle < pi; the
  // canonical generators are its extreme rays.
  int lo = members.front().id;
  int hi = members.back().id;

  RankTwoParabolic p;
  for (const Member& m : members) p.reflections.push_back(m.id);
  std::sort(p.reflections.begin(), p.reflections.end());
  p.canon_first = std::min(lo, hi);
  p.canon_second = std::max(lo, hi);
  double dot = form(roots_[p.canon_first], roots_[p.canon_second]);
  p.irreducible = std::abs(dot) > kSignEps;
  return p;
}

std::vector<int> CoxeterSystem::dyer_chain(const RankTwoParabolic& p) const {
  // The mirrors of t1, t1t2t1, ..., t2t1t2, t2 sweep monotonically from
  // the t1 ray to the t2 ray, so the chain is the angular order of the
  // member roots in the plane, anchored at the canonical pair.
  const Root& b1 = roots_[p.canon_first];
  const Root& b2 = roots_[p.canon_second];
  struct Member {
    int id;
    double angle;
  };
  std::vector<Member> members;
  for (int id : p.reflections) {
    auto xy = plane_coords(roots_[id], b1, b2);
    if (!xy) throw Error("member root left the rank-two plane");
    members.push_back({id, std::atan2(xy->second, xy->first)});
  }
  std::sort(members.begin(), members.end(),
            [](const Member& a, const Member& b) { return a.angle < b.angle; });
  std::vector<int> chain;
  chain.reserve(members.size());
  for (const Member& m : members) chain.push_back(m.id);
  if (chain.front() != p.canon_first) std::reverse(chain.begin(), chain.end());
  if (chain.front() != p.canon_first || chain.back() != p.canon_second)
    throw Error("chain endpoints are not the canonical generators");
  return chain;
}

std::vector<int> CoxeterSystem::canonical_generators(
    const std::vector<int>& refl_ids) const {
  std::vector<int> out;
  for (int t : refl_ids) {
    const Root& mirror = roots_[t];
    double norm = form(mirror, mirror);
    bool simple = true;
    for (int r : refl_ids) {
      if (r == t) continue;
      double c = 2.0 * form(mirror, roots_[r]) / norm;
      Root image = roots_[r];
      for (int i = 0; i < n_; ++i) image[i] -= c * mirror[i];
      if (!is_positive_root(image)) {
        simple = false;
        break;
      }
    }
    if (simple) out.push_back(t);
  }
  return out;
}

void CoxeterSystem::build_rank_two_cache() const {
  std::map<std::pair<int, int>, RankTwoParabolic> seen;
  int count = static_cast<int>(roots_.size());
  for (int t1 = 0; t1 < count; ++t1) {
    for (int t2 = t1 + 1; t2 < count; ++t2) {
      if (std::abs(form(roots_[t1], roots_[t2])) <= kSignEps)
        continue;  // commuting pair, reducible plane
      RankTwoParabolic p = rank_two_parabolic(t1, t2);
      if (!p.irreducible) continue;
      seen.emplace(std::make_pair(p.canon_first, p.canon_second), p);
    }
  }
  rank_two_cache_.clear();
  for (auto& [key, p] : seen) rank_two_cache_.push_back(std::move(p));
  rank_two_built_ = true;
}

const std::vector<RankTwoParabolic>& CoxeterSystem::rank_two_parabolics()
    const {
  return rank_two_cache_;
}

}  // namespace coxsort
