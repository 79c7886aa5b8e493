#include <Eigen/Dense>
#include <algorithm>
#include <random>
#include <set>

#include "coxsort/alignment.hpp"
#include "coxsort/classical.hpp"
#include "coxsort/clusters.hpp"
#include "coxsort/enumeration.hpp"
#include "coxsort/errors.hpp"
#include "coxsort/noncrossing.hpp"
#include "coxsort/serialize.hpp"

namespace coxsort {

namespace {

std::vector<Element> verify_population(const CoxeterElement& c,
                                       const VerifyOptions& opts) {
  const CoxeterSystem& sys = c.system();
  if (opts.mode == VerifyMode::Exhaustive) {
    std::vector<Element> out;
    for (const Element& w : all_elements(sys))
      if (w.in_standard_parabolic(c.support())) out.push_back(w);
    return out;
  }
  std::vector<int> letters;
  for (int s = 0; s < sys.rank(); ++s)
    if (c.support()[s]) letters.push_back(s);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> len(0, 2 * sys.num_positive_roots());
  std::vector<Element> out;
  out.reserve(opts.sample_size);
  for (int i = 0; i < opts.sample_size; ++i) {
    Element w = Element::identity(sys);
    int steps = len(rng);
    for (int k = 0; k < steps; ++k) w = w.times_simple(letters[pick(rng)]);
    out.push_back(std::move(w));
  }
  return out;
}

Eigen::MatrixXd fixed_space_of(const Element& w) {
  int n = w.system().rank();
  Eigen::MatrixXd M(n, n);
  std::vector<Root> cols = w.matrix_columns();
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < n; ++i) M(i, s) = cols[s][i];
  M -= Eigen::MatrixXd::Identity(n, n);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  lu.setThreshold(1e-8);
  Eigen::Index dim = lu.dimensionOfKernel();
  if (dim == 0) return Eigen::MatrixXd(n, 0);
  return lu.kernel().leftCols(dim);
}

int rank_of(const Eigen::MatrixXd& m) {
  if (m.cols() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-8);
  return static_cast<int>(lu.rank());
}

// U_x contains U_y when appending y's basis does not raise the rank.
bool space_contains(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  Eigen::MatrixXd both(x.rows(), x.cols() + y.cols());
  both << x, y;
  return rank_of(both) == rank_of(x);
}

std::optional<Kind> detect_kind(const CoxeterSystem& sys) {
  int n = sys.rank();
  const auto& e = sys.matrix().entries();
  if (n >= 1 && e == CoxeterMatrix::type_a(n).entries()) return Kind::A;
  if (n >= 2 && e == CoxeterMatrix::type_b(n).entries()) return Kind::B;
  if (n >= 4 && e == CoxeterMatrix::type_d(n).entries()) return Kind::D;
  return std::nullopt;
}

// Reflection id of s t s for a simple letter s.
int conj_by_simple(const CoxeterSystem& sys, int s, int t) {
  return std::abs(sys.reflect(s, t)) - 1;
}

std::vector<std::vector<bool>> support_subsets(const CoxeterSystem& sys,
                                               const std::vector<bool>& support,
                                               std::size_t cap) {
  std::vector<int> letters;
  for (int s = 0; s < sys.rank(); ++s)
    if (support[s]) letters.push_back(s);
  std::vector<std::vector<bool>> out;
  std::size_t total = 1ull << letters.size();
  for (std::size_t mask = 0; mask < total && out.size() < cap; ++mask) {
    std::vector<bool> J(sys.rank(), false);
    for (std::size_t i = 0; i < letters.size(); ++i)
      if (mask & (1ull << i)) J[letters[i]] = true;
    out.push_back(std::move(J));
  }
  return out;
}

}  // namespace

VerifyReport verify_all(const CoxeterElement& c, const VerifyOptions& opts) {
  const CoxeterSystem& sys = c.system();
  VerifyReport report;
  auto add = [&](const std::string& name) -> std::size_t {
    report.checks.push_back({name, true, 0, ""});
    return report.checks.size() - 1;
  };
  auto at = [&](std::size_t i) -> CheckResult& { return report.checks[i]; };

  std::vector<Element> population = verify_population(c, opts);
  std::vector<Element> sortables = enumerate_sortables(c);
  std::vector<int> initials = c.initial_letters();
  std::vector<int> finals = c.final_letters();
  int support_size = 0;
  for (bool b : c.support()) support_size += b ? 1 : 0;
  auto support_minus = [&](int s) {
    std::vector<bool> J = c.support();
    J[s] = false;
    return J;
  };

  {
    std::size_t i = add("counts");
    at(i).cases = 1;
    CountReport cr = count_report(c);
    if (!cr.all_match)
      at(i).fail("formula " + std::to_string(cr.catalan) + " sortable " +
                 std::to_string(cr.sortable_count) + " nc " +
                 std::to_string(cr.nc_count) + " cluster " +
                 std::to_string(cr.cluster_count));
  }

  {
    std::size_t i = add("sortable equals aligned");
    at(i).cases = static_cast<long long>(population.size());
    for (const Element& w : population) {
      if (is_sortable(w, c) != is_aligned(w, c)) at(i).fail(element_string(w));
      if (is_aligned(w, c) != is_aligned_segment_form(w, c))
        at(i).fail("segment form at " + element_string(w));
    }
    if (opts.parallel && opts.mode == VerifyMode::Exhaustive) {
      std::vector<Element> serial = alignment_mismatches_serial(c);
      std::vector<Element> parallel = alignment_mismatches_parallel(c);
      if (serial != parallel) at(i).fail("serial and parallel kernels disagree");
      if (!serial.empty()) at(i).fail(element_string(serial.front()));
    }
  }

  {
    std::size_t i = add("sortable recursion");
    for (const Element& w : population) {
      bool direct = is_sortable(w, c);
      for (int s : initials) {
        ++at(i).cases;
        if (w.left_descent(s)) {
          if (direct != is_sortable(w.simple_times(s), c.conjugate(s)))
            at(i).fail(element_string(w));
        } else {
          std::vector<bool> J = support_minus(s);
          bool inside = w.in_standard_parabolic(J);
          bool recursive = inside && is_sortable(w, c.restrict(J));
          if (direct != recursive) at(i).fail(element_string(w));
          if (direct && !inside)
            at(i).fail("sortable escapes the parabolic: " + element_string(w));
        }
      }
    }
  }

  {
    std::size_t i = add("sortable support restriction");
    for (const Element& w : population) {
      std::vector<bool> Jw(sys.rank(), false);
      for (int s : w.support()) Jw[s] = true;
      ++at(i).cases;
      if (is_sortable(w, c) != is_sortable(w, c.restrict(Jw)))
        at(i).fail(element_string(w));
    }
  }

  if (auto kind = detect_kind(sys);
      kind && support_size == sys.rank()) {
    std::size_t i = add("pattern condition");
    Barring b = barring(c, *kind);
    for (const Element& w : population) {
      ++at(i).cases;
      if (is_sortable(w, c) != condition_for(to_one_line(w, *kind), b))
        at(i).fail(element_string(w));
    }
  }

  std::vector<NCPartition> interval = nc_interval(c);

  {
    std::size_t i = add("noncrossing bijection");
    at(i).cases = static_cast<long long>(sortables.size());
    try {
      NCBijection bij(c);
      std::set<Element> images(bij.images().begin(), bij.images().end());
      std::set<Element> interval_set;
      for (const NCPartition& x : interval) interval_set.insert(x.element);
      if (images != interval_set)
        at(i).fail("image set differs from the interval");
      for (std::size_t k = 0; k < sortables.size(); ++k) {
        if (absolute_length(bij.images()[k]) !=
            static_cast<int>(sortables[k].descents().size()))
          at(i).fail("rank mismatch at " + element_string(sortables[k]));
        if (bij.inverse(bij.images()[k]) != sortables[k])
          at(i).fail("inverse mismatch at " + element_string(sortables[k]));
      }
    } catch (const Error& e) {
      at(i).fail(e.what());
    }
  }

  {
    std::size_t i = add("cover reflections generate the image");
    at(i).cases = static_cast<long long>(sortables.size());
    for (const Element& w : sortables) {
      Element x = nc_map(w, c);
      if (sys.canonical_generators(parabolic_reflections(x)) !=
          w.cover_reflections())
        at(i).fail(element_string(w));
    }
  }

  {
    std::size_t i = add("noncrossing conjugation");
    for (const Element& w : sortables) {
      for (int s : initials) {
        if (!w.left_descent(s)) continue;
        ++at(i).cases;
        Element srefl = Element::simple(sys, s);
        Element lhs = nc_map(w.simple_times(s), c.conjugate(s));
        std::vector<int> covers = w.cover_reflections();
        bool s_cover = std::binary_search(covers.begin(), covers.end(),
                                          sys.simple_root_id(s));
        Element rhs = s_cover ? nc_map(w, c) * srefl
                              : srefl * nc_map(w, c) * srefl;
        if (lhs != rhs) at(i).fail(element_string(w));
      }
    }
  }

  {
    std::size_t i = add("final letter covers");
    for (const Element& w : sortables) {
      for (int s : finals) {
        ++at(i).cases;
        std::vector<int> covers = w.cover_reflections();
        bool s_cover = std::binary_search(covers.begin(), covers.end(),
                                          sys.simple_root_id(s));
        if (w.left_descent(s) != s_cover) at(i).fail(element_string(w));
      }
    }
  }

  {
    std::size_t i = add("other covers stay parabolic");
    for (const Element& w : sortables) {
      std::vector<int> covers = w.cover_reflections();
      for (int s : initials) {
        if (!std::binary_search(covers.begin(), covers.end(),
                                sys.simple_root_id(s)))
          continue;
        ++at(i).cases;
        std::vector<bool> J = support_minus(s);
        for (int t : covers)
          if (t != sys.simple_root_id(s) && !sys.root_in_parabolic(t, J))
            at(i).fail(element_string(w));
      }
      for (int s : finals) {
        if (!std::binary_search(covers.begin(), covers.end(),
                                sys.simple_root_id(s)))
          continue;
        ++at(i).cases;
        std::vector<bool> J = support_minus(s);
        for (int t : covers)
          if (t != sys.simple_root_id(s) && !sys.root_in_parabolic(t, J))
            at(i).fail(element_string(w));
      }
    }
  }

  {
    std::size_t i = add("reflection words");
    for (const NCPartition& x : interval) {
      ++at(i).cases;
      try {
        TWord word = canonical_T_word(x.element, c);
        if (static_cast<int>(word.size()) != x.rank)
          at(i).fail("word length differs from rank");
        Element prod = Element::identity(sys);
        for (int t : word) prod = prod * Element::reflection(sys, t);
        if (prod != x.element) at(i).fail(element_string(x.element));
      } catch (const Error& e) {
        at(i).fail(e.what());
      }
    }
  }

  {
    std::size_t i = add("absolute order by fixed spaces");
    std::vector<Eigen::MatrixXd> spaces;
    spaces.reserve(interval.size());
    for (const NCPartition& x : interval)
      spaces.push_back(fixed_space_of(x.element));
    for (std::size_t a = 0; a < interval.size(); ++a)
      for (std::size_t b = 0; b < interval.size(); ++b) {
        ++at(i).cases;
        bool order = le_T(interval[a].element, interval[b].element);
        bool contain = space_contains(spaces[a], spaces[b]);
        if (order != contain)
          at(i).fail(element_string(interval[a].element) + " vs " +
                     element_string(interval[b].element));
      }
  }

  {
    std::size_t i = add("parabolic membership below sc");
    for (int s : initials) {
      ReducedWord sc_word;
      for (int letter : c.word())
        if (letter != s) sc_word.push_back(letter);
      Element sc = Element::from_word(sys, sc_word);
      std::vector<bool> J = support_minus(s);
      for (const NCPartition& x : interval) {
        ++at(i).cases;
        if (x.element.in_standard_parabolic(J) != le_T(x.element, sc))
          at(i).fail(element_string(x.element));
      }
    }
  }

  std::vector<Cluster> clusters = enumerate_clusters(c);

  {
    std::size_t i = add("cluster bijection");
    at(i).cases = static_cast<long long>(sortables.size());
    try {
      std::set<Cluster> images;
      std::set<std::pair<int, int>> covered;
      for (const Element& w : sortables) {
        Cluster cl = cl_map(w, c);
        if (!images.insert(cl).second)
          at(i).fail("duplicate cluster at " + element_string(w));
        for (std::size_t a = 0; a < cl.size(); ++a)
          for (std::size_t b = a + 1; b < cl.size(); ++b)
            covered.emplace(cl[a].code, cl[b].code);
      }
      std::set<Cluster> maximal(clusters.begin(), clusters.end());
      if (images != maximal)
        at(i).fail("cluster map image differs from the maximal cliques");
      for (const Cluster& cl : clusters)
        if (static_cast<int>(cl.size()) != support_size)
          at(i).fail("clique of wrong size");
      // Compatibility must also be exactly joint cluster membership.
      std::vector<AlmostReflection> verts = almost_reflections(c);
      for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
          auto key = std::minmax(verts[a].code, verts[b].code);
          bool joint = covered.count({key.first, key.second}) > 0;
          if (compatible(verts[a], verts[b], c) != joint)
            at(i).fail("compatibility differs from joint membership");
        }
    } catch (const Error& e) {
      at(i).fail(e.what());
    }
  }

  {
    std::size_t i = add("cluster recursion");
    for (const Element& w : sortables) {
      for (int s : initials) {
        ++at(i).cases;
        Cluster direct = cl_map(w, c);
        Cluster recursive;
        if (w.left_descent(s)) {
          recursive = cl_map(w.simple_times(s), c.conjugate(s));
          for (AlmostReflection& t : recursive) t = sigma(sys, s, t);
          std::sort(recursive.begin(), recursive.end());
        } else {
          recursive = cl_map(w, c.restrict(support_minus(s)));
          recursive.push_back(AlmostReflection::neg(s));
          std::sort(recursive.begin(), recursive.end());
        }
        if (direct != recursive) at(i).fail(element_string(w));
      }
    }
  }

  {
    std::size_t i = add("final letter clusters");
    for (const Element& w : sortables) {
      Cluster cl = cl_map(w, c);
      for (int s : finals) {
        ++at(i).cases;
        bool member = std::binary_search(
            cl.begin(), cl.end(), AlmostReflection::refl(sys.simple_root_id(s)));
        if (w.left_descent(s) != member) at(i).fail(element_string(w));
      }
    }
  }

  {
    std::size_t i = add("rotation depth");
    for (AlmostReflection t : almost_reflections(c)) {
      ++at(i).cases;
      try {
        int depth = mu(t, c);
        bool initial_negative = t.is_negative() && c.is_initial(t.simple());
        if ((depth == 0) != initial_negative)
          at(i).fail(almost_reflection_string(sys, t));
      } catch (const Error& e) {
        at(i).fail(e.what());
      }
    }
  }

  {
    std::size_t i = add("sigma involution");
    for (int s = 0; s < sys.rank(); ++s) {
      if (!c.support()[s]) continue;
      for (AlmostReflection t : almost_reflections(c)) {
        ++at(i).cases;
        if (sigma(sys, s, sigma(sys, s, t)) != t)
          at(i).fail(almost_reflection_string(sys, t));
      }
    }
  }

  {
    std::size_t i = add("compatibility under inversion");
    CoxeterElement cinv = c.inverse();
    std::vector<AlmostReflection> verts = almost_reflections(c);
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        ++at(i).cases;
        if (compatible(verts[a], verts[b], c) !=
            compatible(verts[a], verts[b], cinv))
          at(i).fail(almost_reflection_string(sys, verts[a]) + " , " +
                     almost_reflection_string(sys, verts[b]));
      }
  }

  {
    std::size_t i = add("compatibility under restriction");
    for (int s = 0; s < sys.rank(); ++s) {
      if (!c.support()[s]) continue;
      std::vector<bool> J = support_minus(s);
      CoxeterElement sub = c.restrict(J);
      std::vector<AlmostReflection> verts = almost_reflections(sub);
      for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
          ++at(i).cases;
          if (compatible(verts[a], verts[b], c) !=
              compatible(verts[a], verts[b], sub))
            at(i).fail(almost_reflection_string(sys, verts[a]) + " , " +
                       almost_reflection_string(sys, verts[b]));
        }
    }
  }

  std::vector<int> order = reflection_order(c);
  std::vector<bool> inside(sys.num_positive_roots(), false);
  for (int t : order) inside[t] = true;
  std::vector<int> rank_in_order(sys.num_positive_roots(), -1);
  for (int k = 0; k < static_cast<int>(order.size()); ++k)
    rank_in_order[order[k]] = k;

  {
    std::size_t i = add("reflection order");
    at(i).cases = static_cast<long long>(order.size());
    std::set<int> distinct(order.begin(), order.end());
    if (distinct.size() != order.size()) at(i).fail("repeated reflection");
    for (int t = 0; t < sys.num_positive_roots(); ++t)
      if (sys.root_in_parabolic(t, c.support()) != inside[t])
        at(i).fail("order misses " + reflection_string(sys, t));
  }

  std::vector<const RankTwoParabolic*> local_parabolics;
  for (const RankTwoParabolic& p : sys.rank_two_parabolics()) {
    bool contained = true;
    for (int t : p.reflections) contained = contained && inside[t];
    if (contained) local_parabolics.push_back(&p);
  }

  {
    std::size_t i = add("rank two chains");
    for (const RankTwoParabolic* p : local_parabolics) {
      ++at(i).cases;
      std::vector<int> chain = sys.dyer_chain(*p);
      std::vector<int> sorted_chain = chain;
      std::sort(sorted_chain.begin(), sorted_chain.end());
      if (sorted_chain != p->reflections) at(i).fail("chain misses reflections");
      if (chain.front() != p->canon_first || chain.back() != p->canon_second)
        at(i).fail("chain endpoints are not the canonical pair");
      std::vector<int> canon = sys.canonical_generators(p->reflections);
      if (canon != std::vector<int>{p->canon_first, p->canon_second})
        at(i).fail("canonical generators differ from the extreme rays");
      if (p->irreducible) {
        OrientationEdge edge = orient(c, *p);
        if (std::min(edge.source, edge.target) != p->canon_first ||
            std::max(edge.source, edge.target) != p->canon_second)
          at(i).fail("orientation outside the canonical pair");
      }
    }
  }

  {
    std::size_t i = add("inversion segments");
    for (const Element& w : population) {
      for (const RankTwoParabolic* p : local_parabolics) {
        ++at(i).cases;
        std::vector<int> chain = sys.dyer_chain(*p);
        int m = static_cast<int>(chain.size());
        std::vector<bool> in(m);
        for (int k = 0; k < m; ++k) in[k] = w.is_inversion(chain[k]);
        int first = -1, last = -1;
        for (int k = 0; k < m; ++k)
          if (in[k]) {
            if (first < 0) first = k;
            last = k;
          }
        if (first < 0) continue;
        bool contiguous = true;
        for (int k = first; k <= last; ++k) contiguous = contiguous && in[k];
        bool segment = contiguous && (first == 0 || last == m - 1);
        if (!segment) {
          at(i).fail(element_string(w));
          break;
        }
      }
      if (!at(i).passed) break;
    }
  }

  {
    std::size_t i = add("initial letters are sources");
    for (int s : initials) {
      int sid = sys.simple_root_id(s);
      for (const RankTwoParabolic* p : local_parabolics) {
        if (!p->irreducible) continue;
        if (p->canon_first != sid && p->canon_second != sid) continue;
        ++at(i).cases;
        if (orient(c, *p).source != sid)
          at(i).fail(reflection_string(sys, sid));
      }
    }
  }

  // The orientation of a rank-two parabolic is a directed cycle on all of
  // its reflections, fixed by the directed edge between the canonical
  // generators: the cycle runs through the mirror-angle order.
  auto cycle_edges = [&](const CoxeterElement& cc, const RankTwoParabolic& p) {
    std::vector<int> chain = sys.dyer_chain(p);
    int m = static_cast<int>(chain.size());
    bool forward = orient(cc, p).source == p.canon_second;
    std::set<std::pair<int, int>> edges;
    for (int k = 0; k < m; ++k) {
      int a = chain[k], b = chain[(k + 1) % m];
      if (forward)
        edges.emplace(a, b);
      else
        edges.emplace(b, a);
    }
    return edges;
  };

  {
    std::size_t i = add("orientation conjugation");
    for (int s : initials) {
      CoxeterElement scs = c.conjugate(s);
      for (const RankTwoParabolic* p : local_parabolics) {
        if (!p->irreducible) continue;
        ++at(i).cases;
        std::set<std::pair<int, int>> mapped;
        for (auto [a, b] : cycle_edges(c, *p))
          mapped.emplace(conj_by_simple(sys, s, a), conj_by_simple(sys, s, b));
        int any = mapped.begin()->first;
        int other = mapped.begin()->second;
        RankTwoParabolic q = sys.rank_two_parabolic(any, other);
        if (mapped != cycle_edges(scs, q))
          at(i).fail(reflection_string(sys, p->canon_first) + " , " +
                     reflection_string(sys, p->canon_second));
      }
    }
  }

  {
    std::size_t i = add("orientation restriction");
    for (int s = 0; s < sys.rank(); ++s) {
      if (!c.support()[s] || support_size <= 1) continue;
      std::vector<bool> J = support_minus(s);
      CoxeterElement sub = c.restrict(J);
      for (const RankTwoParabolic* p : local_parabolics) {
        if (!p->irreducible) continue;
        bool in_J = true;
        for (int t : p->reflections) in_J = in_J && sys.root_in_parabolic(t, J);
        if (!in_J) continue;
        ++at(i).cases;
        OrientationEdge a = orient(c, *p);
        OrientationEdge b = orient(sub, *p);
        if (a.source != b.source || a.target != b.target)
          at(i).fail(reflection_string(sys, p->canon_first));
      }
    }
  }

  {
    std::size_t i = add("parabolic intersections");
    for (const std::vector<bool>& J : support_subsets(sys, c.support(), 256)) {
      for (const RankTwoParabolic* p : local_parabolics) {
        std::vector<int> members;
        for (int t : p->reflections)
          if (sys.root_in_parabolic(t, J)) members.push_back(t);
        if (members.empty()) continue;
        ++at(i).cases;
        bool all = members == p->reflections;
        bool single_canonical =
            members.size() == 1 && (members[0] == p->canon_first ||
                                    members[0] == p->canon_second);
        if (!all && !single_canonical)
          at(i).fail("intersection is neither full nor one canonical generator");
      }
    }
  }

  {
    std::size_t i = add("cover membership");
    auto subsets = support_subsets(sys, c.support(), 64);
    for (const Element& w : population) {
      std::vector<int> covers = w.cover_reflections();
      for (const std::vector<bool>& J : subsets) {
        ++at(i).cases;
        bool inside_J = w.in_standard_parabolic(J);
        bool covers_in = true;
        for (int t : covers) covers_in = covers_in && sys.root_in_parabolic(t, J);
        if (inside_J != covers_in) {
          at(i).fail(element_string(w));
          break;
        }
      }
      if (!at(i).passed) break;
    }
  }

  return report;
}

}  // namespace coxsort
