#include "coxsort/clusters.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <set>

#include "coxsort/errors.hpp"

namespace coxsort {

AlmostReflection sigma(const CoxeterSystem& sys, int s, AlmostReflection t) {
  if (t.is_negative())
    return t.simple() == s ? AlmostReflection::refl(sys.simple_root_id(s)) : t;
  if (t.root_id() == sys.simple_root_id(s)) return AlmostReflection::neg(s);
  return AlmostReflection::refl(std::abs(sys.reflect(s, t.root_id())) - 1);
}

int mu(AlmostReflection t, const CoxeterElement& c) {
  const CoxeterSystem& sys = c.system();
  auto at_goal = [&](AlmostReflection u, const CoxeterElement& cc) {
    return u.is_negative() && cc.is_initial(u.simple());
  };
  if (at_goal(t, c)) return 0;

  struct Node {
    AlmostReflection t;
    CoxeterElement c;
    int depth;
  };
  std::set<std::pair<int, std::uint64_t>> visited;
  std::deque<Node> frontier;
  frontier.push_back({t, c, 0});
  visited.emplace(t.code, c.orientation_key());
  while (!frontier.empty()) {
    Node node = std::move(frontier.front());
    frontier.pop_front();
    for (int s : node.c.initial_letters()) {
      AlmostReflection u = sigma(sys, s, node.t);
      CoxeterElement cc = node.c.conjugate(s);
      if (at_goal(u, cc)) return node.depth + 1;
      if (visited.emplace(u.code, cc.orientation_key()).second)
        frontier.push_back({u, std::move(cc), node.depth + 1});
    }
  }
  throw SearchExhausted("no initial-letter sequence reaches a negative");
}

namespace {

// Conjugation schedule that visits every orientation class: the path to the
// bipartite element, then the two color classes alternating.
std::vector<int> conjugation_schedule(const CoxeterElement& c, int length) {
  const CoxeterSystem& sys = c.system();
  std::vector<int> path = bipartite_path(c);
  std::vector<int> color = diagram_coloring(sys, c.support());
  std::vector<int> cls[2];
  for (int s = 0; s < sys.rank(); ++s)
    if (c.support()[s]) cls[color[s]].push_back(s);
  std::vector<int> schedule = path;
  int parity = 0;
  while (static_cast<int>(schedule.size()) < length) {
    schedule.insert(schedule.end(), cls[parity].begin(), cls[parity].end());
    parity = 1 - parity;
  }
  return schedule;
}

}  // namespace

bool Compatibility::compatible(AlmostReflection t1, AlmostReflection t2,
                               const CoxeterElement& c) const {
  if (t1 == t2) return true;
  auto key = std::make_tuple(c.orientation_key(), std::min(t1, t2).code,
                             std::max(t1, t2).code);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  bool value = evaluate(t1, t2, c);
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(key, value);
  return value;
}

bool Compatibility::evaluate(AlmostReflection t1, AlmostReflection t2,
                             const CoxeterElement& c) const {
  const CoxeterSystem& sys = *sys_;
  // -alpha_s is compatible with exactly the almost reflections avoiding s.
  auto resolve = [&](AlmostReflection neg,
                     AlmostReflection other) {
    int s = neg.simple();
    if (other.is_negative()) return true;
    std::vector<bool> J(sys.rank(), true);
    J[s] = false;
    return sys.root_in_parabolic(other.root_id(), J);
  };

  int cap = 8 * sys.num_positive_roots() + 4 * sys.rank();
  std::vector<int> schedule = conjugation_schedule(c, cap);
  CoxeterElement cur = c;
  for (int step = 0;; ++step) {
    if (t1.is_negative()) return resolve(t1, t2);
    if (t2.is_negative()) return resolve(t2, t1);
    if (step >= static_cast<int>(schedule.size()))
      throw IterationCap("compatibility reduction did not terminate");
    int s = schedule[step];
    t1 = sigma(sys, s, t1);
    t2 = sigma(sys, s, t2);
    cur = cur.conjugate(s);
  }
}

bool compatible(AlmostReflection t1, AlmostReflection t2,
                const CoxeterElement& c) {
  // One shared memo per system; Compatibility is internally synchronized.
  std::shared_ptr<const Compatibility> instance =
      c.system().memoized<Compatibility>("compatibility", 0, [&] {
        return std::make_shared<Compatibility>(c.system());
      });
  return instance->compatible(t1, t2, c);
}

bool is_positive(const Cluster& cl) {
  return std::none_of(cl.begin(), cl.end(),
                      [](AlmostReflection t) { return t.is_negative(); });
}

std::vector<AlmostReflection> almost_reflections(const CoxeterElement& c) {
  const CoxeterSystem& sys = c.system();
  std::vector<AlmostReflection> out;
  for (int s = sys.rank() - 1; s >= 0; --s)
    if (c.support()[s]) out.push_back(AlmostReflection::neg(s));
  for (int t = 0; t < sys.num_positive_roots(); ++t)
    if (sys.root_in_parabolic(t, c.support()))
      out.push_back(AlmostReflection::refl(t));
  return out;  // ascending code order
}

namespace {

struct CliqueSearch {
  const std::vector<AlmostReflection>& vertices;
  const std::vector<std::vector<bool>>& adj;
  std::vector<Cluster>& out;

  void run(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
    if (p.empty() && x.empty()) {
      Cluster cl;
      cl.reserve(r.size());
      for (int i : r) cl.push_back(vertices[i]);
      std::sort(cl.begin(), cl.end());
      out.push_back(std::move(cl));
      return;
    }
    // Pivot on the candidate with the most neighbours in p.
    int pivot = -1, best = -1;
    for (int u : p) {
      int d = 0;
      for (int v : p)
        if (adj[u][v]) ++d;
      if (d > best) {
        best = d;
        pivot = u;
      }
    }
    for (int u : x) {
      int d = 0;
      for (int v : p)
        if (adj[u][v]) ++d;
      if (d > best) {
        best = d;
        pivot = u;
      }
    }
    std::vector<int> candidates;
    for (int v : p)
      if (!adj[pivot][v]) candidates.push_back(v);
    for (int v : candidates) {
      std::vector<int> np, nx;
      for (int w : p)
        if (adj[v][w]) np.push_back(w);
      for (int w : x)
        if (adj[v][w]) nx.push_back(w);
      r.push_back(v);
      run(r, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }
};

}  // namespace

std::vector<Cluster> enumerate_clusters(const CoxeterElement& c,
                                        bool parallel_graph) {
  std::vector<AlmostReflection> verts = almost_reflections(c);
  int m = static_cast<int>(verts.size());
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
#pragma omp parallel for schedule(dynamic) if (parallel_graph)
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      adj[i][j] = compatible(verts[i], verts[j], c);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) adj[j][i] = adj[i][j];

  std::vector<Cluster> out;
  std::vector<int> r, p(m), x;
  for (int i = 0; i < m; ++i) p[i] = i;
  CliqueSearch search{verts, adj, out};
  search.run(r, std::move(p), std::move(x));
  std::sort(out.begin(), out.end());
  return out;
}

Cluster cl_map(const Element& w, const CoxeterElement& c) {
  const CoxeterSystem& sys = w.system();
  if (!is_sortable(w, c)) throw NotSortable("cluster map needs a sortable");
  if (c.size() == 0) {
    if (!w.is_identity())
      throw SystemMismatch("nonidentity element over empty support");
    return {};
  }
  int s = c.initial_letters().front();
  if (w.left_descent(s)) {
    Cluster inner = cl_map(w.simple_times(s), c.conjugate(s));
    for (AlmostReflection& t : inner) t = sigma(sys, s, t);
    std::sort(inner.begin(), inner.end());
    return inner;
  }
  std::vector<bool> J = c.support();
  J[s] = false;
  if (!w.in_standard_parabolic(J))
    throw NotSortable("element escapes the parabolic below an initial letter");
  Cluster inner = cl_map(w, c.restrict(J));
  inner.push_back(AlmostReflection::neg(s));
  std::sort(inner.begin(), inner.end());
  return inner;
}

}  // namespace coxsort
