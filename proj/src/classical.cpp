#include "coxsort/classical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "coxsort/errors.hpp"

namespace coxsort {

namespace {

int classical_rank(const CoxeterSystem& sys, Kind kind) {
  int n = sys.rank();
  CoxeterMatrix expected = kind == Kind::A   ? CoxeterMatrix::type_a(n)
                           : kind == Kind::B ? CoxeterMatrix::type_b(n)
                                             : CoxeterMatrix::type_d(n);
  if (sys.matrix().entries() != expected.entries())
    throw KindMismatch("system was not built from the named classical type");
  return n;
}

// Index of position i (in +-[n] for B/D) within the long one-line array.
int long_index(int n, int i) { return i < 0 ? i + n : n + i - 1; }

void apply_generator(OneLine& p, int s) {
  int n = p.n;
  auto swap_positions = [&](int i, int j) {
    std::swap(p.entries[long_index(n, i)], p.entries[long_index(n, j)]);
  };
  switch (p.kind) {
    case Kind::A:
      std::swap(p.entries[s], p.entries[s + 1]);
      break;
    case Kind::B:
      if (s == 0) {
        swap_positions(-1, 1);
      } else {
        swap_positions(s, s + 1);
        swap_positions(-s - 1, -s);
      }
      break;
    case Kind::D:
      if (s == 0) {
        swap_positions(-2, 1);
        swap_positions(-1, 2);
      } else {
        swap_positions(s, s + 1);
        swap_positions(-s - 1, -s);
      }
      break;
  }
}

std::optional<int> one_line_descent(const OneLine& p) {
  int n = p.n;
  switch (p.kind) {
    case Kind::A:
      for (int s = 0; s + 1 <= n; ++s)
        if (p.entries[s] > p.entries[s + 1]) return s;
      return std::nullopt;
    case Kind::B:
      if (p.at(1) < p.at(-1)) return 0;
      for (int s = 1; s < n; ++s)
        if (p.at(s + 1) < p.at(s)) return s;
      return std::nullopt;
    case Kind::D:
      if (p.at(-1) > p.at(2)) return 0;
      for (int s = 1; s < n; ++s)
        if (p.at(s) > p.at(s + 1)) return s;
      return std::nullopt;
  }
  return std::nullopt;
}

void validate(const OneLine& p) {
  int n = p.n;
  if (p.kind == Kind::A) {
    std::vector<int> sorted = p.entries;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i <= n; ++i)
      if (sorted[i] != i + 1)
        throw KindMismatch("type A one-line is not a permutation of [n+1]");
    return;
  }
  if (static_cast<int>(p.entries.size()) != 2 * n)
    throw KindMismatch("long one-line must have length 2n");
  int negatives = 0;
  for (int i = 1; i <= n; ++i) {
    int v = p.at(i);
    if (v == 0 || std::abs(v) > n || p.at(-i) != -v)
      throw KindMismatch("long one-line must be antisymmetric over +-[n]");
    if (v < 0) ++negatives;
  }
  std::vector<int> seen(n + 1, 0);
  for (int i = 1; i <= n; ++i) seen[std::abs(p.at(i))]++;
  for (int v = 1; v <= n; ++v)
    if (seen[v] != 1) throw KindMismatch("long one-line repeats a value");
  if (p.kind == Kind::D && negatives % 2 != 0)
    throw KindMismatch("type D one-line must be even-signed");
}

}  // namespace

int OneLine::at(int position) const {
  if (kind == Kind::A) return entries[position - 1];
  return entries[long_index(n, position)];
}

OneLine to_one_line(const Element& w, Kind kind) {
  const CoxeterSystem& sys = w.system();
  int n = classical_rank(sys, kind);
  OneLine p{kind, n, {}};
  if (kind == Kind::A) {
    p.entries.resize(n + 1);
    std::iota(p.entries.begin(), p.entries.end(), 1);
  } else {
    p.entries.resize(2 * n);
    for (int i = -n; i <= n; ++i)
      if (i != 0) p.entries[long_index(n, i)] = i;
  }
  for (int s : w.reduced_word()) apply_generator(p, s);
  return p;
}

Element from_one_line(const CoxeterSystem& sys, const OneLine& p) {
  classical_rank(sys, p.kind);
  validate(p);
  OneLine cur = p;
  ReducedWord word;
  while (auto s = one_line_descent(cur)) {
    apply_generator(cur, *s);
    word.push_back(*s);
  }
  std::reverse(word.begin(), word.end());
  return Element::from_word(sys, word);
}

int transposition_reflection(const CoxeterSystem& sys, Kind kind, int i,
                             int j) {
  int n = classical_rank(sys, kind);
  OneLine p{kind, n, {}};
  if (kind == Kind::A) {
    p.entries.resize(n + 1);
    std::iota(p.entries.begin(), p.entries.end(), 1);
    std::swap(p.entries[i - 1], p.entries[j - 1]);
  } else {
    p.entries.resize(2 * n);
    for (int v = -n; v <= n; ++v)
      if (v != 0) p.entries[long_index(n, v)] = v;
    std::swap(p.entries[long_index(n, i)], p.entries[long_index(n, j)]);
    if (j != -i)
      std::swap(p.entries[long_index(n, -i)], p.entries[long_index(n, -j)]);
  }
  int id = from_one_line(sys, p).reflection_id();
  if (id < 0) throw Error("transposition did not evaluate to a reflection");
  return id;
}

bool Barring::is_upper(int v) const {
  if (kind == Kind::D && std::abs(v) == n) return true;
  return upper.count(v) > 0;
}

bool Barring::is_lower(int v) const {
  if (kind == Kind::D && std::abs(v) == n) return true;
  return lower.count(v) > 0;
}

bool Barring::is_central(int v) const {
  if (kind != Kind::D) return false;
  return std::abs(v) == (d_symmetric ? 1 : 2);
}

Barring barring(const CoxeterElement& c, Kind kind) {
  const CoxeterSystem& sys = c.system();
  int n = classical_rank(sys, kind);
  if (c.size() != n) throw KindMismatch("barring needs a full Coxeter element");
  Barring b{kind, n, false, {}, {}};
  auto add = [&](int v, bool up) {
    if (up) {
      b.upper.insert(v);
      if (kind != Kind::A) b.lower.insert(-v);
    } else {
      b.lower.insert(v);
      if (kind != Kind::A) b.upper.insert(-v);
    }
  };
  switch (kind) {
    case Kind::A:
      // i is upper-barred iff the generator exchanging i, i+1 comes
      // before the one exchanging i-1, i.
      for (int i = 2; i <= n; ++i) add(i, c.edge(i - 1, i - 2));
      break;
    case Kind::B:
      for (int i = 1; i <= n - 1; ++i) add(i, c.edge(i, i - 1));
      break;
    case Kind::D: {
      // Symmetric Coxeter elements are fixed by the s0 <-> s1 swap: the
      // edges s0--s2 and s1--s2 point the same way relative to s2.
      b.d_symmetric = c.edge(0, 2) == c.edge(1, 2);
      for (int i = 3; i <= n - 1; ++i) add(i, c.edge(i, i - 1));
      if (b.d_symmetric) {
        add(2, c.edge(2, 0));  // upper iff s2 -> s0 (and s2 -> s1)
      } else {
        // 1 lower iff s0 -> s2 and s2 -> s1; 1 upper iff s2 -> s0 and s1 -> s2.
        add(1, c.edge(2, 0));
      }
      break;
    }
  }
  return b;
}

namespace {

bool triple_scan(const OneLine& p,
                 const std::function<bool(int, int, int)>& forbidden) {
  int len = static_cast<int>(p.entries.size());
  for (int a = 0; a < len; ++a)
    for (int b = a + 1; b < len; ++b)
      for (int c = b + 1; c < len; ++c)
        if (forbidden(p.entries[a], p.entries[b], p.entries[c])) return true;
  return false;
}

bool distinct_abs(int x, int y, int z) {
  return std::abs(x) != std::abs(y) && std::abs(x) != std::abs(z) &&
         std::abs(y) != std::abs(z);
}

}  // namespace

bool condition_A(const OneLine& p, const Barring& b) {
  if (p.kind != Kind::A || b.kind != Kind::A)
    throw KindMismatch("condition (A) needs type A data");
  // (A1) no subsequence  ^j k i  with i < j < k.
  bool a1 = triple_scan(p, [&](int x, int y, int z) {
    return b.is_upper(x) && z < x && x < y;
  });
  // (A2) no subsequence  k i _j  with i < j < k.
  bool a2 = triple_scan(p, [&](int x, int y, int z) {
    return b.is_lower(z) && y < z && z < x;
  });
  return !a1 && !a2;
}

bool condition_B(const OneLine& p, const Barring& b) {
  if (p.kind != Kind::B || b.kind != Kind::B)
    throw KindMismatch("condition (B) needs type B data");
  // The two stated forms are equivalent by the symmetry of the long
  // one-line notation; both are checked.
  bool up = triple_scan(p, [&](int x, int y, int z) {
    return b.is_upper(x) && z < x && x < y;
  });
  bool down = triple_scan(p, [&](int x, int y, int z) {
    return b.is_lower(z) && y < z && z < x;
  });
  return !up && !down;
}

bool condition_D(const OneLine& p, const Barring& b) {
  if (p.kind != Kind::D || b.kind != Kind::D)
    throw KindMismatch("condition (D) needs type D data");
  // Scanning every triple of the long one-line covers each clause together
  // with its centrally symmetric mirror.
  bool d1 = triple_scan(p, [&](int x, int y, int z) {
    return distinct_abs(x, y, z) && b.is_upper(x) && z < x && x < y;
  });
  bool d2 = triple_scan(p, [&](int x, int y, int z) {
    return distinct_abs(x, y, z) && b.is_central(x) && b.is_lower(y) &&
           b.is_lower(z) && z < x && x < y;
  });
  bool d3 = triple_scan(p, [&](int x, int y, int z) {
    return distinct_abs(x, y, z) && b.is_central(x) && b.is_upper(y) &&
           b.is_lower(z) && -y < z && z < x && x < y;
  });
  bool d4 = triple_scan(p, [&](int x, int y, int z) {
    return distinct_abs(x, y, z) && b.is_central(x) && b.is_lower(y) &&
           b.is_upper(z) && z < x && x < y && y < -z;
  });
  return !d1 && !d2 && !d3 && !d4;
}

bool condition_for(const OneLine& p, const Barring& b) {
  switch (p.kind) {
    case Kind::A:
      return condition_A(p, b);
    case Kind::B:
      return condition_B(p, b);
    case Kind::D:
      return condition_D(p, b);
  }
  throw KindMismatch("unknown kind");
}

bool is_231_avoiding(const OneLine& p) {
  if (p.kind != Kind::A) throw KindMismatch("231-avoidance is a type A notion");
  return !triple_scan(
      p, [](int x, int y, int z) { return z < x && x < y; });
}

std::vector<int> one_line_descents(const OneLine& p) {
  std::vector<int> out;
  int n = p.n;
  switch (p.kind) {
    case Kind::A:
      for (int s = 0; s + 1 <= n; ++s)
        if (p.entries[s] > p.entries[s + 1]) out.push_back(s);
      break;
    case Kind::B:
      if (p.at(1) < p.at(-1)) out.push_back(0);
      for (int s = 1; s < n; ++s)
        if (p.at(s + 1) < p.at(s)) out.push_back(s);
      break;
    case Kind::D:
      if (p.at(-1) > p.at(2)) out.push_back(0);
      for (int s = 1; s < n; ++s)
        if (p.at(s) > p.at(s + 1)) out.push_back(s);
      break;
  }
  return out;
}

}  // namespace coxsort
