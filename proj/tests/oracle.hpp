#pragma once

// Brute-force reference implementations.  These build their own groups from
// scratch (no library code) and answer questions by exhaustive search, so the
// library can be checked against them.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

struct Table {
  std::vector<std::vector<int>> mul;  // mul[a][b] = ab
  int e = 0;

  int size() const { return static_cast<int>(mul.size()); }
  int operator()(int a, int b) const { return mul[a][b]; }
  int inv(int a) const {
    for (int b = 0; b < size(); ++b) {
      if (mul[a][b] == e) return b;
    }
    return -1;
  }
  int comm(int a, int b) const { return mul[mul[a][b]][mul[inv(a)][inv(b)]]; }
  bool commute(int a, int b) const { return mul[a][b] == mul[b][a]; }
};

// Closes a generating set under an explicit multiplication.
template <class T, class Mul>
std::pair<Table, std::vector<T>> close(const std::vector<T>& gens, const T& id, Mul mul) {
  std::vector<T> elems{id};
  std::map<T, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const T& g : gens) {
      T x = mul(elems[i], g);
      if (!index.count(x)) {
        index[x] = static_cast<int>(elems.size());
        elems.push_back(x);
      }
    }
  }
  Table t;
  t.mul.assign(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) t.mul[a][b] = index.at(mul(elems[a], elems[b]));
  }
  return {t, elems};
}

using PermV = std::vector<int>;

// (a*b)(x) = a(b(x))
inline PermV pmul(const PermV& a, const PermV& b) {
  PermV c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

inline PermV pid(int n) {
  PermV p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline Table cyclic(int n) {
  Table t;
  t.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t.mul[a][b] = (a + b) % n;
  }
  return t;
}

inline Table symmetric(int n) {
  PermV s = pid(n), c = pid(n);
  std::swap(s[0], s[1]);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return close<PermV>({s, c}, pid(n), pmul).first;
}

// dihedral group with 2m elements acting on an m-gon
inline Table dihedral(int m) {
  PermV rot = pid(m), ref = pid(m);
  for (int i = 0; i < m; ++i) {
    rot[i] = (i + 1) % m;
    ref[i] = (m - i) % m;
  }
  return close<PermV>({rot, ref}, pid(m), pmul).first;
}

// units +-1, +-i, +-j, +-k as (sign, unit) with unit 0..3 = 1, i, j, k
inline Table quaternion() {
  using Q = std::pair<int, int>;
  auto mul = [](const Q& a, const Q& b) {
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return Q{a.first * b.first * sign[a.second][b.second], unit[a.second][b.second]};
  };
  return close<Q>({{1, 1}, {1, 2}}, Q{1, 0}, mul).first;
}

// Heisenberg triples (a, b, c) over F_p with r-vectors a, b
inline Table heisenberg(int p, int r) {
  using H = std::vector<int>;  // a_1..a_r, b_1..b_r, c
  auto mul = [p, r](const H& x, const H& y) {
    H z(2 * r + 1);
    int dot = 0;
    for (int i = 0; i < r; ++i) dot += x[i] * y[r + i];
    for (int i = 0; i < 2 * r; ++i) z[i] = (x[i] + y[i]) % p;
    z[2 * r] = (x[2 * r] + y[2 * r] + dot) % p;
    return z;
  };
  std::vector<H> gens;
  for (int i = 0; i < 2 * r; ++i) {
    H g(2 * r + 1, 0);
    g[i] = 1;
    gens.push_back(g);
  }
  return close<H>(gens, H(2 * r + 1, 0), mul).first;
}

inline Table product(const Table& a, const Table& b) {
  const int n = a.size(), m = b.size();
  Table t;
  t.mul.assign(n * m, std::vector<int>(n * m));
  for (int x = 0; x < n * m; ++x) {
    for (int y = 0; y < n * m; ++y) t.mul[x][y] = a(x / m, y / m) * m + b(x % m, y % m);
  }
  t.e = a.e * m + b.e;
  return t;
}

// n x n matrices over F_p, row-major
using Mat = std::vector<int>;
inline Mat mat_mul(const Mat& a, const Mat& b, int n, int p) {
  Mat c(n * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += a[i * n + k] * b[k * n + j];
      c[i * n + j] = s % p;
    }
  }
  return c;
}
inline Mat mat_id(int n) {
  Mat m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}
inline Mat transvection(int n, int i, int j) {  // 1-based
  Mat m = mat_id(n);
  m[(i - 1) * n + (j - 1)] = 1;
  return m;
}

inline std::set<int> generated(const Table& t, const std::vector<int>& gens) {
  std::set<int> s{t.e};
  std::vector<int> frontier{t.e};
  while (!frontier.empty()) {
    const int x = frontier.back();
    frontier.pop_back();
    for (int g : gens) {
      const int y = t(x, g);
      if (s.insert(y).second) frontier.push_back(y);
    }
  }
  return s;
}

inline std::set<int> derived(const Table& t) {
  std::vector<int> comms;
  for (int a = 0; a < t.size(); ++a) {
    for (int b = 0; b < t.size(); ++b) comms.push_back(t.comm(a, b));
  }
  return generated(t, comms);
}

inline int center_order(const Table& t) {
  int n = 0;
  for (int a = 0; a < t.size(); ++a) {
    bool central = true;
    for (int b = 0; b < t.size(); ++b) central = central && t.commute(a, b);
    n += central;
  }
  return n;
}

inline int class_count(const Table& t) {
  std::set<std::set<int>> classes;
  for (int a = 0; a < t.size(); ++a) {
    std::set<int> cls;
    for (int g = 0; g < t.size(); ++g) cls.insert(t(t(g, a), t.inv(g)));
    classes.insert(cls);
  }
  return static_cast<int>(classes.size());
}

// Nilpotency class by the lower central series over all elements.
inline std::optional<int> nilpotency_class(const Table& t) {
  std::set<int> gamma;
  for (int a = 0; a < t.size(); ++a) gamma.insert(a);
  int c = 0;
  while (gamma.size() > 1) {
    std::vector<int> comms;
    for (int x : gamma) {
      for (int g = 0; g < t.size(); ++g) comms.push_back(t.comm(x, g));
    }
    std::set<int> next = generated(t, comms);
    if (next.size() == gamma.size()) return std::nullopt;
    gamma = std::move(next);
    ++c;
  }
  return c;
}

// Nilpotency class of the subgroup generated by gens.
inline std::optional<int> generated_class(const Table& t, const std::vector<int>& gens) {
  const std::set<int> h = generated(t, gens);
  const std::vector<int> elems(h.begin(), h.end());
  auto pos = [&](int x) { return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin()); };
  Table sub;
  sub.mul.assign(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) sub.mul[i][j] = pos(t(elems[i], elems[j]));
  }
  sub.e = pos(t.e);
  return nilpotency_class(sub);
}

// n-tuples generating a subgroup of class < q.
inline std::uint64_t nil_tuple_count(const Table& t, int n, int q) {
  std::vector<int> tup(n, 0);
  std::uint64_t count = 0;
  for (;;) {
    const auto c = generated_class(t, tup);
    count += c && *c < q;
    int k = 0;
    while (k < n && ++tup[k] == t.size()) tup[k++] = 0;
    if (k == n) break;
  }
  return count;
}

// Maps f: G -> Z/m with f(gh) = f(g) + f(h) whenever g and h commute, i.e.
// |Hom(H, Z/m)| for H the abelianized colimit over commuting pairs.
inline std::uint64_t additive_on_commuting(const Table& t, int m) {
  const int n = t.size();
  std::vector<int> f(n, -1);
  f[t.e] = 0;
  std::vector<int> order;
  for (int a = 0; a < n; ++a) {
    if (a != t.e) order.push_back(a);
  }
  auto consistent = [&]() {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ab = t(a, b);
        if (f[a] < 0 || f[b] < 0 || f[ab] < 0 || !t.commute(a, b)) continue;
        if ((f[a] + f[b]) % m != f[ab]) return false;
      }
    }
    return true;
  };
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (!consistent()) return;
    if (i == order.size()) {
      ++count;
      return;
    }
    for (int v = 0; v < m; ++v) {
      f[order[i]] = v;
      self(self, i + 1);
    }
    f[order[i]] = -1;
  };
  rec(rec, 0);
  return count;
}

// Pairwise-commuting n-tuples, by running through all of G^n.
inline std::uint64_t hom_count(const Table& t, int n) {
  const int g = t.size();
  std::vector<int> tup(n, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) ok = t.commute(tup[i], tup[j]);
    }
    count += ok;
    int k = 0;
    while (k < n && ++tup[k] == g) tup[k++] = 0;
    if (k == n) break;
  }
  return count;
}

// |{(x, y) : xy in [G, G]}|
inline std::uint64_t d2_count(const Table& t) {
  const std::set<int> d = derived(t);
  std::uint64_t n = 0;
  for (int x = 0; x < t.size(); ++x) {
    for (int y = 0; y < t.size(); ++y) n += d.count(t(x, y));
  }
  return n;
}

// Ordered pairs of non-identity elements that commute.
inline int commuting_nonidentity_pairs(const Table& t) {
  int n = 0;
  for (int a = 0; a < t.size(); ++a) {
    for (int b = 0; b < t.size(); ++b) n += a != t.e && b != t.e && t.commute(a, b);
  }
  return n;
}

}  // namespace oracle
