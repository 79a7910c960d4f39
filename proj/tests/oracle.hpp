#pragma once

// Brute-force reference implementations used as test oracles. Nothing here
// calls into the library's order-theoretic code: structures are plain
// boolean matrices, and every notion is computed from its definition.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "omplab/poset.hpp"

namespace oracle {

using Rel = std::vector<std::vector<bool>>;

struct Structure {
  Rel le;
  std::vector<int> inv;

  int size() const { return static_cast<int>(le.size()); }
};

inline Structure from_library(const omplab::OrthoPoset& p) {
  const int n = static_cast<int>(p.size());
  Structure s{Rel(n, std::vector<bool>(n)), std::vector<int>(n)};
  for (int x = 0; x < n; ++x) {
    s.inv[x] = static_cast<int>(p.invol(x));
    for (int y = 0; y < n; ++y) s.le[x][y] = p.leq(x, y);
  }
  return s;
}

inline bool is_partial_order(const Rel& le) {
  const int n = static_cast<int>(le.size());
  for (int x = 0; x < n; ++x) {
    if (!le[x][x]) return false;
    for (int y = 0; y < n; ++y) {
      if (x != y && le[x][y] && le[y][x]) return false;
      for (int z = 0; z < n; ++z)
        if (le[x][y] && le[y][z] && !le[x][z]) return false;
    }
  }
  return true;
}

// Least element of `set` under le, or -1.
inline int least_of(const Rel& le, const std::vector<int>& set) {
  for (int c : set) {
    bool below_all = true;
    for (int d : set) below_all = below_all && le[c][d];
    if (below_all) return c;
  }
  return -1;
}

inline int greatest_of(const Rel& le, const std::vector<int>& set) {
  for (int c : set) {
    bool above_all = true;
    for (int d : set) above_all = above_all && le[d][c];
    if (above_all) return c;
  }
  return -1;
}

inline std::vector<int> all_elements(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

inline int bottom(const Rel& le) { return least_of(le, all_elements(static_cast<int>(le.size()))); }
inline int top(const Rel& le) { return greatest_of(le, all_elements(static_cast<int>(le.size()))); }

inline std::vector<int> upper_bounds(const Rel& le, int a, int b) {
  std::vector<int> out;
  for (int u = 0; u < static_cast<int>(le.size()); ++u)
    if (le[a][u] && le[b][u]) out.push_back(u);
  return out;
}

inline std::vector<int> lower_bounds(const Rel& le, int a, int b) {
  std::vector<int> out;
  for (int u = 0; u < static_cast<int>(le.size()); ++u)
    if (le[u][a] && le[u][b]) out.push_back(u);
  return out;
}

inline int join(const Rel& le, int a, int b) { return least_of(le, upper_bounds(le, a, b)); }
inline int meet(const Rel& le, int a, int b) { return greatest_of(le, lower_bounds(le, a, b)); }

// Bounded poset, antitone involution, complements, orthogonal joins.
inline bool is_orthoposet(const Structure& s) {
  const int n = s.size();
  if (!is_partial_order(s.le)) return false;
  const int zero = bottom(s.le), one = top(s.le);
  if (zero < 0 || one < 0) return false;
  for (int x = 0; x < n; ++x) {
    if (s.inv[x] < 0 || s.inv[x] >= n || s.inv[s.inv[x]] != x) return false;
    for (int y = 0; y < n; ++y)
      if (s.le[x][y] && !s.le[s.inv[y]][s.inv[x]]) return false;
    if (join(s.le, x, s.inv[x]) != one || meet(s.le, x, s.inv[x]) != zero) return false;
    for (int y = 0; y < n; ++y)
      if (s.le[x][s.inv[y]] && join(s.le, x, y) < 0) return false;
  }
  return true;
}

// x <= y implies (y' v x)' v x = y.
inline bool is_omp(const Structure& s) {
  if (!is_orthoposet(s)) return false;
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y) {
      if (!s.le[x][y]) continue;
      const int a = join(s.le, s.inv[y], x);
      if (a < 0) return false;
      const int b = join(s.le, s.inv[a], x);
      if (b != y) return false;
    }
  return true;
}

// x -> y = { y v m : m maximal in L(x', y') }, as a sorted element list.
inline std::vector<int> arrow(const Structure& s, int x, int y) {
  const int n = s.size();
  std::vector<int> cone;
  for (int z = 0; z < n; ++z)
    if (s.le[z][s.inv[x]] && s.le[z][s.inv[y]]) cone.push_back(z);
  std::vector<int> out;
  for (int m : cone) {
    bool maximal = true;
    for (int z : cone) maximal = maximal && !(z != m && s.le[m][z]);
    if (!maximal) continue;
    const int j = join(s.le, y, m);
    if (j < 0) return {-1};
    out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Brute force over all n! bijections.
inline bool isomorphic(const Structure& a, const Structure& b) {
  const int n = a.size();
  if (b.size() != n) return false;
  std::vector<int> pi = all_elements(n);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = pi[a.inv[x]] == b.inv[pi[x]];
      for (int y = 0; y < n && ok; ++y) ok = a.le[x][y] == b.le[pi[x]][pi[y]];
    }
    if (ok) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

inline void add_class(std::vector<Structure>& classes, const Structure& s) {
  for (const auto& c : classes)
    if (isomorphic(c, s)) return;
  classes.push_back(s);
}

inline std::vector<std::vector<int>> involutions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p = all_elements(n);
  do {
    bool inv = true;
    for (int x = 0; x < n; ++x) inv = inv && p[p[x]] == x;
    if (inv) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every n x n boolean matrix combined with every involution (n <= 4).
inline std::vector<Structure> classes_all_matrices(int n) {
  std::vector<Structure> classes;
  const auto invs = involutions(n);
  for (unsigned long bits = 0; bits < (1UL << (n * n)); ++bits) {
    Rel le(n, std::vector<bool>(n));
    for (int i = 0; i < n * n; ++i) le[i / n][i % n] = (bits >> i) & 1;
    if (!is_partial_order(le)) continue;
    for (const auto& inv : invs) {
      Structure s{le, inv};
      if (is_orthoposet(s)) add_class(classes, s);
    }
  }
  return classes;
}

// n = 6: 0 and 1 fixed at indices 0 and 5 with 0' = 1; every relation on
// the four middle elements combined with every involution of them.
inline std::vector<Structure> classes_six() {
  const int n = 6;
  std::vector<Structure> classes;
  const auto mids = involutions(4);
  for (unsigned bits = 0; bits < (1U << 12); ++bits) {
    Rel le(n, std::vector<bool>(n));
    for (int x = 0; x < n; ++x) {
      le[0][x] = le[x][n - 1] = le[x][x] = true;
    }
    int k = 0;
    for (int x = 1; x < 5; ++x)
      for (int y = 1; y < 5; ++y)
        if (x != y) le[x][y] = (bits >> k++) & 1;
    if (!is_partial_order(le)) continue;
    for (const auto& m : mids) {
      std::vector<int> inv{5, m[0] + 1, m[1] + 1, m[2] + 1, m[3] + 1, 0};
      Structure s{le, inv};
      if (is_orthoposet(s)) add_class(classes, s);
    }
  }
  return classes;
}

// n = 8: involution fixed as 0<->7, 1<->2, 3<->4, 5<->6 (any orthoposet can
// be relabelled so); every pair of non-complementary middle elements is
// unrelated, or ordered one way or the other.
inline std::vector<Structure> classes_eight() {
  const int n = 8;
  const std::vector<int> inv{7, 2, 1, 4, 3, 6, 5, 0};
  std::vector<std::pair<int, int>> pairs;
  for (int x = 1; x < 7; ++x)
    for (int y = x + 1; y < 7; ++y)
      if (inv[x] != y) pairs.emplace_back(x, y);
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  std::vector<Structure> labelled;
  for (std::size_t code = 0; code < total; ++code) {
    Rel le(n, std::vector<bool>(n));
    for (int x = 0; x < n; ++x) le[0][x] = le[x][n - 1] = le[x][x] = true;
    std::size_t c = code;
    for (auto [x, y] : pairs) {
      const int choice = static_cast<int>(c % 3);
      c /= 3;
      if (choice == 1) le[x][y] = true;
      if (choice == 2) le[y][x] = true;
    }
    Structure s{le, inv};
    if (is_orthoposet(s)) labelled.push_back(std::move(s));
  }
  std::vector<Structure> classes;
  for (const auto& s : labelled) add_class(classes, s);
  return classes;
}

// Name of a subset of {1..m} given as a bitmask: "0", "1" (the full set) or "{1,3}".
inline std::string subset_label(unsigned mask, unsigned m) {
  if (mask == 0) return "0";
  if (mask == (1U << m) - 1) return "1";
  std::string s = "{";
  for (unsigned i = 0; i < m; ++i)
    if (mask & (1U << i)) {
      if (s.size() > 1) s += ",";
      s += std::to_string(i + 1);
    }
  return s + "}";
}

} // namespace oracle
