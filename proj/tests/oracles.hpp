#pragma once

// Brute-force reference computations. They walk every total map or every
// tuple and never call the library's enumeration or validation code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "algkit/algebra.hpp"

namespace oracle {

using algkit::FiniteAlgebra;
using algkit::Map;

struct Symbols {
  std::vector<std::string> binary;
  std::vector<std::string> unary;
  std::vector<std::string> constants;
  std::vector<std::string> relations;
};

inline const Symbols bsl{{"join", "meet"}, {}, {}, {}};
inline const Symbols ibsl{{"join", "meet"}, {"neg"}, {"zero", "one"}, {}};
inline const Symbols ba = ibsl;
inline const Symbols semilattice{{"join"}, {}, {"bottom"}, {}};
inline const Symbols gr{{"star"}, {}, {"c0", "c1", "calpha"}, {"leq"}};
inline const Symbols igr{{"star"}, {"neg"}, {"c0", "c1", "calpha"}, {"leq"}};

// Every map {0..n-1} -> {0..m-1}, lexicographic in the value vector.
inline void all_maps(int n, int m, const std::function<void(const Map&)>& visit) {
  Map f(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    visit(f);
    return;
  }
  if (m == 0) return;
  while (true) {
    visit(f);
    int k = n - 1;
    while (k >= 0 && ++f[static_cast<std::size_t>(k)] == m) f[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) return;
  }
}

inline bool is_hom(const FiniteAlgebra& a, const FiniteAlgebra& b, const Map& f, const Symbols& s) {
  const int n = a.size();
  for (const auto& op : s.binary) {
    const auto ta = a.binary_table(op);
    const auto tb = b.binary_table(op);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (f[ta[x * n + y]] != tb[f[x] * b.size() + f[y]]) return false;
  }
  for (const auto& op : s.unary) {
    const auto ua = a.unary_map(op);
    const auto ub = b.unary_map(op);
    for (int x = 0; x < n; ++x)
      if (f[ua[x]] != ub[f[x]]) return false;
  }
  for (const auto& c : s.constants)
    if (f[a.constant(c)] != b.constant(c)) return false;
  for (const auto& r : s.relations) {
    const auto ra = a.relation_matrix(r);
    const auto rb = b.relation_matrix(r);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (ra[x * n + y] && !rb[f[x] * b.size() + f[y]]) return false;
  }
  return true;
}

inline std::vector<Map> homs(const FiniteAlgebra& a, const FiniteAlgebra& b, const Symbols& s) {
  std::vector<Map> out;
  all_maps(a.size(), b.size(), [&](const Map& f) {
    if (is_hom(a, b, f, s)) out.push_back(f);
  });
  return out;
}

inline bool is_bijective(const Map& f, int m) {
  if (static_cast<int>(f.size()) != m) return false;
  std::vector<int> seen(static_cast<std::size_t>(m), 0);
  for (int v : f)
    if (seen[static_cast<std::size_t>(v)]++) return false;
  return true;
}

inline Map inverse(const Map& f) {
  Map g(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) g[static_cast<std::size_t>(f[x])] = static_cast<int>(x);
  return g;
}

inline bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b, const Symbols& s) {
  if (a.size() != b.size()) return false;
  Map f(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) f[static_cast<std::size_t>(i)] = i;
  do {
    if (is_hom(a, b, f, s) && is_hom(b, a, inverse(f), s)) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

// Axioms of involutive bisemilattices with meet and one derived from join,
// neg and zero.
inline bool is_ibsl(const FiniteAlgebra& a) {
  const int n = a.size();
  auto j = [&](int x, int y) { return a.apply("join", x, y); };
  auto ng = [&](int x) { return a.apply("neg", x); };
  auto m = [&](int x, int y) { return ng(j(ng(x), ng(y))); };
  const int zero = a.constant("zero");
  for (int x = 0; x < n; ++x) {
    if (j(x, x) != x || ng(ng(x)) != x || j(zero, x) != x) return false;
    for (int y = 0; y < n; ++y) {
      if (j(x, y) != j(y, x) || m(x, j(ng(x), y)) != m(x, y)) return false;
      for (int z = 0; z < n; ++z)
        if (j(x, j(y, z)) != j(j(x, y), z)) return false;
    }
  }
  if (a.has_binary("meet"))
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (a.apply("meet", x, y) != m(x, y)) return false;
  if (a.has_constant("one") && a.constant("one") != ng(zero)) return false;
  return true;
}

inline bool is_partial_order(int n, const std::vector<std::uint8_t>& leq) {
  auto r = [&](int x, int y) { return leq[static_cast<std::size_t>(x * n + y)] != 0; };
  for (int x = 0; x < n; ++x) {
    if (!r(x, x)) return false;
    for (int y = 0; y < n; ++y) {
      if (x != y && r(x, y) && r(y, x)) return false;
      for (int z = 0; z < n; ++z)
        if (r(x, y) && r(y, z) && !r(x, z)) return false;
    }
  }
  return true;
}

// Number of down-closed subsets, by testing all 2^n subsets.
inline int count_down_sets(int n, const std::vector<std::uint8_t>& leq) {
  int count = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool closed = true;
    for (int y = 0; y < n && closed; ++y)
      if (s >> y & 1)
        for (int x = 0; x < n; ++x)
          if (leq[static_cast<std::size_t>(x * n + y)] && !(s >> x & 1)) closed = false;
    count += closed ? 1 : 0;
  }
  return count;
}

// Elements that are minimal among the non-bottom elements of a finite
// Boolean lattice, found directly from the join table.
inline int count_atoms(const FiniteAlgebra& b) {
  const int n = b.size();
  const int zero = b.constant("zero");
  auto below = [&](int x, int y) { return b.apply("join", x, y) == y; };
  int count = 0;
  for (int x = 0; x < n; ++x) {
    if (x == zero) continue;
    bool atom = true;
    for (int y = 0; y < n && atom; ++y)
      if (y != zero && y != x && below(y, x)) atom = false;
    count += atom ? 1 : 0;
  }
  return count;
}

}  // namespace oracle
