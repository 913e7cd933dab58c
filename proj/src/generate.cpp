#include "algkit/generate.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "algkit/duality.hpp"
#include "algkit/lattice.hpp"
#include "algkit/plonka.hpp"

namespace algkit {

Map Rng::permutation(int n) {
  Map p = identity_map(n);
  for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(below(i + 1))]);
  return p;
}

namespace {

constexpr int kOmega = 3;

// Members of a union-closed family, indexed by carrier position.
struct SubsetIndex {
  std::vector<int> subset;
  JoinSemilattice index;
};

SubsetIndex random_subset_index(Rng& rng, int size) {
  size = std::clamp(size, 1, 1 << kOmega);
  std::set<int> family;
  while (static_cast<int>(family.size()) != size) {
    family = {0};
    while (static_cast<int>(family.size()) < size) {
      family.insert(1 + rng.below((1 << kOmega) - 1));
      std::set<int> closed = family;
      bool grew = true;
      while (grew) {
        grew = false;
        for (int a : std::vector<int>(closed.begin(), closed.end()))
          for (int b : std::vector<int>(closed.begin(), closed.end()))
            grew = closed.insert(a | b).second || grew;
      }
      family = std::move(closed);
    }
  }
  std::vector<int> members(family.begin(), family.end());
  const Map perm = rng.permutation(size);
  std::vector<int> subset(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(perm[i])] = members[static_cast<std::size_t>(i)];
  auto position = [&](int s) {
    return static_cast<int>(std::find(subset.begin(), subset.end(), s) - subset.begin());
  };
  FiniteAlgebra a(size);
  std::vector<int> join(static_cast<std::size_t>(size * size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      join[static_cast<std::size_t>(i * size + j)] = position(subset[i] | subset[j]);
  a.set_binary(op::join, std::move(join)).set_constant(op::bottom, position(0));
  return SubsetIndex{std::move(subset), JoinSemilattice(a)};
}

bool subset_of(int a, int b) { return (a & ~b) == 0; }

int floor_log2(int n) {
  int p = 0;
  while ((2 << p) <= n) ++p;
  return p;
}

}  // namespace

JoinSemilattice random_index(Rng& rng, int size) { return random_subset_index(rng, size).index; }

FinitePoset random_poset(Rng& rng, int n) {
  const Map order = rng.permutation(n);
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n * n), 0);
  for (int x = 0; x < n; ++x) leq[static_cast<std::size_t>(x * n + x)] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.coin()) leq[static_cast<std::size_t>(order[i] * n + order[j])] = 1;
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (leq[static_cast<std::size_t>(x * n + k)] && leq[static_cast<std::size_t>(k * n + y)])
          leq[static_cast<std::size_t>(x * n + y)] = 1;
  return FinitePoset(n, std::move(leq));
}

DirectSystem relabel_fibers(const DirectSystem& s, Rng& rng) {
  std::vector<Map> perms;
  std::vector<FiniteAlgebra> fibers;
  for (const auto& f : s.fibers()) {
    perms.push_back(rng.permutation(f.size()));
    fibers.push_back(relabel(f, perms.back()));
  }
  ArrowMap transitions;
  for (const auto& [key, p] : s.transitions())
    transitions.emplace(key, compose_maps(perms[static_cast<std::size_t>(key.second)],
                                          compose_maps(p, inverse_map(perms[static_cast<std::size_t>(key.first)]))));
  return DirectSystem(s.index(), s.fiber_kind(), std::move(fibers), std::move(transitions));
}

FiniteAlgebra shuffle(const FiniteAlgebra& a, Rng& rng) { return relabel(a, rng.permutation(a.size())); }

DirectSystem random_ba_system(Rng& rng, int max_fibers, int max_fiber_size) {
  const SubsetIndex si = random_subset_index(rng, rng.between(1, std::max(1, max_fibers)));
  const int k = si.index.size();
  const int max_points = floor_log2(std::max(1, max_fiber_size));

  // Point u lives over index i when subset(i) is inside reach[u]; it carries
  // 1 + |subset(i) & labels[u]| copies, so copies only grow along the order.
  const int universe = rng.between(0, max_points);
  std::vector<int> reach(static_cast<std::size_t>(universe)), labels(static_cast<std::size_t>(universe));
  auto copies = [&](int i, int u) {
    const int s = si.subset[static_cast<std::size_t>(i)];
    if (!subset_of(s, reach[static_cast<std::size_t>(u)])) return 0;
    return 1 + std::popcount(static_cast<unsigned>(s & labels[static_cast<std::size_t>(u)]));
  };
  auto fits = [&] {
    for (int i = 0; i < k; ++i) {
      int total = 0;
      for (int u = 0; u < universe; ++u) total += copies(i, u);
      if (total > max_points) return false;
    }
    return true;
  };
  for (int attempt = 0;; ++attempt) {
    for (int u = 0; u < universe; ++u) {
      reach[static_cast<std::size_t>(u)] = rng.below(1 << kOmega);
      labels[static_cast<std::size_t>(u)] = attempt < 50 ? rng.below(1 << kOmega) : 0;
    }
    if (fits()) break;
  }

  // Points of X_i as (u, copy) pairs in lexicographic order.
  std::vector<std::vector<std::pair<int, int>>> points(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int u = 0; u < universe; ++u)
      for (int c = 0; c < copies(i, u); ++c) points[static_cast<std::size_t>(i)].push_back({u, c});

  std::vector<FiniteSpace> terms;
  for (const auto& p : points) terms.push_back(FiniteSpace{static_cast<int>(p.size())});
  ArrowMap bondings;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!si.index.leq(i, j)) continue;
      const auto& from = points[static_cast<std::size_t>(j)];
      const auto& to = points[static_cast<std::size_t>(i)];
      Map f;
      for (auto [u, c] : from) {
        const std::pair<int, int> img{u, std::min(c, copies(i, u) - 1)};
        f.push_back(static_cast<int>(std::find(to.begin(), to.end(), img) - to.begin()));
      }
      bondings.emplace(std::pair{i, j}, std::move(f));
    }
  const StoneSystem inv(si.index, std::move(terms), std::move(bondings));
  return relabel_fibers(lift_functor_inv_to_dir(inv), rng);
}

DirectSystem random_dl_system(Rng& rng, int max_fibers, int max_fiber_size) {
  const SubsetIndex si = random_subset_index(rng, rng.between(1, std::max(1, max_fibers)));
  const int k = si.index.size();
  for (int universe = std::min(4, std::max(0, max_fiber_size - 1));; universe = std::max(0, universe - 1)) {
    const FinitePoset p = random_poset(rng, universe);
    std::vector<int> reach;
    for (int u = 0; u < universe; ++u) reach.push_back(rng.below(1 << kOmega));
    std::vector<std::vector<int>> kept(static_cast<std::size_t>(k));
    std::vector<FinitePoset> terms;
    bool fits = true;
    for (int i = 0; i < k && fits; ++i) {
      for (int u = 0; u < universe; ++u)
        if (subset_of(si.subset[static_cast<std::size_t>(i)], reach[static_cast<std::size_t>(u)]))
          kept[static_cast<std::size_t>(i)].push_back(u);
      const auto& ks = kept[static_cast<std::size_t>(i)];
      const int m = static_cast<int>(ks.size());
      std::vector<std::uint8_t> leq(static_cast<std::size_t>(m * m));
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) leq[static_cast<std::size_t>(x * m + y)] = p.leq(ks[x], ks[y]) ? 1 : 0;
      terms.emplace_back(m, std::move(leq));
      fits = static_cast<int>(down_sets(terms.back()).size()) <= max_fiber_size;
    }
    if (!fits) continue;
    ArrowMap bondings;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (!si.index.leq(i, j)) continue;
        const auto& from = kept[static_cast<std::size_t>(j)];
        const auto& to = kept[static_cast<std::size_t>(i)];
        Map f;
        for (int u : from) f.push_back(static_cast<int>(std::find(to.begin(), to.end(), u) - to.begin()));
        bondings.emplace(std::pair{i, j}, std::move(f));
      }
    const PriestleySystem inv(si.index, std::move(terms), std::move(bondings));
    return relabel_fibers(lift_priestley_to_dir(inv), rng);
  }
}

FiniteAlgebra random_ibsl(Rng& rng, int max_fibers, int max_fiber_size) {
  return shuffle(plonka_sum(random_ba_system(rng, max_fibers, max_fiber_size)), rng);
}

FiniteAlgebra random_bisemilattice(Rng& rng, int max_fibers, int max_fiber_size) {
  return shuffle(plonka_sum(random_dl_system(rng, max_fibers, max_fiber_size)), rng);
}

}  // namespace algkit
