#include "algkit/lattice.hpp"

#include <algorithm>

#include "algkit/errors.hpp"
#include "algkit/validate.hpp"

namespace algkit {

namespace {

FiniteAlgebra require_dl(const FiniteAlgebra& l) {
  if (!l.has_binary(op::join) || !l.has_binary(op::meet))
    throw NotDistributive("a distributive lattice needs join and meet");
  const auto r = validate_distributive_lattice(l);
  if (!r.ok()) throw NotDistributive("not a distributive lattice: " + r.summary());
  return l.reduct({op::join, op::meet});
}

bool lat_leq(const FiniteAlgebra& l, int x, int y) { return l.apply(op::join, x, y) == y; }

}  // namespace

Decomposition plonka_decompose_bsl_with_embedding(const FiniteAlgebra& input) {
  if (!input.has_binary(op::join) || !input.has_binary(op::meet))
    throw NotBisemilattice("a bisemilattice needs join and meet");
  const auto report = validate_bisemilattice(input);
  if (!report.ok()) throw NotBisemilattice("not a distributive bisemilattice: " + report.summary());
  const FiniteAlgebra b = input.reduct({op::join, op::meet});
  const int n = b.size();
  auto plus = [&](int x, int y) { return b.apply(op::join, x, y); };
  auto times = [&](int x, int y) { return b.apply(op::meet, x, y); };
  auto star = [&](int x, int y) { return times(x, plus(x, y)); };

  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> members;
  for (int a = 0; a < n; ++a) {
    if (cls[static_cast<std::size_t>(a)] >= 0) continue;
    const int c = static_cast<int>(members.size());
    members.emplace_back();
    for (int x = a; x < n; ++x)
      if (cls[static_cast<std::size_t>(x)] < 0 && star(a, x) == a && star(x, a) == x) {
        cls[static_cast<std::size_t>(x)] = c;
        members.back().push_back(x);
      }
  }
  const int k = static_cast<int>(members.size());

  std::vector<int> join(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int c = cls[static_cast<std::size_t>(plus(members[i][0], members[j][0]))];
      for (int x : members[i])
        for (int y : members[j])
          if (cls[static_cast<std::size_t>(plus(x, y))] != c || cls[static_cast<std::size_t>(times(x, y))] != c)
            throw IllDefinedTransition("class of a sum depends on the representatives");
      join[static_cast<std::size_t>(i * k + j)] = c;
    }
  FiniteAlgebra index_alg(k);
  index_alg.set_binary(op::join, join);
  int bottom = -1;
  for (int i = 0; i < k && bottom < 0; ++i) {
    bool least = true;
    for (int j = 0; j < k && least; ++j) least = join[static_cast<std::size_t>(i * k + j)] == j;
    if (least) bottom = i;
  }
  if (bottom < 0) throw NoLowerBound("the semilattice of fibers has no least element");
  index_alg.set_constant(op::bottom, bottom);
  std::vector<std::string> index_names;
  for (const auto& m : members) index_names.push_back(b.name(m[0]));
  index_alg.set_names(std::move(index_names));
  JoinSemilattice index(index_alg);

  auto local = [&](int c, int x) {
    const auto& mem = members[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(mem.begin(), mem.end(), x);
    if (it == mem.end() || *it != x) throw IllDefinedTransition("element leaves its fiber");
    return static_cast<int>(it - mem.begin());
  };

  std::vector<FiniteAlgebra> fibers;
  for (int c = 0; c < k; ++c) {
    const auto& mem = members[static_cast<std::size_t>(c)];
    const int m = static_cast<int>(mem.size());
    std::vector<std::string> names;
    for (int a : mem) names.push_back(b.name(a));
    FiniteAlgebra f(m, std::move(names));
    std::vector<int> jt(static_cast<std::size_t>(m * m)), mt(static_cast<std::size_t>(m * m));
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        jt[static_cast<std::size_t>(x * m + y)] = local(c, plus(mem[x], mem[y]));
        mt[static_cast<std::size_t>(x * m + y)] = local(c, times(mem[x], mem[y]));
      }
    f.set_binary(op::join, std::move(jt)).set_binary(op::meet, std::move(mt));
    fibers.push_back(std::move(f));
  }

  ArrowMap transitions;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!index.leq(i, j)) continue;
      Map p;
      for (int a : members[static_cast<std::size_t>(i)]) {
        const int img = star(a, members[static_cast<std::size_t>(j)][0]);
        for (int w : members[static_cast<std::size_t>(j)])
          if (star(a, w) != img)
            throw IllDefinedTransition("transition depends on the chosen element of the target fiber");
        p.push_back(local(j, img));
      }
      transitions.emplace(std::pair{i, j}, std::move(p));
    }

  std::optional<DirectSystem> system;
  try {
    system.emplace(std::move(index), Kind::Lattice, std::move(fibers), std::move(transitions));
  } catch (const InvalidSystem& e) {
    throw IllDefinedTransition(std::string("decomposition is not a direct system: ") + e.what());
  }
  const FiberLayout l = fiber_layout(*system);
  Map embedding(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const int c = cls[static_cast<std::size_t>(a)];
    embedding[static_cast<std::size_t>(a)] = l.global(c, local(c, a));
  }
  return Decomposition{std::move(*system), std::move(embedding)};
}

DirectSystem plonka_decompose_bsl(const FiniteAlgebra& b) { return plonka_decompose_bsl_with_embedding(b).system; }

int lattice_bottom(const FiniteAlgebra& l) {
  int x = 0;
  for (int y = 1; y < l.size(); ++y) x = l.apply(op::meet, x, y);
  return x;
}

int lattice_top(const FiniteAlgebra& l) {
  int x = 0;
  for (int y = 1; y < l.size(); ++y) x = l.apply(op::join, x, y);
  return x;
}

namespace {

std::vector<int> join_irreducibles_of(const FiniteAlgebra& l) {
  const int bottom = lattice_bottom(l);
  std::vector<int> out;
  for (int a = 0; a < l.size(); ++a) {
    if (a == bottom) continue;
    // a is join-irreducible iff the join of everything strictly below it stays below it.
    int below = bottom;
    for (int y = 0; y < l.size(); ++y)
      if (y != a && lat_leq(l, y, a)) below = l.apply(op::join, below, y);
    if (below != a) out.push_back(a);
  }
  return out;
}

FinitePoset order_on(const FiniteAlgebra& l, const std::vector<int>& j) {
  const int n = static_cast<int>(j.size());
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m[static_cast<std::size_t>(x * n + y)] = lat_leq(l, j[x], j[y]) ? 1 : 0;
  return FinitePoset(n, std::move(m));
}

}  // namespace

std::vector<int> join_irreducibles(const FiniteAlgebra& input) { return join_irreducibles_of(require_dl(input)); }

FinitePoset priestley_dual(const FiniteAlgebra& input) {
  const FiniteAlgebra l = require_dl(input);
  return order_on(l, join_irreducibles_of(l));
}

std::vector<std::uint64_t> down_sets(const FinitePoset& p) {
  if (p.size() > 24) throw InvalidAlgebra("down-set lattices support posets of at most 24 points");
  // Grow down-sets from the empty set, adding one minimal-in-the-rest element at a time.
  std::vector<std::uint64_t> frontier{0};
  std::vector<std::uint64_t> seen{0};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto d : frontier)
      for (int x = 0; x < p.size(); ++x) {
        if (d >> x & 1) continue;
        bool addable = true;
        for (int y = 0; y < p.size() && addable; ++y)
          if (y != x && p.leq(y, x) && !(d >> y & 1)) addable = false;
        if (addable) next.push_back(d | (std::uint64_t{1} << x));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    seen.insert(seen.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

FiniteAlgebra dl_of_poset(const FinitePoset& p) {
  const auto ds = down_sets(p);
  const int n = static_cast<int>(ds.size());
  auto position = [&](std::uint64_t d) {
    return static_cast<int>(std::lower_bound(ds.begin(), ds.end(), d) - ds.begin());
  };
  std::vector<std::string> names;
  for (auto d : ds) {
    std::string s = "{";
    bool first = true;
    for (int x = 0; x < p.size(); ++x)
      if (d >> x & 1) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
      }
    names.push_back(s + "}");
  }
  FiniteAlgebra a(n, std::move(names));
  std::vector<int> j(static_cast<std::size_t>(n * n)), m(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      j[static_cast<std::size_t>(x * n + y)] = position(ds[x] | ds[y]);
      m[static_cast<std::size_t>(x * n + y)] = position(ds[x] & ds[y]);
    }
  a.set_binary(op::join, std::move(j)).set_binary(op::meet, std::move(m));
  return a;
}

bool is_bounded_lattice_hom(const FiniteAlgebra& a, const FiniteAlgebra& b, const Map& f) {
  return preserves(a, b, f, Kind::Lattice) && f[lattice_bottom(a)] == lattice_bottom(b) &&
         f[lattice_top(a)] == lattice_top(b);
}

Map priestley_dual_hom(const Morphism& h) {
  const FiniteAlgebra l = require_dl(h.source());
  const FiniteAlgebra m = require_dl(h.target());
  if (!is_bounded_lattice_hom(l, m, h.map()))
    throw UnboundedTransition("lattice homomorphism does not preserve bottom and top; its dual is a partial map");
  const auto jl = join_irreducibles_of(l);
  const auto jm = join_irreducibles_of(m);
  Map out;
  for (int j : jm) {
    int least = lattice_top(l);
    for (int x = 0; x < l.size(); ++x)
      if (lat_leq(m, j, h(x))) least = l.apply(op::meet, least, x);
    auto it = std::find(jl.begin(), jl.end(), least);
    if (it == jl.end()) throw NotDistributive("least preimage of a join-irreducible is not join-irreducible");
    out.push_back(static_cast<int>(it - jl.begin()));
  }
  return out;
}

Morphism dl_hom_of_poset_map(const FinitePoset& p, const FinitePoset& q, const Map& f) {
  if (static_cast<int>(f.size()) != p.size() || !p.monotone(f, q))
    throw InvalidMorphism("poset map is not monotone");
  const auto dp = down_sets(p);
  const auto dq = down_sets(q);
  Map pre;
  for (auto d : dq) {
    std::uint64_t mask = 0;
    for (int x = 0; x < p.size(); ++x)
      if (d >> f[static_cast<std::size_t>(x)] & 1) mask |= std::uint64_t{1} << x;
    pre.push_back(static_cast<int>(std::lower_bound(dp.begin(), dp.end(), mask) - dp.begin()));
  }
  return Morphism(dl_of_poset(q), dl_of_poset(p), std::move(pre), Kind::Lattice);
}

Morphism birkhoff_unit(const FiniteAlgebra& input) {
  const FiniteAlgebra l = require_dl(input);
  const auto j = join_irreducibles_of(l);
  const FinitePoset p = order_on(l, j);
  const auto ds = down_sets(p);
  Map u;
  for (int x = 0; x < l.size(); ++x) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < j.size(); ++k)
      if (lat_leq(l, j[k], x)) mask |= std::uint64_t{1} << k;
    u.push_back(static_cast<int>(std::lower_bound(ds.begin(), ds.end(), mask) - ds.begin()));
  }
  try {
    Morphism m(l, dl_of_poset(p), std::move(u), Kind::Lattice);
    if (!m.is_isomorphism()) throw IsomorphismFailure("Birkhoff unit is not bijective");
    return m;
  } catch (const InvalidMorphism& e) {
    throw IsomorphismFailure(std::string("Birkhoff unit is not a homomorphism: ") + e.what());
  }
}

Map poset_unit(const FinitePoset& p) {
  const FiniteAlgebra d = dl_of_poset(p);
  const auto ds = down_sets(p);
  const auto j = join_irreducibles_of(d);
  Map u;
  for (int x = 0; x < p.size(); ++x) {
    std::uint64_t mask = 0;
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(y, x)) mask |= std::uint64_t{1} << y;
    const int elem = static_cast<int>(std::lower_bound(ds.begin(), ds.end(), mask) - ds.begin());
    auto it = std::find(j.begin(), j.end(), elem);
    if (it == j.end()) throw IsomorphismFailure("principal down-set is not join-irreducible");
    u.push_back(static_cast<int>(it - j.begin()));
  }
  const FinitePoset dual = order_on(d, j);
  if (!is_bijection(u, dual.size())) throw IsomorphismFailure("poset unit is not bijective");
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != dual.leq(u[x], u[y])) throw IsomorphismFailure("poset unit does not reflect the order");
  return u;
}

PriestleySystem bsl_to_inverse_system(const FiniteAlgebra& b) {
  const DirectSystem s = plonka_decompose_bsl(b);
  std::vector<FinitePoset> terms;
  for (const auto& f : s.fibers()) terms.push_back(priestley_dual(f));
  ArrowMap bondings;
  for (const auto& [key, p] : s.transitions())
    bondings.emplace(key, priestley_dual_hom(Morphism(s.fiber(key.first), s.fiber(key.second), p, Kind::Lattice)));
  return PriestleySystem(s.index(), std::move(terms), std::move(bondings));
}

DirectSystem lift_priestley_to_dir(const PriestleySystem& s) {
  std::vector<FiniteAlgebra> fibers;
  for (const auto& t : s.terms()) fibers.push_back(dl_of_poset(t));
  ArrowMap transitions;
  for (const auto& [key, p] : s.bondings())
    transitions.emplace(key, dl_hom_of_poset_map(s.term(key.second), s.term(key.first), p).map());
  return DirectSystem(s.index(), Kind::Lattice, std::move(fibers), std::move(transitions));
}

FiniteAlgebra inverse_system_to_bsl(const PriestleySystem& s) { return plonka_sum(lift_priestley_to_dir(s)); }

}  // namespace algkit
