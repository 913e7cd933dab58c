#include "algkit/plonka.hpp"

#include <algorithm>

#include "algkit/validate.hpp"

namespace algkit {

FiberLayout fiber_layout(const DirectSystem& s) {
  FiberLayout l;
  int next = 0;
  for (int i = 0; i < s.index().size(); ++i) {
    l.offset.push_back(next);
    for (int x = 0; x < s.fiber(i).size(); ++x) {
      l.fiber_of.push_back(i);
      l.local.push_back(x);
    }
    next += s.fiber(i).size();
  }
  return l;
}

Kind sum_kind(Kind fiber_kind) {
  switch (fiber_kind) {
    case Kind::Boolean: return Kind::Ibsl;
    case Kind::Lattice: return Kind::Bisemilattice;
    default: break;
  }
  throw KindMismatch("Płonka sums are defined here for Boolean or lattice fibers, not '" +
                     std::string(to_string(fiber_kind)) + "'");
}

FiniteAlgebra plonka_sum(const DirectSystem& s) {
  const Kind kind = s.fiber_kind();
  sum_kind(kind);
  const FiberLayout l = fiber_layout(s);
  const int n = static_cast<int>(l.fiber_of.size());
  std::vector<FiniteAlgebra> fibers;
  for (const auto& f : s.fibers()) fibers.push_back(prepare_for_kind(f, kind));

  std::vector<std::string> names;
  for (int g = 0; g < n; ++g) {
    const int i = l.fiber_of[g];
    names.push_back(std::to_string(i) + ":" + fibers[static_cast<std::size_t>(i)].name(l.local[g]));
  }
  FiniteAlgebra out(n, std::move(names));
  const auto& sig = signature(kind);
  for (auto opname : sig.binary) {
    std::vector<int> t(static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int i = l.fiber_of[a];
        const int j = l.fiber_of[b];
        const int k = s.index().join(i, j);
        const int xa = s.transition(i, k)[l.local[a]];
        const int xb = s.transition(j, k)[l.local[b]];
        t[static_cast<std::size_t>(a * n + b)] = l.global(k, fibers[static_cast<std::size_t>(k)].apply(opname, xa, xb));
      }
    out.set_binary(opname, std::move(t));
  }
  for (auto opname : sig.unary) {
    std::vector<int> u(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      const int i = l.fiber_of[a];
      u[static_cast<std::size_t>(a)] = l.global(i, fibers[static_cast<std::size_t>(i)].apply(opname, l.local[a]));
    }
    out.set_unary(opname, std::move(u));
  }
  const int bottom = s.index().bottom();
  for (auto cname : sig.constants)
    out.set_constant(cname, l.global(bottom, fibers[static_cast<std::size_t>(bottom)].constant(cname)));
  return out;
}

Decomposition plonka_decompose_with_embedding(const FiniteAlgebra& input) {
  const auto report = validate_ibsl(input);
  if (!report.ok()) throw NotIBSL("not an involutive bisemilattice: " + report.summary());
  const FiniteAlgebra b = prepare_for_kind(input, Kind::Ibsl);
  const int n = b.size();
  auto plus = [&](int x, int y) { return b.apply(op::join, x, y); };
  auto times = [&](int x, int y) { return b.apply(op::meet, x, y); };
  auto prime = [&](int x) { return b.apply(op::neg, x); };

  std::vector<int> unit_of(static_cast<std::size_t>(n));
  std::vector<int> units;
  for (int a = 0; a < n; ++a) {
    unit_of[static_cast<std::size_t>(a)] = plus(a, prime(a));
    units.push_back(unit_of[static_cast<std::size_t>(a)]);
  }
  std::sort(units.begin(), units.end());
  units.erase(std::unique(units.begin(), units.end()), units.end());
  const int k = static_cast<int>(units.size());
  auto position = [&](int unit) {
    auto it = std::lower_bound(units.begin(), units.end(), unit);
    if (it == units.end() || *it != unit) throw NotIBSL("join of local units is not a local unit");
    return static_cast<int>(it - units.begin());
  };

  std::vector<std::string> index_names;
  FiniteAlgebra index_alg(k);
  {
    std::vector<int> t(static_cast<std::size_t>(k * k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        t[static_cast<std::size_t>(i * k + j)] = position(plus(units[static_cast<std::size_t>(i)], units[static_cast<std::size_t>(j)]));
    index_alg.set_binary(op::join, std::move(t));
    index_alg.set_constant(op::bottom, position(unit_of[static_cast<std::size_t>(b.constant(op::zero))]));
    for (int u : units) index_names.push_back(b.name(u));
    index_alg.set_names(index_names);
  }

  std::vector<std::vector<int>> members(static_cast<std::size_t>(k));
  for (int a = 0; a < n; ++a) members[static_cast<std::size_t>(position(unit_of[static_cast<std::size_t>(a)]))].push_back(a);

  std::vector<FiniteAlgebra> fibers;
  for (int i = 0; i < k; ++i) {
    const auto& mem = members[static_cast<std::size_t>(i)];
    const int m = static_cast<int>(mem.size());
    auto local = [&](int a) {
      auto it = std::lower_bound(mem.begin(), mem.end(), a);
      if (it == mem.end() || *it != a) throw NotIBSL("fiber is not closed under the operations");
      return static_cast<int>(it - mem.begin());
    };
    std::vector<std::string> names;
    for (int a : mem) names.push_back(b.name(a));
    FiniteAlgebra f(m, std::move(names));
    std::vector<int> jt(static_cast<std::size_t>(m * m)), mt(static_cast<std::size_t>(m * m)), nt(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        jt[static_cast<std::size_t>(x * m + y)] = local(plus(mem[x], mem[y]));
        mt[static_cast<std::size_t>(x * m + y)] = local(times(mem[x], mem[y]));
      }
      nt[static_cast<std::size_t>(x)] = local(prime(mem[x]));
    }
    const int e = units[static_cast<std::size_t>(i)];
    f.set_binary(op::join, std::move(jt)).set_binary(op::meet, std::move(mt)).set_unary(op::neg, std::move(nt));
    f.set_constant(op::zero, local(times(e, prime(e)))).set_constant(op::one, local(e));
    fibers.push_back(std::move(f));
  }

  ArrowMap transitions;
  JoinSemilattice index(index_alg);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!index.leq(i, j)) continue;
      const int f = units[static_cast<std::size_t>(j)];
      const int local_zero = times(f, prime(f));
      const auto& target = members[static_cast<std::size_t>(j)];
      Map p;
      for (int a : members[static_cast<std::size_t>(i)]) {
        const int img = plus(a, local_zero);
        auto it = std::lower_bound(target.begin(), target.end(), img);
        if (it == target.end() || *it != img) throw NotIBSL("transition leaves the target fiber");
        p.push_back(static_cast<int>(it - target.begin()));
      }
      transitions.emplace(std::pair{i, j}, std::move(p));
    }

  std::optional<DirectSystem> system;
  try {
    system.emplace(std::move(index), Kind::Boolean, std::move(fibers), std::move(transitions));
  } catch (const InvalidSystem& e) {
    throw NotIBSL(std::string("decomposition failed: ") + e.what());
  }
  const FiberLayout l = fiber_layout(*system);
  Map embedding(static_cast<std::size_t>(n));
  for (int i = 0; i < k; ++i) {
    const auto& mem = members[static_cast<std::size_t>(i)];
    for (std::size_t x = 0; x < mem.size(); ++x) embedding[static_cast<std::size_t>(mem[x])] = l.global(i, static_cast<int>(x));
  }
  return Decomposition{std::move(*system), std::move(embedding)};
}

DirectSystem plonka_decompose(const FiniteAlgebra& b) { return plonka_decompose_with_embedding(b).system; }

Morphism induced_index_map(const Morphism& h, const DirectSystem& da, const DirectSystem& db) {
  const FiberLayout la = fiber_layout(da);
  const FiberLayout lb = fiber_layout(db);
  if (static_cast<int>(h.map().size()) != static_cast<int>(la.fiber_of.size()) ||
      h.target().size() != static_cast<int>(lb.fiber_of.size()))
    throw KindMismatch("homomorphism does not match the carriers of the two Płonka sums");
  Map phi;
  for (int i = 0; i < da.index().size(); ++i) {
    const int j = lb.fiber_of[h(la.global(i, 0))];
    for (int x = 1; x < da.fiber(i).size(); ++x)
      if (lb.fiber_of[h(la.global(i, x))] != j)
        throw FiberSplit("homomorphism splits fiber " + std::to_string(i) + " across two target fibers");
    phi.push_back(j);
  }
  return Morphism(da.index().algebra(), db.index().algebra(), std::move(phi), Kind::Semilattice);
}

SystemMorphism restrict_to_fibers(const Morphism& h, std::shared_ptr<const DirectSystem> da,
                                  std::shared_ptr<const DirectSystem> db) {
  const Morphism phi = induced_index_map(h, *da, *db);
  const FiberLayout la = fiber_layout(*da);
  const FiberLayout lb = fiber_layout(*db);
  SystemMorphism m{da, db, phi.map(), {}};
  for (int i = 0; i < da->index().size(); ++i) {
    Map f;
    for (int x = 0; x < da->fiber(i).size(); ++x) f.push_back(lb.local[h(la.global(i, x))]);
    m.components.push_back(std::move(f));
  }
  require_valid(m);
  return m;
}

Morphism system_morphism_to_hom(const SystemMorphism& m) {
  require_valid(m);
  const FiberLayout la = fiber_layout(*m.source);
  const FiberLayout lb = fiber_layout(*m.target);
  Map h;
  for (std::size_t g = 0; g < la.fiber_of.size(); ++g) {
    const int i = la.fiber_of[g];
    h.push_back(lb.global(m.index_map[i], m.components[static_cast<std::size_t>(i)][la.local[g]]));
  }
  try {
    return Morphism(plonka_sum(*m.source), plonka_sum(*m.target), std::move(h), sum_kind(m.source->fiber_kind()));
  } catch (const InvalidMorphism& e) {
    throw InvalidSystemMorphism(std::string("induced map is not a homomorphism: ") + e.what());
  }
}

namespace {

// Backtracks over the indices of the source, choosing one candidate component per
// index and checking every square against already-chosen indices.
class ComponentSearch {
 public:
  ComponentSearch(const DirectSystem& a, const DirectSystem& b, const Map& phi,
                  std::vector<std::vector<Map>> candidates)
      : a_(a), b_(b), phi_(phi), candidates_(std::move(candidates)), chosen_(candidates_.size()) {}

  void run(const std::function<bool(const std::vector<Map>&)>& visit) {
    visit_ = &visit;
    dfs(0);
  }

 private:
  bool square(int i, int j) const {
    const auto& p = a_.transition(i, j);
    const auto& q = b_.transition(phi_[i], phi_[j]);
    return compose_maps(chosen_[static_cast<std::size_t>(j)], p) == compose_maps(q, chosen_[static_cast<std::size_t>(i)]);
  }

  bool dfs(int i) {
    if (i == static_cast<int>(candidates_.size())) return (*visit_)(chosen_);
    for (const auto& f : candidates_[static_cast<std::size_t>(i)]) {
      chosen_[static_cast<std::size_t>(i)] = f;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (a_.index().leq(j, i)) ok = square(j, i);
        if (ok && a_.index().leq(i, j)) ok = square(i, j);
      }
      if (ok && !dfs(i + 1)) return false;
    }
    return true;
  }

  const DirectSystem& a_;
  const DirectSystem& b_;
  const Map& phi_;
  std::vector<std::vector<Map>> candidates_;
  std::vector<Map> chosen_;
  const std::function<bool(const std::vector<Map>&)>* visit_ = nullptr;
};

std::vector<Map> fiber_isos(const FiniteAlgebra& a, const FiniteAlgebra& b, Kind kind) {
  std::vector<Map> out;
  const auto pa = prepare_for_kind(a, kind);
  const auto pb = prepare_for_kind(b, kind);
  if (pa.size() != pb.size()) return out;
  for_each_hom(pa, pb, kind, [&](const Map& f) {
    if (preserves(pb, pa, inverse_map(f), kind)) out.push_back(f);
    return true;
  }, true);
  return out;
}

}  // namespace

std::vector<SystemMorphism> enumerate_system_morphisms(std::shared_ptr<const DirectSystem> da,
                                                       std::shared_ptr<const DirectSystem> db) {
  if (da->fiber_kind() != db->fiber_kind()) throw KindMismatch("systems have different fiber kinds");
  const Kind kind = da->fiber_kind();
  std::vector<SystemMorphism> out;
  for (const Map& phi : enumerate_hom_maps(da->index().algebra(), db->index().algebra(), Kind::Semilattice)) {
    std::vector<std::vector<Map>> candidates;
    for (int i = 0; i < da->index().size(); ++i)
      candidates.push_back(enumerate_hom_maps(da->fiber(i), db->fiber(phi[i]), kind));
    ComponentSearch search(*da, *db, phi, std::move(candidates));
    search.run([&](const std::vector<Map>& comps) {
      out.push_back(SystemMorphism{da, db, phi, comps});
      return true;
    });
  }
  return out;
}

std::optional<SystemMorphism> find_system_isomorphism(std::shared_ptr<const DirectSystem> da,
                                                      std::shared_ptr<const DirectSystem> db) {
  if (da->fiber_kind() != db->fiber_kind()) return std::nullopt;
  if (da->index().size() != db->index().size()) return std::nullopt;
  const Kind kind = da->fiber_kind();
  const auto& ia = da->index().algebra();
  const auto& ib = db->index().algebra();
  std::optional<SystemMorphism> found;
  for_each_hom(ia, ib, Kind::Semilattice, [&](const Map& phi) {
    if (!preserves(ib, ia, inverse_map(phi), Kind::Semilattice)) return true;
    std::vector<std::vector<Map>> candidates;
    for (int i = 0; i < da->index().size(); ++i) {
      candidates.push_back(fiber_isos(da->fiber(i), db->fiber(phi[i]), kind));
      if (candidates.back().empty()) return true;
    }
    ComponentSearch search(*da, *db, phi, std::move(candidates));
    search.run([&](const std::vector<Map>& comps) {
      found = SystemMorphism{da, db, phi, comps};
      return false;
    });
    return !found.has_value();
  }, true);
  return found;
}

}  // namespace algkit
