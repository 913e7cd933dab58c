#include "algkit/systems.hpp"

namespace algkit {

ArrowMap with_identities(ArrowMap arrows, const std::vector<int>& object_sizes) {
  for (std::size_t i = 0; i < object_sizes.size(); ++i) {
    const int k = static_cast<int>(i);
    if (!arrows.contains({k, k})) arrows.emplace(std::pair{k, k}, identity_map(object_sizes[i]));
  }
  return arrows;
}

ValidationReport check_coherence(const JoinSemilattice& index, const std::vector<int>& sizes,
                                 const ArrowMap& arrows, Direction direction) {
  ValidationReport r;
  const int k = index.size();
  auto size_of = [&](int i) { return sizes[static_cast<std::size_t>(i)]; };

  Check objects{"objects", "structure", "one object per index", static_cast<int>(sizes.size()) == k, "", {}, {}};
  r.add(objects);
  if (!objects.passed) return r;

  Check complete{"arrows-complete", "structure", "exactly one arrow per pair i <= i'", true, "ij", {}, {}};
  for (int i = 0; i < k && complete.passed; ++i)
    for (int j = 0; j < k; ++j) {
      if (index.leq(i, j) != arrows.contains({i, j})) {
        complete.passed = false;
        complete.witness = {i, j};
        complete.note = index.leq(i, j) ? "missing arrow" : "arrow between incomparable indices";
        break;
      }
    }
  for (const auto& [key, f] : arrows) {
    const auto [i, j] = key;
    if (complete.passed && (i < 0 || j < 0 || i >= k || j >= k)) {
      complete.passed = false;
      complete.witness = {i, j};
      complete.note = "index out of range";
    }
  }
  r.add(complete);
  if (!complete.passed) return r;

  Check shape{"arrow-shape", "structure", "arrow maps the right carriers", true, "ij", {}, {}};
  for (const auto& [key, f] : arrows) {
    const auto [i, j] = key;
    const int from = direction == Direction::Direct ? size_of(i) : size_of(j);
    const int to = direction == Direction::Direct ? size_of(j) : size_of(i);
    bool ok = static_cast<int>(f.size()) == from;
    for (int v : f) ok = ok && v >= 0 && v < to;
    if (!ok) {
      shape.passed = false;
      shape.witness = {i, j};
      break;
    }
  }
  r.add(shape);
  if (!shape.passed) return r;

  Check ident{"identity", "structure", "p_ii = id", true, "i", {}, {}};
  for (int i = 0; i < k; ++i)
    if (arrows.at({i, i}) != identity_map(size_of(i))) {
      ident.passed = false;
      ident.witness = {i};
      break;
    }
  r.add(ident);

  const std::string law = direction == Direction::Direct ? "p_i'i'' . p_ii' = p_ii''" : "p_ii' . p_i'i'' = p_ii''";
  Check trans{"transitive", "structure", law, true, "ijk", {}, {}};
  for (int i = 0; i < k && trans.passed; ++i)
    for (int j = 0; j < k && trans.passed; ++j) {
      if (!index.leq(i, j)) continue;
      for (int l = 0; l < k; ++l) {
        if (!index.leq(j, l)) continue;
        const Map composite = direction == Direction::Direct
                                  ? compose_maps(arrows.at({j, l}), arrows.at({i, j}))
                                  : compose_maps(arrows.at({i, j}), arrows.at({j, l}));
        if (composite != arrows.at({i, l})) {
          trans.passed = false;
          trans.witness = {i, j, l};
          break;
        }
      }
    }
  r.add(trans);
  return r;
}

namespace {
ValidationReport fiber_report(const FiniteAlgebra& a, Kind kind) {
  switch (kind) {
    case Kind::Boolean: return validate_boolean_algebra(a);
    case Kind::Lattice: return validate_distributive_lattice(a);
    case Kind::Ibsl: return validate_ibsl(a);
    case Kind::Bisemilattice: return validate_bisemilattice(a);
    case Kind::Semilattice: return validate_join_semilattice(a);
    default: break;
  }
  ValidationReport r;
  r.add(Check{"fiber-kind", "structure", "fiber kind is algebraic", false, "", {}, {}});
  return r;
}
}  // namespace

ValidationReport DirectSystem::check(const JoinSemilattice& index, Kind kind,
                                     const std::vector<FiniteAlgebra>& fibers, const ArrowMap& transitions) {
  std::vector<int> sizes;
  for (const auto& f : fibers) sizes.push_back(f.size());
  ValidationReport r = check_coherence(index, sizes, with_identities(transitions, sizes), Direction::Direct);
  if (!r.ok()) return r;
  Check fib{"fibers", "structure", "every fiber is a valid " + std::string(to_string(kind)), true, "i", {}, {}};
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    ValidationReport fr;
    try {
      fr = fiber_report(fibers[i], kind);
    } catch (const Error& e) {
      fr.add(Check{"signature", "structure", e.what(), false, "", {}, {}});
    }
    if (!fr.ok()) {
      fib.passed = false;
      fib.witness = {static_cast<int>(i)};
      fib.note = fr.summary();
      break;
    }
  }
  r.add(fib);
  if (!fib.passed) return r;
  Check homs{"transition-homs", "structure", "transitions are homomorphisms", true, "ij", {}, {}};
  for (const auto& [key, f] : transitions) {
    const auto [i, j] = key;
    const auto a = prepare_for_kind(fibers[static_cast<std::size_t>(i)], kind);
    const auto b = prepare_for_kind(fibers[static_cast<std::size_t>(j)], kind);
    if (!preserves(a, b, f, kind)) {
      homs.passed = false;
      homs.witness = {i, j};
      break;
    }
  }
  r.add(homs);
  return r;
}

DirectSystem::DirectSystem(JoinSemilattice index, Kind fiber_kind, std::vector<FiniteAlgebra> fibers,
                           ArrowMap transitions)
    : index_(std::move(index)), fiber_kind_(fiber_kind), fibers_(std::move(fibers)) {
  transitions_ = with_identities(std::move(transitions), fiber_sizes());
  auto r = check(index_, fiber_kind_, fibers_, transitions_);
  if (!r.ok()) throw InvalidSystem("invalid direct system: " + r.summary());
}

const Map& DirectSystem::transition(int i, int j) const {
  auto it = transitions_.find({i, j});
  if (it == transitions_.end())
    throw InvalidSystem("no transition " + std::to_string(i) + "->" + std::to_string(j));
  return it->second;
}

std::vector<int> DirectSystem::fiber_sizes() const {
  std::vector<int> s;
  for (const auto& f : fibers_) s.push_back(f.size());
  return s;
}

bool SystemMorphism::same_arrows(const SystemMorphism& other) const {
  return *source == *other.source && *target == *other.target && index_map == other.index_map &&
         components == other.components;
}

namespace detail {
ValidationReport check_index_map(const JoinSemilattice& from, const JoinSemilattice& to, const Map& phi) {
  ValidationReport r;
  Check c{"index-map", "structure", "phi preserves join and bottom", true, "ij", {}, {}};
  bool shape = static_cast<int>(phi.size()) == from.size();
  for (int v : phi) shape = shape && v >= 0 && v < to.size();
  if (!shape) {
    c.passed = false;
    c.note = "index map has wrong shape";
  } else if (phi[from.bottom()] != to.bottom()) {
    c.passed = false;
    c.note = "bottom not preserved";
  } else {
    for (int i = 0; i < from.size() && c.passed; ++i)
      for (int j = 0; j < from.size(); ++j)
        if (phi[from.join(i, j)] != to.join(phi[i], phi[j])) {
          c.passed = false;
          c.witness = {i, j};
          break;
        }
  }
  r.add(c);
  return r;
}
}  // namespace detail

ValidationReport check_system_morphism(const SystemMorphism& m) {
  const auto& x = *m.source;
  const auto& y = *m.target;
  ValidationReport r = detail::check_index_map(x.index(), y.index(), m.index_map);
  if (!r.ok()) return r;
  Check comps{"components", "structure", "f_i: X_i -> Y_phi(i) is a homomorphism", true, "i", {}, {}};
  if (static_cast<int>(m.components.size()) != x.index().size() || x.fiber_kind() != y.fiber_kind()) {
    comps.passed = false;
  } else {
    for (int i = 0; i < x.index().size(); ++i) {
      const auto a = prepare_for_kind(x.fiber(i), x.fiber_kind());
      const auto b = prepare_for_kind(y.fiber(m.index_map[i]), x.fiber_kind());
      if (!preserves(a, b, m.components[static_cast<std::size_t>(i)], x.fiber_kind())) {
        comps.passed = false;
        comps.witness = {i};
        break;
      }
    }
  }
  r.add(comps);
  if (!comps.passed) return r;
  Check square{"commutes", "structure", "f_i' . p_ii' = q_phi(i)phi(i') . f_i", true, "ij", {}, {}};
  for (int i = 0; i < x.index().size() && square.passed; ++i)
    for (int j = 0; j < x.index().size(); ++j) {
      if (!x.index().leq(i, j)) continue;
      const auto& p = x.transition(i, j);
      const auto& q = y.transition(m.index_map[i], m.index_map[j]);
      if (compose_maps(m.components[static_cast<std::size_t>(j)], p) !=
          compose_maps(q, m.components[static_cast<std::size_t>(i)])) {
        square.passed = false;
        square.witness = {i, j};
        break;
      }
    }
  r.add(square);
  return r;
}

void require_valid(const SystemMorphism& m) {
  auto r = check_system_morphism(m);
  if (!r.ok()) throw InvalidSystemMorphism("invalid system morphism: " + r.summary());
}

SystemMorphism identity_system_morphism(std::shared_ptr<const DirectSystem> s) {
  SystemMorphism m{s, s, identity_map(s->index().size()), {}};
  for (const auto& f : s->fibers()) m.components.push_back(identity_map(f.size()));
  return m;
}

SystemMorphism compose_system_morphisms(const SystemMorphism& m2, const SystemMorphism& m1) {
  if (!(*m1.target == *m2.source))
    throw DomainMismatch("cannot compose system morphisms: codomain differs from domain");
  SystemMorphism out{m1.source, m2.target, compose_maps(m2.index_map, m1.index_map), {}};
  for (int i = 0; i < m1.source->index().size(); ++i)
    out.components.push_back(compose_maps(m2.components[static_cast<std::size_t>(m1.index_map[i])],
                                          m1.components[static_cast<std::size_t>(i)]));
  require_valid(out);
  return out;
}

}  // namespace algkit
