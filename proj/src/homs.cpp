#include "algkit/homs.hpp"

#include <algorithm>

#include "algkit/errors.hpp"

namespace algkit {

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::Semilattice: return "sl";
    case Kind::Boolean: return "ba";
    case Kind::Bisemilattice: return "bsl";
    case Kind::Ibsl: return "ibsl";
    case Kind::Lattice: return "dl";
    case Kind::Gr: return "gr";
    case Kind::Igr: return "igr";
    case Kind::Poset: return "poset";
  }
  return "?";
}

Kind kind_from_string(std::string_view s) {
  if (s == "sl" || s == "semilattice") return Kind::Semilattice;
  if (s == "ba") return Kind::Boolean;
  if (s == "bsl") return Kind::Bisemilattice;
  if (s == "ibsl") return Kind::Ibsl;
  if (s == "dl") return Kind::Lattice;
  if (s == "gr") return Kind::Gr;
  if (s == "igr") return Kind::Igr;
  if (s == "poset") return Kind::Poset;
  throw KindMismatch("unknown kind '" + std::string(s) + "'");
}

const Signature& signature(Kind k) {
  static const Signature sl{{op::join}, {}, {op::bottom}, {}};
  static const Signature ba{{op::join, op::meet}, {op::neg}, {op::zero, op::one}, {}};
  static const Signature bsl{{op::join, op::meet}, {}, {}, {}};
  static const Signature gr{{op::star}, {}, {op::c0, op::c1, op::calpha}, {op::leq}};
  static const Signature igr{{op::star}, {op::neg}, {op::c0, op::c1, op::calpha}, {op::leq}};
  static const Signature poset{{}, {}, {}, {op::leq}};
  switch (k) {
    case Kind::Semilattice: return sl;
    case Kind::Boolean:
    case Kind::Ibsl: return ba;
    case Kind::Bisemilattice:
    case Kind::Lattice: return bsl;
    case Kind::Gr: return gr;
    case Kind::Igr: return igr;
    case Kind::Poset: return poset;
  }
  return poset;
}

namespace {

std::vector<int> synthesized_meet(const FiniteAlgebra& a) {
  const int n = a.size();
  std::vector<int> meet(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      meet[static_cast<std::size_t>(x * n + y)] =
          a.apply(op::neg, a.apply(op::join, a.apply(op::neg, x), a.apply(op::neg, y)));
  return meet;
}

std::optional<int> least_for_join(const FiniteAlgebra& a) {
  for (int b = 0; b < a.size(); ++b) {
    bool least = true;
    for (int x = 0; x < a.size() && least; ++x) least = a.apply(op::join, b, x) == x;
    if (least) return b;
  }
  return std::nullopt;
}

}  // namespace

FiniteAlgebra prepare_for_kind(const FiniteAlgebra& a, Kind kind) {
  FiniteAlgebra out = a;
  const bool involutive_ops = a.has_binary(op::join) && a.has_unary(op::neg) && a.has_constant(op::zero);
  if ((kind == Kind::Ibsl || kind == Kind::Boolean || kind == Kind::Bisemilattice) && involutive_ops) {
    if (!out.has_binary(op::meet)) out.set_binary(op::meet, synthesized_meet(a));
    if (kind != Kind::Bisemilattice && !out.has_constant(op::one))
      out.set_constant(op::one, a.apply(op::neg, a.constant(op::zero)));
  }
  if (kind == Kind::Semilattice && out.has_binary(op::join) && !out.has_constant(op::bottom)) {
    if (auto b = least_for_join(out)) out.set_constant(op::bottom, *b);
  }
  const auto& sig = signature(kind);
  auto require = [&](bool present, std::string_view name) {
    if (!present)
      throw KindMismatch("kind '" + std::string(to_string(kind)) + "' needs symbol '" +
                         std::string(name) + "'");
  };
  for (auto s : sig.binary) require(out.has_binary(s), s);
  for (auto s : sig.unary) require(out.has_unary(s), s);
  for (auto s : sig.constants) require(out.has_constant(s), s);
  for (auto s : sig.relations) require(out.has_relation(s), s);
  return out;
}

bool preserves(const FiniteAlgebra& a, const FiniteAlgebra& b, const Map& f, Kind kind) {
  const int n = a.size();
  if (static_cast<int>(f.size()) != n) return false;
  for (int v : f)
    if (v < 0 || v >= b.size()) return false;
  const auto& sig = signature(kind);
  for (auto s : sig.constants)
    if (f[a.constant(s)] != b.constant(s)) return false;
  for (auto s : sig.unary)
    for (int x = 0; x < n; ++x)
      if (f[a.apply(s, x)] != b.apply(s, f[x])) return false;
  for (auto s : sig.binary)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (f[a.apply(s, x, y)] != b.apply(s, f[x], f[y])) return false;
  for (auto s : sig.relations)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (a.related(s, x, y) && !b.related(s, f[x], f[y])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(AlgebraPtr source, AlgebraPtr target, Map map, Kind kind)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)), kind_(kind) {
  if (!source_ || !target_) throw InvalidMorphism("morphism needs source and target");
  const FiniteAlgebra a = prepare_for_kind(*source_, kind_);
  const FiniteAlgebra b = prepare_for_kind(*target_, kind_);
  if (!preserves(a, b, map_, kind_))
    throw InvalidMorphism("map is not a " + std::string(to_string(kind_)) + " homomorphism");
}

Morphism::Morphism(const FiniteAlgebra& source, const FiniteAlgebra& target, Map map, Kind kind)
    : Morphism(std::make_shared<const FiniteAlgebra>(source),
               std::make_shared<const FiniteAlgebra>(target), std::move(map), kind) {}

Morphism Morphism::identity(const FiniteAlgebra& a, Kind kind) {
  return identity(std::make_shared<const FiniteAlgebra>(a), kind);
}

Morphism Morphism::identity(AlgebraPtr a, Kind kind) {
  const int n = a->size();
  return Morphism(a, a, identity_map(n), kind);
}

bool Morphism::is_bijective() const { return is_bijection(map_, target_->size()); }

bool Morphism::is_isomorphism() const {
  if (!is_bijective()) return false;
  return preserves(prepare_for_kind(*target_, kind_), prepare_for_kind(*source_, kind_),
                   inverse_map(map_), kind_);
}

bool Morphism::operator==(const Morphism& other) const {
  return kind_ == other.kind_ && map_ == other.map_ &&
         source_->same_structure(*other.source_) && target_->same_structure(*other.target_);
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!f.target().same_structure(g.source()))
    throw DomainMismatch("cannot compose: codomain of the first map is not the domain of the second");
  if (f.kind() != g.kind()) throw KindMismatch("cannot compose morphisms of different kinds");
  return Morphism(f.source_ptr(), g.target_ptr(), compose_maps(g.map(), f.map()), f.kind());
}

// ---------------------------------------------------------------------------
// Backtracking enumeration

namespace {

struct BinaryConstraint {
  std::span<const int> target_table;
  int x, y, result;
};
struct UnaryConstraint {
  std::span<const int> target_map;
  int x, result;
};
struct RelationConstraint {
  std::span<const std::uint8_t> target_rel;
  int x, y;
};

class HomSearch {
 public:
  HomSearch(const FiniteAlgebra& a, const FiniteAlgebra& b, Kind kind, bool injective)
      : a_(prepare_for_kind(a, kind)), b_(prepare_for_kind(b, kind)), injective_(injective) {
    const int n = a_.size();
    m_ = b_.size();
    binary_.resize(static_cast<std::size_t>(n));
    unary_.resize(static_cast<std::size_t>(n));
    relation_.resize(static_cast<std::size_t>(n));
    fixed_.assign(static_cast<std::size_t>(n), -1);
    const auto& sig = signature(kind);
    for (auto s : sig.constants) {
      const int c = a_.constant(s);
      const int v = b_.constant(s);
      if (fixed_[c] != -1 && fixed_[c] != v) impossible_ = true;
      fixed_[c] = v;
    }
    for (auto s : sig.binary) {
      auto ta = a_.binary_table(s);
      auto tb = b_.binary_table(s);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const int r = ta[static_cast<std::size_t>(x * n + y)];
          binary_[static_cast<std::size_t>(std::max({x, y, r}))].push_back({tb, x, y, r});
        }
    }
    for (auto s : sig.unary) {
      auto ua = a_.unary_map(s);
      auto ub = b_.unary_map(s);
      for (int x = 0; x < n; ++x) {
        const int r = ua[static_cast<std::size_t>(x)];
        unary_[static_cast<std::size_t>(std::max(x, r))].push_back({ub, x, r});
      }
    }
    for (auto s : sig.relations) {
      auto ra = a_.relation_matrix(s);
      auto rb = b_.relation_matrix(s);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (ra[static_cast<std::size_t>(x * n + y)])
            relation_[static_cast<std::size_t>(std::max(x, y))].push_back({rb, x, y});
    }
    if (injective_ && m_ < n) impossible_ = true;
  }

  void run(const std::function<bool(const Map&)>& visit) {
    if (impossible_) return;
    f_.assign(static_cast<std::size_t>(a_.size()), -1);
    used_.assign(static_cast<std::size_t>(m_), 0);
    visit_ = &visit;
    dfs(0);
  }

 private:
  bool consistent(int x) const {
    const int m = m_;
    for (const auto& c : binary_[static_cast<std::size_t>(x)])
      if (f_[c.result] != c.target_table[static_cast<std::size_t>(f_[c.x] * m + f_[c.y])]) return false;
    for (const auto& c : unary_[static_cast<std::size_t>(x)])
      if (f_[c.result] != c.target_map[static_cast<std::size_t>(f_[c.x])]) return false;
    for (const auto& c : relation_[static_cast<std::size_t>(x)])
      if (!c.target_rel[static_cast<std::size_t>(f_[c.x] * m + f_[c.y])]) return false;
    return true;
  }

  // Returns false to abort the whole search.
  bool dfs(int x) {
    if (x == a_.size()) return (*visit_)(f_);
    const int lo = fixed_[x] >= 0 ? fixed_[x] : 0;
    const int hi = fixed_[x] >= 0 ? fixed_[x] + 1 : m_;
    for (int v = lo; v < hi; ++v) {
      if (injective_ && used_[static_cast<std::size_t>(v)]) continue;
      f_[x] = v;
      if (!consistent(x)) continue;
      if (injective_) used_[static_cast<std::size_t>(v)] = 1;
      const bool go_on = dfs(x + 1);
      if (injective_) used_[static_cast<std::size_t>(v)] = 0;
      if (!go_on) return false;
    }
    f_[x] = -1;
    return true;
  }

  FiniteAlgebra a_, b_;
  bool injective_;
  int m_ = 0;
  bool impossible_ = false;
  std::vector<std::vector<BinaryConstraint>> binary_;
  std::vector<std::vector<UnaryConstraint>> unary_;
  std::vector<std::vector<RelationConstraint>> relation_;
  std::vector<int> fixed_;
  Map f_;
  std::vector<char> used_;
  const std::function<bool(const Map&)>* visit_ = nullptr;
};

}  // namespace

void for_each_hom(const FiniteAlgebra& a, const FiniteAlgebra& b, Kind kind,
                  const std::function<bool(const Map&)>& visit, bool injective) {
  HomSearch search(a, b, kind, injective);
  search.run(visit);
}

std::vector<Map> enumerate_hom_maps(const FiniteAlgebra& a, const FiniteAlgebra& b, Kind kind) {
  std::vector<Map> out;
  for_each_hom(a, b, kind, [&](const Map& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::size_t count_homs(const FiniteAlgebra& a, const FiniteAlgebra& b, Kind kind) {
  std::size_t n = 0;
  for_each_hom(a, b, kind, [&](const Map&) {
    ++n;
    return true;
  });
  return n;
}

std::vector<Morphism> enumerate_homs(const FiniteAlgebra& a, const FiniteAlgebra& b, Kind kind) {
  auto pa = std::make_shared<const FiniteAlgebra>(a);
  auto pb = std::make_shared<const FiniteAlgebra>(b);
  std::vector<Morphism> out;
  for (auto& f : enumerate_hom_maps(a, b, kind)) out.emplace_back(pa, pb, std::move(f), kind);
  return out;
}

std::optional<Morphism> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, Kind kind) {
  const FiniteAlgebra pa = prepare_for_kind(a, kind);
  const FiniteAlgebra pb = prepare_for_kind(b, kind);
  if (pa.size() != pb.size()) return std::nullopt;
  std::optional<Map> found;
  for_each_hom(pa, pb, kind, [&](const Map& f) {
    if (preserves(pb, pa, inverse_map(f), kind)) {
      found = f;
      return false;
    }
    return true;
  }, /*injective=*/true);
  if (!found) return std::nullopt;
  return Morphism(a, b, *found, kind);
}

}  // namespace algkit
