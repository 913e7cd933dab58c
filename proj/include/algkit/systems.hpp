#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "algkit/algebra.hpp"
#include "algkit/errors.hpp"
#include "algkit/homs.hpp"
#include "algkit/order.hpp"
#include "algkit/report.hpp"
#include "algkit/validate.hpp"

namespace algkit {

/// Arrows of a system keyed by the index pair (i, i') with i <= i'.
using ArrowMap = std::map<std::pair<int, int>, Map>;

/// Direct systems have transitions X_i -> X_i'; inverse systems have bondings X_i' -> X_i.
enum class Direction { Direct, Inverse };

/// Coherence of an arrow family over `index`: one arrow per comparable pair,
/// correct shapes, identities on the diagonal and full transitivity
/// (p_i'i'' . p_ii' = p_ii'' for direct, p_ii' . p_i'i'' = p_ii'' for inverse).
ValidationReport check_coherence(const JoinSemilattice& index, const std::vector<int>& object_sizes,
                                 const ArrowMap& arrows, Direction direction);

/// Adds identity arrows on the diagonal where missing.
ArrowMap with_identities(ArrowMap arrows, const std::vector<int>& object_sizes);

/// Finite topological space. Finite Stone spaces are discrete, so the carrier
/// size is all there is. Size 0 (dual of the one-element Boolean algebra) is admitted.
struct FiniteSpace {
  int size = 0;
  bool operator==(const FiniteSpace&) const = default;
};

inline int term_size(const FiniteSpace& s) { return s.size; }
inline int term_size(const FinitePoset& p) { return p.size(); }
inline bool term_morphism(const FiniteSpace&, const FiniteSpace&, const Map&) { return true; }
inline bool term_morphism(const FinitePoset& src, const FinitePoset& tgt, const Map& f) {
  return src.monotone(f, tgt);
}

/// Semilattice direct system of algebras of one kind, validated on construction.
class DirectSystem {
 public:
  /// Throws InvalidSystem. Identity transitions may be omitted.
  DirectSystem(JoinSemilattice index, Kind fiber_kind, std::vector<FiniteAlgebra> fibers,
               ArrowMap transitions);

  /// Full report: coherence, fiber validity for the kind, transitions are kind-homs.
  static ValidationReport check(const JoinSemilattice& index, Kind fiber_kind,
                                const std::vector<FiniteAlgebra>& fibers, const ArrowMap& transitions);

  const JoinSemilattice& index() const { return index_; }
  Kind fiber_kind() const { return fiber_kind_; }
  const std::vector<FiniteAlgebra>& fibers() const { return fibers_; }
  const FiniteAlgebra& fiber(int i) const { return fibers_.at(static_cast<std::size_t>(i)); }
  const ArrowMap& transitions() const { return transitions_; }
  const Map& transition(int i, int j) const;
  std::vector<int> fiber_sizes() const;

  bool operator==(const DirectSystem&) const = default;

 private:
  JoinSemilattice index_;
  Kind fiber_kind_;
  std::vector<FiniteAlgebra> fibers_;
  ArrowMap transitions_;
};

/// Semilattice inverse system of finite spaces (Stone) or finite posets (Priestley).
template <class Term>
class InverseSystem {
 public:
  InverseSystem(JoinSemilattice index, std::vector<Term> terms, ArrowMap bondings)
      : index_(std::move(index)), terms_(std::move(terms)) {
    bondings_ = with_identities(std::move(bondings), term_sizes());
    auto r = check(index_, terms_, bondings_);
    if (!r.ok()) throw InvalidSystem("invalid inverse system: " + r.summary());
  }

  static ValidationReport check(const JoinSemilattice& index, const std::vector<Term>& terms,
                                const ArrowMap& bondings) {
    std::vector<int> sizes;
    for (const auto& t : terms) sizes.push_back(term_size(t));
    if (static_cast<int>(terms.size()) != index.size()) {
      ValidationReport r;
      r.add(Check{"terms", "structure", "one term per index", false, "", {}, {}});
      return r;
    }
    ValidationReport r = check_coherence(index, sizes, with_identities(bondings, sizes), Direction::Inverse);
    if (!r.ok()) return r;
    Check c{"bonding-morphisms", "structure", "bondings are morphisms of terms", true, "ij", {}, {}};
    for (const auto& [key, f] : bondings) {
      const auto [i, j] = key;
      if (!term_morphism(terms[static_cast<std::size_t>(j)], terms[static_cast<std::size_t>(i)], f)) {
        c.passed = false;
        c.witness = {i, j};
        break;
      }
    }
    r.add(std::move(c));
    Check empty{"empty-terms", "note", "terms are non-empty", true, "i", {}, {}};
    for (int i = 0; i < index.size(); ++i)
      if (sizes[static_cast<std::size_t>(i)] == 0) {
        empty.witness = {i};
        empty.note = "empty term admitted (dual of a one-element algebra)";
        break;
      }
    r.add(std::move(empty));
    return r;
  }

  const JoinSemilattice& index() const { return index_; }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& term(int i) const { return terms_.at(static_cast<std::size_t>(i)); }
  const ArrowMap& bondings() const { return bondings_; }
  const Map& bonding(int i, int j) const { return bondings_.at({i, j}); }
  std::vector<int> term_sizes() const {
    std::vector<int> s;
    for (const auto& t : terms_) s.push_back(term_size(t));
    return s;
  }
  bool has_empty_term() const {
    for (const auto& t : terms_)
      if (term_size(t) == 0) return true;
    return false;
  }

  bool operator==(const InverseSystem&) const = default;

 private:
  JoinSemilattice index_;
  std::vector<Term> terms_;
  ArrowMap bondings_;
};

using StoneSystem = InverseSystem<FiniteSpace>;
using PriestleySystem = InverseSystem<FinitePoset>;

/// Morphism (phi, f_i) of direct systems: phi: I -> J a semilattice hom
/// preserving the bottom, f_i: X_i -> Y_phi(i) fiber homs with
/// f_i' . p_ii' = q_phi(i)phi(i') . f_i.
struct SystemMorphism {
  std::shared_ptr<const DirectSystem> source;
  std::shared_ptr<const DirectSystem> target;
  Map index_map;
  std::vector<Map> components;

  bool same_arrows(const SystemMorphism& other) const;
};

ValidationReport check_system_morphism(const SystemMorphism& m);
/// Throws InvalidSystemMorphism.
void require_valid(const SystemMorphism& m);
SystemMorphism identity_system_morphism(std::shared_ptr<const DirectSystem> s);
/// (psi, g) . (phi, f) = (psi . phi, g_phi(i) . f_i). Throws DomainMismatch.
SystemMorphism compose_system_morphisms(const SystemMorphism& m2, const SystemMorphism& m1);

/// Morphism (phi, f_j) of inverse systems X -> Y: phi: J -> I a semilattice hom
/// preserving the bottom, f_j: X_phi(j) -> Y_j with
/// f_j . p_phi(j)phi(j') = q_jj' . f_j'.
template <class Term>
struct InverseSystemMorphism {
  std::shared_ptr<const InverseSystem<Term>> source;
  std::shared_ptr<const InverseSystem<Term>> target;
  Map index_map;
  std::vector<Map> components;

  bool same_arrows(const InverseSystemMorphism& other) const {
    return *source == *other.source && *target == *other.target && index_map == other.index_map &&
           components == other.components;
  }
};

namespace detail {
ValidationReport check_index_map(const JoinSemilattice& from, const JoinSemilattice& to, const Map& phi);
}

template <class Term>
ValidationReport check_system_morphism(const InverseSystemMorphism<Term>& m) {
  const auto& x = *m.source;
  const auto& y = *m.target;
  ValidationReport r = detail::check_index_map(y.index(), x.index(), m.index_map);
  if (!r.ok()) return r;
  Check comps{"components", "structure", "f_j: X_phi(j) -> Y_j is a morphism", true, "j", {}, {}};
  if (static_cast<int>(m.components.size()) != y.index().size()) {
    comps.passed = false;
  } else {
    for (int j = 0; j < y.index().size(); ++j) {
      const auto& f = m.components[static_cast<std::size_t>(j)];
      const auto& src = x.term(m.index_map[j]);
      const auto& tgt = y.term(j);
      bool ok = static_cast<int>(f.size()) == term_size(src);
      for (int v : f) ok = ok && v >= 0 && v < term_size(tgt);
      ok = ok && term_morphism(src, tgt, f);
      if (!ok) {
        comps.passed = false;
        comps.witness = {j};
        break;
      }
    }
  }
  r.add(comps);
  if (!comps.passed) return r;
  Check square{"commutes", "structure", "f_j . p_phi(j)phi(j') = q_jj' . f_j'", true, "jk", {}, {}};
  for (int j = 0; j < y.index().size() && square.passed; ++j)
    for (int k = 0; k < y.index().size(); ++k) {
      if (!y.index().leq(j, k)) continue;
      const auto& p = x.bonding(m.index_map[j], m.index_map[k]);
      const auto& q = y.bonding(j, k);
      if (compose_maps(m.components[static_cast<std::size_t>(j)], p) !=
          compose_maps(q, m.components[static_cast<std::size_t>(k)])) {
        square.passed = false;
        square.witness = {j, k};
        break;
      }
    }
  r.add(square);
  return r;
}

template <class Term>
InverseSystemMorphism<Term> identity_system_morphism(std::shared_ptr<const InverseSystem<Term>> s) {
  InverseSystemMorphism<Term> m{s, s, identity_map(s->index().size()), {}};
  for (int j = 0; j < s->index().size(); ++j) m.components.push_back(identity_map(term_size(s->term(j))));
  return m;
}

/// (psi, g) . (phi, f) = (phi . psi, g_k . f_psi(k)).
template <class Term>
InverseSystemMorphism<Term> compose_system_morphisms(const InverseSystemMorphism<Term>& m2,
                                                     const InverseSystemMorphism<Term>& m1) {
  if (!(*m1.target == *m2.source))
    throw DomainMismatch("cannot compose inverse-system morphisms: codomain differs from domain");
  InverseSystemMorphism<Term> out{m1.source, m2.target, compose_maps(m1.index_map, m2.index_map), {}};
  for (int k = 0; k < m2.target->index().size(); ++k)
    out.components.push_back(compose_maps(m2.components[static_cast<std::size_t>(k)],
                                          m1.components[static_cast<std::size_t>(m2.index_map[k])]));
  return out;
}

}  // namespace algkit
