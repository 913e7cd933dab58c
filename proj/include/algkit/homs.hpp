#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "algkit/algebra.hpp"

namespace algkit {

/// Which symbols a morphism must preserve.
enum class Kind {
  Semilattice,    // join, bottom
  Boolean,        // join, meet, neg, zero, one
  Bisemilattice,  // join, meet
  Ibsl,           // join, meet, neg, zero, one (meet/one synthesized when absent)
  Lattice,        // join, meet (distributive lattices, unbounded homs)
  Gr,             // star, c0, c1, calpha, leq
  Igr,            // Gr + neg
  Poset,          // leq
};

std::string_view to_string(Kind k);
/// Accepts "sl"/"semilattice", "ba", "bsl", "ibsl", "dl", "gr", "igr", "poset".
Kind kind_from_string(std::string_view s);

struct Signature {
  std::vector<std::string_view> binary;
  std::vector<std::string_view> unary;
  std::vector<std::string_view> constants;
  std::vector<std::string_view> relations;
};
const Signature& signature(Kind k);

/// Returns `a` with every symbol `kind` needs, synthesizing meet and one of an
/// involutive bisemilattice from join, neg, zero when they are absent.
/// Throws KindMismatch when a required symbol cannot be provided.
FiniteAlgebra prepare_for_kind(const FiniteAlgebra& a, Kind kind);

/// Pointwise check that `map` preserves every symbol of `kind`.
bool preserves(const FiniteAlgebra& a, const FiniteAlgebra& b, const Map& map, Kind kind);

/// Kind-tagged total map, validated at construction.
class Morphism {
 public:
  using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

  /// Throws InvalidMorphism when `map` does not preserve the symbols of `kind`.
  Morphism(AlgebraPtr source, AlgebraPtr target, Map map, Kind kind);
  Morphism(const FiniteAlgebra& source, const FiniteAlgebra& target, Map map, Kind kind);

  static Morphism identity(const FiniteAlgebra& a, Kind kind);
  static Morphism identity(AlgebraPtr a, Kind kind);

  const FiniteAlgebra& source() const { return *source_; }
  const FiniteAlgebra& target() const { return *target_; }
  const AlgebraPtr& source_ptr() const { return source_; }
  const AlgebraPtr& target_ptr() const { return target_; }
  const Map& map() const { return map_; }
  Kind kind() const { return kind_; }
  int operator()(int x) const { return map_[static_cast<std::size_t>(x)]; }

  bool is_bijective() const;
  /// Bijective and the inverse map is again a `kind` morphism.
  bool is_isomorphism() const;

  /// Equality of map, kind and structure of both ends.
  bool operator==(const Morphism& other) const;

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  Map map_;
  Kind kind_;
};

/// g . f; throws DomainMismatch unless f's target is g's source.
Morphism compose(const Morphism& g, const Morphism& f);

/// Calls `visit` for each kind-preserving map a -> b in lexicographic order of
/// value vectors, stopping when it returns false. The backtracking checks each
/// equation as soon as all of its arguments and its result are assigned.
void for_each_hom(const FiniteAlgebra& a, const FiniteAlgebra& b, Kind kind,
                  const std::function<bool(const Map&)>& visit, bool injective = false);

std::vector<Map> enumerate_hom_maps(const FiniteAlgebra& a, const FiniteAlgebra& b, Kind kind);
std::size_t count_homs(const FiniteAlgebra& a, const FiniteAlgebra& b, Kind kind);

/// Complete, duplicate-free, lexicographically sorted hom-set.
std::vector<Morphism> enumerate_homs(const FiniteAlgebra& a, const FiniteAlgebra& b, Kind kind);

/// First isomorphism in lexicographic order, if any.
std::optional<Morphism> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, Kind kind);

}  // namespace algkit
