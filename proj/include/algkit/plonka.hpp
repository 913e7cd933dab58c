#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "algkit/homs.hpp"
#include "algkit/systems.hpp"

namespace algkit {

/// Canonical carrier layout of a Płonka sum: fibers concatenated in index
/// order, elements in fiber order.
struct FiberLayout {
  std::vector<int> offset;    // first global element of each fiber
  std::vector<int> fiber_of;  // global element -> index
  std::vector<int> local;     // global element -> position inside its fiber

  int global(int i, int x) const { return offset[static_cast<std::size_t>(i)] + x; }
};

FiberLayout fiber_layout(const DirectSystem& s);

/// Płonka sum. Every binary and unary operation shared by the fibers is
/// evaluated in the fiber of the joined index after pushing the arguments
/// along transitions; constants come from the bottom fiber. Boolean fibers
/// give an involutive bisemilattice, lattice fibers a bisemilattice.
FiniteAlgebra plonka_sum(const DirectSystem& s);

/// Kind of the Płonka sum of a system with the given fiber kind.
Kind sum_kind(Kind fiber_kind);

/// Decomposition of an involutive bisemilattice into Boolean fibers indexed by
/// the local units a + a'. Also records where each element of `b` lands in
/// plonka_sum(system), which is an isomorphism b -> plonka_sum(system).
struct Decomposition {
  DirectSystem system;
  Map embedding;
};

Decomposition plonka_decompose_with_embedding(const FiniteAlgebra& b);
/// Throws NotIBSL.
DirectSystem plonka_decompose(const FiniteAlgebra& b);

/// The index map phi_h with h(A_i) inside B_phi(i), as a semilattice morphism.
/// `h` goes from plonka_sum(da) to plonka_sum(db). Throws FiberSplit.
Morphism induced_index_map(const Morphism& h, const DirectSystem& da, const DirectSystem& db);

/// (phi_h, h restricted to each fiber), validated as a system morphism.
SystemMorphism restrict_to_fibers(const Morphism& h, std::shared_ptr<const DirectSystem> da,
                                  std::shared_ptr<const DirectSystem> db);

/// h(a) = f_i(a) for a in A_i, validated as a homomorphism of the sums.
/// Throws InvalidSystemMorphism.
Morphism system_morphism_to_hom(const SystemMorphism& m);

/// All system morphisms da -> db, sorted by (index map, components).
std::vector<SystemMorphism> enumerate_system_morphisms(std::shared_ptr<const DirectSystem> da,
                                                       std::shared_ptr<const DirectSystem> db);

/// An isomorphism of systems: bijective index map with semilattice inverse and
/// fiber isomorphisms commuting with transitions.
std::optional<SystemMorphism> find_system_isomorphism(std::shared_ptr<const DirectSystem> da,
                                                      std::shared_ptr<const DirectSystem> db);

}  // namespace algkit
