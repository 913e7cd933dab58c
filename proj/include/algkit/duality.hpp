#pragma once

#include <memory>
#include <vector>

#include "algkit/homs.hpp"
#include "algkit/order.hpp"
#include "algkit/plonka.hpp"
#include "algkit/report.hpp"
#include "algkit/systems.hpp"

namespace algkit {

// ---------------------------------------------------------------------------
// Finite Stone duality

/// Atoms of a Boolean algebra in carrier order.
std::vector<int> atoms(const FiniteAlgebra& b);

/// Space of atoms. Throws NotBoolean.
FiniteSpace stone_dual(const FiniteAlgebra& b);

/// For h: B1 -> B2, the map atoms(B2) -> atoms(B1) sending q to the unique
/// atom p with q <= h(p). Points are positions in atoms().
Map stone_dual_hom(const Morphism& h);

/// Power-set algebra. Element x is the subset with bitmask x, so 0 is the
/// empty set and size-1 the whole space.
FiniteAlgebra ba_of_space(const FiniteSpace& x);

/// Preimage homomorphism P(Y) -> P(X) of a map f: X -> Y.
Morphism ba_hom_of_space_map(const FiniteSpace& x, const FiniteSpace& y, const Map& f);

/// x -> set of atoms below x, as an isomorphism b -> ba_of_space(stone_dual(b)).
/// Throws IsomorphismFailure.
Morphism stone_unit(const FiniteAlgebra& b);

// ---------------------------------------------------------------------------
// Lifted functors between direct systems of Boolean algebras and inverse
// systems of finite spaces

StoneSystem lift_functor_dir_to_inv(const DirectSystem& s);
DirectSystem lift_functor_inv_to_dir(const StoneSystem& s);

/// (phi, f_i): X -> Y becomes (phi, F(f_i)): F(Y) -> F(X).
InverseSystemMorphism<FiniteSpace> lift_morphism(const SystemMorphism& m,
                                                 std::shared_ptr<const StoneSystem> dual_target,
                                                 std::shared_ptr<const StoneSystem> dual_source);

/// (phi, f_j): X -> Y becomes (phi, G(f_j)): G(Y) -> G(X).
SystemMorphism lift_morphism(const InverseSystemMorphism<FiniteSpace>& m,
                             std::shared_ptr<const DirectSystem> dual_target,
                             std::shared_ptr<const DirectSystem> dual_source);

/// Identity on the index and stone_unit on every fiber, as a validated
/// system isomorphism s -> G(F(s)).
SystemMorphism stone_unit_system(std::shared_ptr<const DirectSystem> s);

// ---------------------------------------------------------------------------
// GR spaces
//
// A GR space is a FiniteAlgebra with binary "star", relation "leq" and
// constants "c0", "c1", "calpha"; a unary "neg" makes it a GR space with
// involution. The topology is discrete.

/// Partially ordered left normal band with constants, plus order
/// disconnectedness.
ValidationReport validate_gr(const FiniteAlgebra& g);

/// validate_gr plus G1-G6. G5 and G6 run over the enumerated Hom_GR(g, 3).
ValidationReport validate_igr(const FiniteAlgebra& g);

/// a [= b iff a*b <= b and b*a = b. Throws NotPoset if it fails to be an order.
FinitePoset box_order(const FiniteAlgebra& g);

/// Hom_b(s, 3) with the GR structure of 3 lifted pointwise. Points are the
/// homomorphisms in lexicographic order. Throws NotBisemilattice.
FiniteAlgebra dual_of_bsl(const FiniteAlgebra& s);

/// dual_of_bsl of the bisemilattice reduct with neg(phi)(x) = phi(x')'.
/// Throws NotIBSL.
FiniteAlgebra dual_of_ibsl(const FiniteAlgebra& b);

/// Hom_GR(g, 3) with pointwise + and . of 3. With an involution on g the
/// result also carries neg(Phi)(a) = Phi(neg a)', zero = the neutral element
/// of + and one = neg(zero). Throws NotGRSpace.
FiniteAlgebra dual_of_gr(const FiniteAlgebra& g);

/// Points of the duals, as maps into 3, in the order used above.
std::vector<Map> dual_points_bsl(const FiniteAlgebra& s);
std::vector<Map> dual_points_gr(const FiniteAlgebra& g);

/// x -> (phi -> phi(x)) into the double dual. Involutive bisemilattices give
/// an Ibsl isomorphism, plain bisemilattices a Bisemilattice one.
/// Throws IsomorphismFailure.
Morphism eps_iso(const FiniteAlgebra& b);

/// x -> (Phi -> Phi(x)) into the double dual, as an Igr or Gr isomorphism.
Morphism delta_iso(const FiniteAlgebra& g);

/// f*: dual(L) -> dual(I), phi -> phi . f, for an Ibsl or Bisemilattice hom f: I -> L.
Morphism dual_of_ibsl_hom(const Morphism& f);
/// g*: dual(H) -> dual(G), Phi -> Phi . g, for an Igr or Gr morphism g: G -> H.
Morphism dual_of_gr_hom(const Morphism& g);

/// lift_functor_dir_to_inv(plonka_decompose(b)). Throws NotIBSL.
StoneSystem ibsl_to_inverse_system(const FiniteAlgebra& b);
/// plonka_sum(lift_functor_inv_to_dir(s)).
FiniteAlgebra inverse_system_to_ibsl(const StoneSystem& s);

}  // namespace algkit
