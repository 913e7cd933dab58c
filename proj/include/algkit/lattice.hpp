#pragma once

#include <vector>

#include "algkit/homs.hpp"
#include "algkit/order.hpp"
#include "algkit/plonka.hpp"
#include "algkit/systems.hpp"

namespace algkit {

/// Decomposition of a distributive bisemilattice into distributive-lattice
/// fibers. Classes are a ~ b iff a*b = a and b*a = b with a*b = a.(a+b);
/// the transition into a class applies x -> x*w for any w of that class.
/// Classes are ordered by their least element.
/// Throws NotBisemilattice, NoLowerBound (the class semilattice has no least
/// element), IllDefinedTransition.
Decomposition plonka_decompose_bsl_with_embedding(const FiniteAlgebra& b);
DirectSystem plonka_decompose_bsl(const FiniteAlgebra& b);

/// Least element of a finite lattice, computed from the meet table.
int lattice_bottom(const FiniteAlgebra& l);
int lattice_top(const FiniteAlgebra& l);

/// Join-irreducible elements (non-bottom, not a join of two strictly smaller
/// elements), in carrier order. Throws NotDistributive.
std::vector<int> join_irreducibles(const FiniteAlgebra& l);

/// Join-irreducibles with the induced order.
FinitePoset priestley_dual(const FiniteAlgebra& l);

/// Lattice of down-sets under union and intersection. Element x is the
/// x-th down-set in increasing bitmask order, so 0 is the empty set.
FiniteAlgebra dl_of_poset(const FinitePoset& p);
/// Bitmask of each element of dl_of_poset(p).
std::vector<std::uint64_t> down_sets(const FinitePoset& p);

/// For a bounded lattice hom h: L -> M, the monotone map J(M) -> J(L) sending
/// j to the least x with j <= h(x). Throws UnboundedTransition when h does
/// not preserve bottom and top.
Map priestley_dual_hom(const Morphism& h);

/// Preimage hom D(Q) -> D(P) of a monotone f: P -> Q.
Morphism dl_hom_of_poset_map(const FinitePoset& p, const FinitePoset& q, const Map& f);

/// x -> down-set of join-irreducibles below x, as an isomorphism
/// l -> dl_of_poset(priestley_dual(l)).
Morphism birkhoff_unit(const FiniteAlgebra& l);
/// p -> principal down-set, as an order isomorphism p -> priestley_dual(dl_of_poset(p)).
Map poset_unit(const FinitePoset& p);

bool is_bounded_lattice_hom(const FiniteAlgebra& a, const FiniteAlgebra& b, const Map& f);

/// Priestley duals of the fibers of plonka_decompose_bsl(b), bondings dual to
/// the transitions. Throws NotBisemilattice, UnboundedTransition.
PriestleySystem bsl_to_inverse_system(const FiniteAlgebra& b);
DirectSystem lift_priestley_to_dir(const PriestleySystem& s);
/// plonka_sum(lift_priestley_to_dir(s)).
FiniteAlgebra inverse_system_to_bsl(const PriestleySystem& s);

}  // namespace algkit
