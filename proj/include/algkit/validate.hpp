#pragma once

#include <string_view>
#include <utility>

#include "algkit/algebra.hpp"
#include "algkit/order.hpp"
#include "algkit/report.hpp"

namespace algkit {

/// Idempotence, commutativity and associativity of join and meet, plus both
/// distributive laws. Throws MissingOperation without join/meet.
ValidationReport validate_bisemilattice(const FiniteAlgebra& a);

/// Axioms I1-I8 of involutive bisemilattices and the two derived laws
/// x+y = (x'.y')' and x+y = x+(x'.y). A missing meet or one is synthesized
/// from join, neg and zero; a present one is checked against the synthesis
/// through I5 and I8.
ValidationReport validate_ibsl(const FiniteAlgebra& a);

/// Bounded distributive lattice with complements.
ValidationReport validate_boolean_algebra(const FiniteAlgebra& a);

/// Lattice laws (including absorption) and distributivity.
ValidationReport validate_distributive_lattice(const FiniteAlgebra& a);

/// Join semilattice with a least element (given as constant "bottom" or computed).
ValidationReport validate_join_semilattice(const FiniteAlgebra& a);

/// x <=_join y iff x + y = y, and x <=_meet y iff x . y = x.
std::pair<FinitePoset, FinitePoset> induced_orders(const FiniteAlgebra& a);
FinitePoset join_order(const FiniteAlgebra& a);
FinitePoset meet_order(const FiniteAlgebra& a);

/// Built-in algebras: "two", "s2", "wk", "three", and the GR spaces
/// "three-gr" (no involution) and "wk-gr" (with involution).
FiniteAlgebra builtin(std::string_view name);

/// Join semilattice with least element, used as the index set of systems.
class JoinSemilattice {
 public:
  /// Validates; computes and stores the constant "bottom" when absent.
  /// Throws InvalidSemilattice.
  explicit JoinSemilattice(const FiniteAlgebra& algebra);

  static JoinSemilattice chain(int n);
  static JoinSemilattice singleton() { return chain(1); }

  int size() const { return algebra_.size(); }
  int join(int i, int j) const { return algebra_.apply(op::join, i, j); }
  bool leq(int i, int j) const { return join(i, j) == j; }
  int bottom() const { return algebra_.constant(op::bottom); }
  const FiniteAlgebra& algebra() const { return algebra_; }
  FinitePoset order() const { return join_order(algebra_); }

  bool operator==(const JoinSemilattice&) const = default;

 private:
  FiniteAlgebra algebra_;
};

}  // namespace algkit
