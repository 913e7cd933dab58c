#pragma once

#include <cstdint>
#include <random>

#include "algkit/algebra.hpp"
#include "algkit/order.hpp"
#include "algkit/systems.hpp"

namespace algkit {

/// Seeded generator. Draws use `engine() % n`, so streams are identical on
/// every platform for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (engine_() & 1) != 0; }
  /// Fisher-Yates shuffle of the identity.
  Map permutation(int n);

 private:
  std::mt19937_64 engine_;
};

/// Union-closed family of subsets of a 3-point set containing the empty set,
/// with `size` members, as a join semilattice with shuffled carrier.
/// 1 <= size <= 8.
JoinSemilattice random_index(Rng& rng, int size);

/// Random poset on n points (a random subset of a random linear order's
/// comparabilities, transitively closed).
FinitePoset random_poset(Rng& rng, int n);

/// Direct system of power-set algebras over a random index of at most
/// `max_fibers` elements, each fiber of size at most `max_fiber_size`.
/// Transitions are preimages of coherent point maps; fibers are relabeled.
DirectSystem random_ba_system(Rng& rng, int max_fibers, int max_fiber_size);

/// Direct system of down-set lattices of restrictions of one random poset,
/// transitions D -> D restricted to the smaller point set.
DirectSystem random_dl_system(Rng& rng, int max_fibers, int max_fiber_size);

/// Relabels every fiber by a random permutation, adjusting the transitions.
DirectSystem relabel_fibers(const DirectSystem& s, Rng& rng);

/// relabel(a, random permutation).
FiniteAlgebra shuffle(const FiniteAlgebra& a, Rng& rng);

/// Shuffled Płonka sum of random_ba_system / random_dl_system.
FiniteAlgebra random_ibsl(Rng& rng, int max_fibers, int max_fiber_size);
FiniteAlgebra random_bisemilattice(Rng& rng, int max_fibers, int max_fiber_size);

}  // namespace algkit
