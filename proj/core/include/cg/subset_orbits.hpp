#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cg/f2.hpp"
#include "cg/permutation.hpp"
#include "cg/symplectic.hpp"

namespace cg {

using Subset = std::vector<Point>;

/// Orbits of the group generated by `generators` on the k-subsets of
/// 0..n-1. Subsets are ascending; each orbit is sorted and orbits are
/// ordered by their least subset. Throws ScaleError beyond 10^7 subsets.
std::vector<std::vector<Subset>> orbit_partition_k_subsets(std::span<const Permutation> generators, std::size_t n,
                                                           std::size_t k);

/// A product of transvections t_{c_1} ... t_{c_r} (applied in that order).
struct TransvectionWord {
  std::vector<F2Vector> c;
  /// t_{c_1} ... t_{c_r} as a matrix acting on row vectors.
  F2Matrix matrix;
};

/// Image of the form label a under the word: a -> a when theta_a(c) = 1,
/// a + c otherwise, for each c in turn.
F2Vector act_on_form(const SymplecticSpace& space, const TransvectionWord& w, const F2Vector& a);

/// theta_0(v1 + v2 + v3): the orbit invariant of 3-subsets of Omega^eps.
bool form_triple_invariant(const SymplecticSpace& space, std::span<const F2Vector, 3> t);
/// phi(v1,v2) + phi(v1,v3) + phi(v2,v3): the orbit invariant of 3-subsets of V.
bool vector_triple_invariant(const SymplecticSpace& space, std::span<const F2Vector, 3> t);

/// A word mapping the 3-subset t1 of Omega^eps onto t2 (setwise), given as
/// labels in V^eps. Maps one point at a time through transvections fixing
/// the points already placed, the last one through a solution of the
/// affine theta system. Falls back to breadth-first search over 3-subsets
/// (m <= 4) when the direct route fails. The result is verified.
/// NoMap when the invariants differ.
TransvectionWord witness_map_3subsets(const SymplecticSpace& space, bool eps, std::span<const F2Vector, 3> t1,
                                      std::span<const F2Vector, 3> t2);

}  // namespace cg
