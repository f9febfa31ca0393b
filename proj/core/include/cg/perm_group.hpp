#pragma once

// Permutation groups through a stabilizer chain.
//
// The chain is built by deterministic Schreier-Sims: base points are taken
// in increasing order among moved points, transversals are stored
// explicitly, and input generators that already sift to the identity are
// never added. Degrees up to a few hundred points are the intended range.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cg/bigint.hpp"
#include "cg/permutation.hpp"

namespace cg {

class PermGroup {
 public:
  /// Trivial group of the given degree.
  explicit PermGroup(std::size_t degree);
  /// Throws DimensionError when a generator has the wrong degree.
  PermGroup(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const { return degree_; }
  /// Input generators that contributed to the chain, in input order.
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  const std::vector<Point>& base() const { return base_; }
  std::vector<std::size_t> transversal_sizes() const;

  BigInt order() const;
  bool is_trivial() const { return base_.empty(); }

  /// Adds g to the group; returns false (and changes nothing) when g is
  /// already a member.
  bool add_generator(const Permutation& g);

  bool contains(const Permutation& g) const;
  /// Residue of g after sifting, and the level at which it dropped out
  /// (base().size() when it passed every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& g) const;

  /// Re-sifts every strong generator and compares the order with the
  /// product of transversal sizes. Used by tests as a self-check.
  bool verify_chain() const;

  std::vector<std::vector<Point>> orbits() const;
  std::vector<Point> orbit(Point x) const;
  bool is_transitive() const;
  /// Points moved by some generator, ascending.
  std::vector<Point> moved_points() const;

  /// Action on a union of orbits, relabelled 0..|domain|-1 in the given
  /// order. Throws InvalidInput if the domain is not invariant.
  PermGroup restricted_to(std::span<const Point> domain) const;

  /// Smallest block of imprimitivity containing alpha and beta.
  /// Throws InvalidInput for an intransitive group.
  std::vector<Point> minimal_block(Point alpha, Point beta) const;
  /// Distinct nontrivial minimal blocks containing the point 0.
  std::vector<std::vector<Point>> blocks_of_imprimitivity() const;
  /// Transitive with no nontrivial block. The trivial action on one point
  /// counts as primitive.
  bool is_primitive() const;

 private:
  struct Level {
    Point base_point;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_index;  // -1 off the orbit
    std::vector<Permutation> transversal;   // base_point^u = orbit[i]
    std::vector<Permutation> inverse;
    std::vector<std::size_t> gens;          // indices into strong_
  };

  void rebuild_level(std::size_t i);
  void complete(std::size_t from_level);
  void insert_strong(const Permutation& h, std::size_t level);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

/// Orbits of the group generated by `generators` on 0..degree-1, each
/// ascending, ordered by least element. Union-find over generator images.
std::vector<std::vector<Point>> orbits(std::span<const Permutation> generators, std::size_t degree);

/// True iff the group contains Alt(n): its order is n!/2 or n!.
bool contains_alternating(const PermGroup& g, std::size_t n);

}  // namespace cg
