#pragma once

// Moves on a supersimple design and the groups and groupoid they generate.
//
// [a, b] swaps a with b and, for every block {a, b, c, d}, c with d.
// A move sequence [a0, a1, ..., ak] is the product [a0,a1][a1,a2]...,
// composed left to right. L_inf is the set of sequences starting at inf;
// the closed ones form the hole stabilizer pi_inf.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "cg/bigint.hpp"
#include "cg/design.hpp"
#include "cg/perm_group.hpp"
#include "cg/permutation.hpp"

namespace cg {

/// Throws InvalidInput for a == b and IllDefinedMove when some point would
/// receive two images (the design is not supersimple near {a, b}).
Permutation elementary_move(const PairIndex& index, Point a, Point b);
Permutation elementary_move(const Design& d, Point a, Point b);

/// Product of the moves along `path`; a path of one point gives the identity.
Permutation move_sequence(const PairIndex& index, std::span<const Point> path);
Permutation move_sequence(const Design& d, std::span<const Point> path);

/// [inf, a, b, inf] for all a < b distinct from inf, duplicates removed.
std::vector<Permutation> hole_stabilizer_generators(const PairIndex& index, Point inf);
PermGroup hole_stabilizer(const PairIndex& index, Point inf);
PermGroup hole_stabilizer(const Design& d, Point inf);

/// [a, b] for all a < b, duplicates removed.
std::vector<Permutation> elementary_moves(const PairIndex& index);
PermGroup move_group(const PairIndex& index);
PermGroup move_group(const Design& d);

/// n * |pi_inf|.
BigInt groupoid_size(const Design& d, Point inf);

/// Membership in L_inf: p is in L_inf iff p g_b^{-1} lies in pi_inf, where
/// b = inf^p and g_b is any stored move sequence from inf to b.
class GroupoidIndex {
 public:
  enum class Words {
    Direct,  // g_b = [inf, b]
    Detour,  // g_b = [inf, c, b] with c the least point outside {inf, b}
  };

  GroupoidIndex(const Design& d, Point inf, Words words = Words::Direct);

  Point hole() const { return inf_; }
  std::uint32_t n() const { return index_.n(); }
  const PairIndex& pairs() const { return index_; }
  const PermGroup& hole_stabilizer() const { return pi_; }
  /// The stored path from inf to b.
  const std::vector<Point>& path_to(Point b) const { return paths_.at(b); }
  BigInt size() const { return BigInt(n()) * pi_.order(); }

  bool contains(const Permutation& p) const;

  /// A move sequence of `steps` random moves starting at inf.
  Permutation random_element(std::mt19937_64& rng, unsigned steps) const;

 private:
  Point inf_;
  PairIndex index_;
  PermGroup pi_;
  std::vector<std::vector<Point>> paths_;
  std::vector<Permutation> inverse_words_;
};

bool groupoid_contains(const Design& d, Point inf, const Permutation& p);

/// g, h in L_inf with g h outside L_inf, found by random search; nullopt if
/// none turns up within `tries` attempts.
std::optional<std::pair<Permutation, Permutation>> composition_counterexample(const GroupoidIndex& index,
                                                                              std::mt19937_64& rng,
                                                                              unsigned tries);

struct GroupoidSummary {
  std::uint32_t n = 0;
  Point hole = 0;
  BigInt pi_order;
  BigInt groupoid_size;
  BigInt move_group_order;
  bool is_group = false;
  /// pi_inf transitive on the points other than inf.
  bool transitive = false;
  /// Primitivity of that action; absent when it is not transitive.
  std::optional<bool> primitive;
  /// L_inf contains Alt(n). Holds iff pi_inf = Sym(n-1), or pi_inf = Alt(n-1)
  /// and every [inf, b] is even.
  bool contains_alternating = false;
};

GroupoidSummary summarize_groupoid(const Design& d, Point inf);

/// Permutation of the points of a labelled design induced by a map on
/// labels. Throws InvalidInput if the design has no labels or the map leaves
/// the label set.
Permutation label_permutation(const Design& d, const std::function<F2Vector(const F2Vector&)>& f);

}  // namespace cg
