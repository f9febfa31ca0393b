#pragma once

// Block designs with blocks of size 4, the constructions used throughout the
// workbench, and the pair index that move computations run on.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cg/f2.hpp"
#include "cg/permutation.hpp"

namespace cg {

using Block = std::array<Point, 4>;

/// Points are 0..n-1. Each block is ascending and the block list is sorted
/// lexicographically. Repeated blocks are representable (a loaded file may
/// contain them) and are reported by validate().
class Design {
 public:
  Design() = default;
  /// Sorts every block and the list; throws InvalidInput if a block has a
  /// repeated point or a point >= n.
  Design(std::string name, std::uint32_t n, std::vector<Block> blocks,
         std::optional<std::vector<F2Vector>> labels = std::nullopt,
         std::optional<unsigned> lambda = std::nullopt);

  const std::string& name() const { return name_; }
  std::uint32_t n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  /// Point -> F2 label for the symplectic, affine and Boolean families.
  const std::optional<std::vector<F2Vector>>& labels() const { return labels_; }
  /// Advertised lambda (carried through JSON; validate() computes the real one).
  std::optional<unsigned> lambda() const { return lambda_; }

  bool has_block(const Block& b) const;

  friend bool operator==(const Design&, const Design&) = default;

 private:
  std::string name_;
  std::uint32_t n_ = 0;
  std::vector<Block> blocks_;
  std::optional<std::vector<F2Vector>> labels_;
  std::optional<unsigned> lambda_;
};

struct ValidationReport {
  bool is_2design = false;
  std::optional<unsigned> lambda;
  bool is_supersimple = false;
  /// A pair whose block count differs from that of {0, 1}.
  std::optional<std::pair<Point, Point>> pair_witness;
  /// Indices of two blocks sharing three or more points.
  std::optional<std::pair<std::size_t, std::size_t>> block_witness;

  bool ok() const { return is_2design && is_supersimple; }
  std::string summary() const;
};

ValidationReport validate(const Design& d);

/// Projective plane of order 3: points are the normalized nonzero vectors
/// of F3^3 (first nonzero coordinate 1) in lexicographic order.
Design build_p3();

/// Boolean quadruple system on F2^k: blocks {a, b, c, a+b+c}.
Design build_boolean(unsigned k);

/// Points V^eps (ascending label), blocks {v1, v2, v3, v1+v2+v3} with all
/// four in V^eps. A supersimple 2-(f_eps(m), 4, f_eps(m-1) - 1) design for m >= 3.
Design build_sp_design(unsigned m, bool eps);

/// Points V, blocks {v1, v2, v3, v1+v2+v3} with
/// sum theta_0(v_i) = theta_0(sum v_i). A 2-(2^{2m}, 4, 2^{2m-2} - 1) design.
Design build_affine_design(unsigned m);

/// Points collinear with a and b (a and b included).
std::vector<Point> closure(const Design& d, Point a, Point b);

/// True iff p maps every block onto a block.
bool automorphism_check(const Design& d, const Permutation& p);

/// For every unordered pair the indices of the blocks through it.
class PairIndex {
 public:
  explicit PairIndex(const Design& d);

  std::uint32_t n() const { return n_; }
  std::span<const std::uint32_t> blocks_through(Point a, Point b) const;
  /// The other two points of each block through {a, b}.
  std::vector<std::pair<Point, Point>> partners(Point a, Point b) const;
  std::vector<Point> closure(Point a, Point b) const;

 private:
  std::size_t slot(Point a, Point b) const { return static_cast<std::size_t>(a) * n_ + b; }

  std::uint32_t n_;
  std::vector<Block> blocks_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> entries_;
};

}  // namespace cg
