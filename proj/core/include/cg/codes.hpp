#pragma once

// Binary linear codes and their coset structure.
//
// Coset analysis runs in syndrome space: the distance from a word to the
// code depends only on its syndrome, so the 2^{n-k} syndromes and the
// n-column adjacency between them carry everything (weights, leaders and
// the neighbour counts behind complete regularity).

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cg/design.hpp"
#include "cg/f2.hpp"
#include "cg/permutation.hpp"
#include "cg/symplectic.hpp"

namespace cg {

class LinearCode {
 public:
  LinearCode() = default;
  /// Row span of `generators`; the basis is stored in reduced echelon form.
  static LinearCode from_generators(const F2Matrix& generators);
  /// Right kernel of `h`; `h` is kept as the parity check.
  static LinearCode from_parity_check(const F2Matrix& h);
  /// Throws InvalidInput when the rows of h are not orthogonal to the basis.
  LinearCode with_parity_check(F2Matrix h) const;

  std::size_t length() const { return n_; }
  std::size_t dimension() const { return basis_.rows(); }
  const F2Matrix& basis() const { return basis_; }
  const std::optional<F2Matrix>& stored_parity_check() const { return parity_check_; }
  /// The stored parity check, or a basis of the dual code.
  F2Matrix parity_check() const;

  bool contains(const F2Vector& v) const;

 private:
  std::size_t n_ = 0;
  F2Matrix basis_;
  std::optional<F2Matrix> parity_check_;
};

/// Row span of the blocks-by-points incidence matrix.
LinearCode incidence_code(const Design& d);

struct CodeFamily {
  enum class Kind { Sp, Affine };
  Kind kind = Kind::Sp;
  bool eps = true;

  static CodeFamily sp(bool eps) { return {Kind::Sp, eps}; }
  static CodeFamily affine() { return {Kind::Affine, false}; }
};

/// Rows: the 2m label coordinates, the all-ones row and, for the affine
/// family, the row of theta_0 values. Columns follow ascending labels, the
/// point order of build_sp_design and build_affine_design.
F2Matrix characterization_parity_check(const SymplecticSpace& space, CodeFamily family);

/// Same length and mutual containment. Throws DimensionError on length mismatch.
bool span_equals(const LinearCode& a, const LinearCode& b);

/// Least nonzero codeword weight, or nullopt when it exceeds `bound`.
std::optional<unsigned> min_distance(const LinearCode& c, unsigned bound = 8);

struct IntersectionArray {
  std::vector<std::uint64_t> b;  // b_0 .. b_{rho-1}
  std::vector<std::uint64_t> c;  // c_1 .. c_rho

  std::string to_string() const;  // "(b0,b1,...;c1,c2,...)"
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Neighbour counts of a word at distance i from the code.
struct NeighbourProfile {
  std::uint64_t down = 0;  // into C_{i-1}
  std::uint64_t same = 0;  // into C_i
  std::uint64_t up = 0;    // into C_{i+1}
  friend bool operator==(const NeighbourProfile&, const NeighbourProfile&) = default;
};

class CosetTable {
 public:
  /// Syndrome BFS for the code with parity check h (full row rank).
  /// Throws ScaleError when rows(h) > 24.
  explicit CosetTable(const F2Matrix& h);

  std::size_t length() const { return columns_.size(); }
  std::size_t redundancy() const { return r_; }
  std::uint64_t syndrome_count() const { return std::uint64_t{1} << r_; }
  /// Bit i of a syndrome is row i of h applied to the word.
  std::uint32_t syndrome_of(const F2Vector& x) const;
  unsigned weight(std::uint32_t syndrome) const { return weights_[syndrome]; }
  /// A minimum-weight word with the given syndrome.
  F2Vector leader(std::uint32_t syndrome) const;

  unsigned covering_radius() const { return static_cast<unsigned>(mu_.size() - 1); }
  const std::vector<std::uint64_t>& mu() const { return mu_; }
  /// Per-weight neighbour counts; empty optional where they vary.
  const std::vector<std::optional<NeighbourProfile>>& profiles() const { return profiles_; }
  bool completely_regular() const;
  /// Present iff completely regular.
  std::optional<IntersectionArray> intersection_array() const;
  /// b_i mu_i = c_{i+1} mu_{i+1} for all i; false when not completely regular.
  bool counting_identity_holds() const;

  /// CSV with header "syndrome_bits,weight,leader_bits", one row per
  /// syndrome in ascending order.
  void write_csv(std::ostream& out) const;

 private:
  std::size_t r_;
  std::vector<std::uint32_t> columns_;
  std::vector<std::uint8_t> weights_;
  std::vector<std::uint32_t> via_;  // column added last on a shortest path
  std::vector<std::uint64_t> mu_;
  std::vector<std::optional<NeighbourProfile>> profiles_;
};

/// Coset table of c using its parity check.
CosetTable coset_analysis(const LinearCode& c);

/// Compares every syndrome's BFS weight with the weight predicted from its
/// (label sum, parity) pair for the sp code of the given sign.
bool coset_classification_check(const SymplecticSpace& space, bool eps);

/// True iff permuting coordinates by p (coordinate i moves to p[i]) maps
/// every basis row into the code.
bool code_automorphism_check(const LinearCode& c, const Permutation& p);

/// Coordinate permutation of a word: result[p[i]] = x[i].
F2Vector permute_coordinates(const F2Vector& x, const Permutation& p);

}  // namespace cg
