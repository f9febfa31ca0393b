#pragma once

// Deliberately naive reimplementations used to cross-check the library.
// Nothing here shares code with core beyond the plain data types.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cg/design.hpp"
#include "cg/f2.hpp"
#include "cg/permutation.hpp"

namespace cg::oracle {

using Perm = std::vector<std::uint32_t>;

/// Image array of a permutation.
Perm images(const Permutation& p);

/// Closure of the generators by breadth-first search over group elements.
/// nullopt when the group has more than `limit` elements.
std::optional<std::uint64_t> group_order(const std::vector<Permutation>& gens, std::size_t degree,
                                         std::uint64_t limit = 2'000'000);

/// Orbits of the generated group on points, by repeated scanning.
std::vector<std::set<std::uint32_t>> point_orbits(const std::vector<Permutation>& gens, std::size_t degree);

/// Swap a with b and the partners on every block through {a, b}; nullopt
/// when a point would get two images.
std::optional<Perm> move(const Design& d, std::uint32_t a, std::uint32_t b);

/// Multiset of pair counts; a 2-design has exactly one key.
std::map<unsigned, unsigned> pair_count_histogram(const Design& d);
/// Largest number of blocks sharing a 3-subset.
unsigned max_triple_multiplicity(const Design& d);

/// Rank over F2 of 0/1 rows, by textbook elimination.
std::size_t rank(std::vector<std::vector<std::uint8_t>> rows);

/// Rows of the incidence matrix (blocks by points).
std::vector<std::vector<std::uint8_t>> incidence_rows(const Design& d);

/// Coset weight distribution for the code {x : H x^T = 0}, where columns
/// are given as r-bit syndromes. Enumerates error patterns by weight until
/// every syndrome is reached.
std::vector<std::uint64_t> coset_weights(const std::vector<std::uint32_t>& columns, unsigned r);

/// Minimum weight of a nonzero codeword, enumerating all 2^k combinations
/// of the generator rows (k <= 24).
unsigned min_weight_by_enumeration(const std::vector<std::vector<std::uint8_t>>& generators);

/// Basis of {x : R x^T = 0}, by textbook elimination.
std::vector<std::vector<std::uint8_t>> kernel(const std::vector<std::vector<std::uint8_t>>& rows);

/// Columns of a 0/1 matrix with at most 32 rows as bit masks (row i = bit i).
std::vector<std::uint32_t> columns(const std::vector<std::vector<std::uint8_t>>& rows);

/// Least w <= max_w such that some w distinct columns sum to zero.
std::optional<unsigned> least_dependent_columns(const std::vector<std::uint32_t>& cols, unsigned max_w);

/// 2^{m^2} prod (4^i - 1) computed with doubles-free integer arithmetic.
std::uint64_t sp_order_u64(unsigned m);

/// theta_0 and phi straight from the coordinate definitions.
bool theta0(const F2Vector& v, unsigned m);
bool phi(const F2Vector& u, const F2Vector& v, unsigned m);

}  // namespace cg::oracle
