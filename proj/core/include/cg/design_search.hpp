#pragma once

#include <vector>

#include "cg/design.hpp"

namespace cg {

/// Lexicographically least sorted block list over all relabellings of the
/// points. Branch and bound on the label assignment; n <= 12.
std::vector<Block> canonical_form(const Design& d);

/// All supersimple 2-(n, 4, lambda) designs up to isomorphism, in canonical
/// form and ascending order. Throws ScaleError for n > 9.
///
/// Backtracking always extends the first pair short of lambda blocks, adds
/// the blocks through that pair in increasing order and never reuses a
/// 3-subset. The blocks through {0, 1} are fixed to {0,1,2,3}, {0,1,4,5}, ...
std::vector<Design> search_designs(unsigned n, unsigned lambda);

}  // namespace cg
