#pragma once

// The extended code defined by a bent function on F2^{2m} and its
// equivalence with the affine incidence code.
//
// Coordinates are indexed by the vectors of F2^{2m} (integer encoding);
// coordinate 0 is the overall parity added by the extension.

#include "cg/codes.hpp"
#include "cg/f2.hpp"

namespace cg {

/// q(v) = 1 iff wt(v) = 2 or 3 mod 4. Equals sum_{i<j} v_i v_j.
bool brz_bent(const F2Vector& v);

/// Kernel of [nonzero vectors; q values] extended by an overall parity
/// coordinate. Length 2^{2m}, dimension 2^{2m} - 2m - 2.
LinearCode brz_code(unsigned m);

struct BrzEquivalence {
  /// Q with q'(v) = v Q v^T, where q' differs from brz_bent by a linear
  /// functional (so both define the same code) and has plus type.
  F2Matrix q_form;
  /// Invertible A with theta_0(vA) = v Q v^T for every v.
  F2Matrix a;
  /// theta_0(vA) = q'(v) on all of F2^{2m}.
  bool form_identity = false;
  /// Both q' and brz_bent give the same parity checks up to linear rows.
  bool same_code_for_q = false;
  /// rho_A(brz_code) = incidence code of the affine design.
  bool codes_equal = false;
};

/// The upper triangle of Q is all ones. The diagonal is all ones when that
/// gives a plus-type form; otherwise the least diagonal (by integer
/// encoding) that does. Throws InequivalentForms if none exists.
BrzEquivalence brz_equivalence(unsigned m);

}  // namespace cg
