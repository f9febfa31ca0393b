#pragma once

// Alternating and quadratic forms on V = F2^{2m}.
//
// Coordinates 0..m-1 form the first half and m..2m-1 the second, so
// coordinate i is paired with i+m. With that layout
//   phi(u, v)   = sum_i u_i v_{i+m} + u_{i+m} v_i   (= u f v^T),
//   theta_0(u)  = sum_i u_i u_{i+m}                  (= u e u^T),
//   theta_a(u)  = theta_0(u) + phi(u, a).
// The *_w functions take the one-word integer encoding and skip all checks;
// they back the design and group builders, where millions of evaluations
// happen.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cg/bigint.hpp"
#include "cg/f2.hpp"

namespace cg {

using Word = std::uint64_t;

class SymplecticSpace {
 public:
  explicit SymplecticSpace(unsigned m);

  unsigned m() const { return m_; }
  unsigned dim() const { return 2 * m_; }
  /// Number of vectors in V.
  std::uint64_t order() const { return std::uint64_t{1} << dim(); }

  /// Block matrix with the identity in the upper-right quadrant.
  const F2Matrix& e() const { return e_; }
  /// e + e^T.
  const F2Matrix& f() const { return f_; }

  bool phi(const F2Vector& u, const F2Vector& v) const;
  bool theta0(const F2Vector& u) const;
  bool theta(const F2Vector& a, const F2Vector& u) const;
  F2Vector apply_transvection(const F2Vector& c, const F2Vector& u) const;
  /// Label of theta_a^{t_c}: a when theta_a(c) = 1, a + c otherwise.
  F2Vector transvection_on_form(const F2Vector& c, const F2Vector& a) const;
  F2Matrix transvection_matrix(const F2Vector& c) const;

  bool phi_w(Word u, Word v) const {
    return std::popcount(((u & low_) & (v >> m_)) ^ ((u >> m_) & (v & low_))) & 1;
  }
  bool theta0_w(Word u) const { return std::popcount((u & low_) & (u >> m_)) & 1; }
  bool theta_w(Word a, Word u) const { return theta0_w(u) ^ phi_w(u, a); }
  Word transvection_w(Word c, Word u) const { return phi_w(u, c) ? u ^ c : u; }
  Word transvection_on_form_w(Word c, Word a) const { return theta_w(a, c) ? a : a ^ c; }

  /// All v with theta_0(v) = eps, ascending by integer encoding.
  std::vector<F2Vector> v_epsilon(bool eps) const;
  std::vector<Word> v_epsilon_w(bool eps) const;

  /// Distinct x, y with theta_0(x) = theta_0(y) = eps and x + y = v.
  /// Follows the explicit case table; throws InvalidInput for v = 0.
  std::pair<F2Vector, F2Vector> decompose_sum2(const F2Vector& v, bool eps) const;

  /// Pairwise distinct x, y, z in V^{eps_target} with x + y + z = v.
  /// Uses two sum2 decompositions when theta_0(v) = 1 - eps_target and
  /// falls back to exhaustive search otherwise.
  std::array<F2Vector, 3> decompose_sum3(const F2Vector& v, bool eps_target) const;

  struct PhiConstraint {
    F2Vector a;
    bool value;
  };
  /// Some w with phi(w, a_i) = b_i for all constraints and theta_0(w) = eps.
  /// NoSolution if the linear system is inconsistent; NotFound if theta_0
  /// is constant (and wrong) on the whole solution coset.
  F2Vector solve_affine_theta(std::span<const PhiConstraint> constraints, bool eps) const;

  /// True iff M is invertible and M f M^T = f.
  bool sp_membership(const F2Matrix& mat) const;

  void check(const F2Vector& v) const;

 private:
  unsigned m_;
  Word low_;
  F2Matrix e_;
  F2Matrix f_;
};

/// |f_eps(m)| = 2^{m-1} (2^m + (-1)^eps).
std::uint64_t v_epsilon_count(unsigned m, bool eps);

/// Level-(k+1) list built from level-k lists via the (x, v1, y, v2)
/// interleaving: (V_k^eps)^{00} u (V_k^eps)^{01} u (V_k^eps)^{10} u (V_k^{1-eps})^{11}.
/// The result is in construction order, not sorted.
std::vector<F2Vector> inductive_v_epsilon(std::span<const F2Vector> level_eps,
                                          std::span<const F2Vector> level_other, unsigned k);

/// 2^{m^2} prod_{i=1..m} (2^{2i} - 1).
BigInt sp_order(unsigned m);

/// q(x) = x Q x^T.
bool quadratic_value(const F2Matrix& q, const F2Vector& x);

/// Number of zeros of x -> x Q x^T over all of F2^n (n <= 30).
std::uint64_t quadratic_zero_count(const F2Matrix& q);

/// Invertible A with q1(xA) = q2(x) for all x, where q_i(x) = x Q_i x^T.
/// Both forms must polarize to a nondegenerate alternating form.
/// InvalidInput for degenerate polarization, InequivalentForms when the two
/// forms have different Arf type. The result is checked on every vector for
/// dim <= 8 and on 10^5 random vectors beyond that.
F2Matrix form_congruence(const F2Matrix& q1, const F2Matrix& q2);

/// Arf invariant (0 = plus type) of a nondegenerate form.
bool arf_invariant(const F2Matrix& q);

}  // namespace cg
