#include "cg/brz.hpp"

#include "cg/design.hpp"
#include "cg/errors.hpp"
#include "cg/symplectic.hpp"

namespace cg {

bool brz_bent(const F2Vector& v) {
  const auto w = v.weight() % 4;
  return w == 2 || w == 3;
}

namespace {

void check_m(unsigned m) {
  if (m < 2) throw InvalidInput("brz: m must be at least 2");
  if (m > 5) throw ScaleError("brz: m > 5 is beyond desk scale");
}

// Kernel of the (2m+1) x (2^{2m}-1) check matrix for q, extended by parity
// at coordinate 0.
template <typename Q>
LinearCode extended_code(unsigned m, Q q) {
  const unsigned dim = 2 * m;
  const std::size_t len = std::size_t{1} << dim;
  F2Matrix h(dim + 1, len - 1);
  for (std::size_t v = 1; v < len; ++v) {
    const auto vec = F2Vector::from_word(dim, v);
    for (unsigned i = 0; i < dim; ++i)
      if (vec.get(i)) h.set(i, v - 1);
    if (q(vec)) h.set(dim, v - 1);
  }
  std::vector<F2Vector> rows;
  for (const auto& k : h.kernel()) {
    F2Vector ext(len);
    for (std::size_t v = 1; v < len; ++v)
      if (k.get(v - 1)) ext.set(v);
    if (k.weight() % 2) ext.set(0);
    rows.push_back(std::move(ext));
  }
  return LinearCode::from_generators(F2Matrix(std::move(rows), len));
}

F2Matrix upper_form(unsigned dim, const F2Vector& diagonal) {
  F2Matrix q(dim, dim);
  for (unsigned i = 0; i < dim; ++i) {
    q.set(i, i, diagonal.get(i));
    for (unsigned j = i + 1; j < dim; ++j) q.set(i, j);
  }
  return q;
}

}  // namespace

LinearCode brz_code(unsigned m) {
  check_m(m);
  return extended_code(m, brz_bent);
}

BrzEquivalence brz_equivalence(unsigned m) {
  check_m(m);
  const SymplecticSpace space(m);
  const unsigned dim = space.dim();

  BrzEquivalence r;
  const bool target = arf_invariant(space.e());
  std::optional<F2Matrix> q;
  const auto ones = F2Vector::ones(dim);
  if (arf_invariant(upper_form(dim, ones)) == target) q = upper_form(dim, ones);
  for (Word d = 0; !q && d < (Word{1} << dim); ++d) {
    auto cand = upper_form(dim, F2Vector::from_word(dim, d));
    if (arf_invariant(cand) == target) q = std::move(cand);
  }
  if (!q) throw InequivalentForms("brz_equivalence: no diagonal gives the type of theta_0");
  r.q_form = *q;
  r.a = form_congruence(space.e(), r.q_form);

  r.form_identity = true;
  for (Word v = 0; v < space.order(); ++v) {
    const auto x = F2Vector::from_word(dim, v);
    if (space.theta0_w(r.a.left_multiply(x).to_word()) != quadratic_value(r.q_form, x)) r.form_identity = false;
  }

  const LinearCode brz = brz_code(m);
  r.same_code_for_q =
      span_equals(brz, extended_code(m, [&](const F2Vector& x) { return quadratic_value(r.q_form, x); }));

  // rho_A moves coordinate v to vA.
  std::vector<Point> img(space.order());
  for (Word v = 0; v < space.order(); ++v)
    img[v] = static_cast<Point>(r.a.left_multiply(F2Vector::from_word(dim, v)).to_word());
  const Permutation rho(std::move(img));
  std::vector<F2Vector> moved;
  for (const auto& row : brz.basis().row_vectors()) moved.push_back(permute_coordinates(row, rho));
  const LinearCode image = LinearCode::from_generators(F2Matrix(std::move(moved), space.order()));
  r.codes_equal = span_equals(image, incidence_code(build_affine_design(m)));
  return r;
}

}  // namespace cg
