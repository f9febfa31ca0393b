#include "cg/symplectic.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>

#include "cg/errors.hpp"

namespace cg {

SymplecticSpace::SymplecticSpace(unsigned m) : m_(m), e_(2 * m, 2 * m), f_(2 * m, 2 * m) {
  if (m == 0 || m > 31) throw InvalidInput("SymplecticSpace: m must lie in [1, 31]");
  low_ = (Word{1} << m) - 1;
  for (unsigned i = 0; i < m; ++i) {
    e_.set(i, i + m);
    f_.set(i, i + m);
    f_.set(i + m, i);
  }
}

void SymplecticSpace::check(const F2Vector& v) const {
  if (v.size() != dim())
    throw DimensionError("expected a vector of length " + std::to_string(dim()) + ", got " +
                         std::to_string(v.size()));
}

bool SymplecticSpace::phi(const F2Vector& u, const F2Vector& v) const {
  check(u);
  check(v);
  return phi_w(u.to_word(), v.to_word());
}

bool SymplecticSpace::theta0(const F2Vector& u) const {
  check(u);
  return theta0_w(u.to_word());
}

bool SymplecticSpace::theta(const F2Vector& a, const F2Vector& u) const {
  check(a);
  check(u);
  return theta_w(a.to_word(), u.to_word());
}

F2Vector SymplecticSpace::apply_transvection(const F2Vector& c, const F2Vector& u) const {
  check(c);
  check(u);
  return F2Vector::from_word(dim(), transvection_w(c.to_word(), u.to_word()));
}

F2Vector SymplecticSpace::transvection_on_form(const F2Vector& c, const F2Vector& a) const {
  check(c);
  check(a);
  return F2Vector::from_word(dim(), transvection_on_form_w(c.to_word(), a.to_word()));
}

F2Matrix SymplecticSpace::transvection_matrix(const F2Vector& c) const {
  check(c);
  // Row i is the image of the i-th basis vector (row-vector convention).
  F2Matrix t(dim(), dim());
  for (unsigned i = 0; i < dim(); ++i)
    t.row(i) = F2Vector::from_word(dim(), transvection_w(c.to_word(), Word{1} << i));
  return t;
}

std::vector<Word> SymplecticSpace::v_epsilon_w(bool eps) const {
  std::vector<Word> out;
  out.reserve(v_epsilon_count(m_, eps));
  for (Word v = 0; v < order(); ++v)
    if (theta0_w(v) == eps) out.push_back(v);
  return out;
}

std::vector<F2Vector> SymplecticSpace::v_epsilon(bool eps) const {
  std::vector<F2Vector> out;
  for (Word v : v_epsilon_w(eps)) out.push_back(F2Vector::from_word(dim(), v));
  return out;
}

std::pair<F2Vector, F2Vector> SymplecticSpace::decompose_sum2(const F2Vector& v, bool eps) const {
  check(v);
  const Word w = v.to_word();
  if (w == 0) throw InvalidInput("decompose_sum2: v must be nonzero");
  const unsigned m = m_;
  auto bit = [&](unsigned i) { return (w >> i) & 1u; };
  auto partner = [&](unsigned j) { return j < m ? j + m : j - m; };
  auto e = [](unsigned i) { return Word{1} << i; };
  const bool delta = theta0_w(w);

  std::optional<Word> x;
  if (!delta && !eps) {
    x = 0;
  } else if (!delta && eps) {
    for (unsigned i = 0; i < m && !x; ++i)
      if (bit(i) == bit(i + m)) x = e(i) | e(i + m);
    if (!x) {
      const unsigned i = 0;
      for (unsigned j = 0; j < 2 * m && !x; ++j)
        if (j != i && j != i + m && bit(partner(j))) x = e(i) | e(i + m) | e(j);
    }
  } else {
    std::optional<unsigned> hyperbolic;
    for (unsigned i = 0; i < m && !hyperbolic; ++i)
      if (bit(i) && bit(i + m)) hyperbolic = i;
    if (hyperbolic) {
      const unsigned i = *hyperbolic;
      if (!eps) {
        x = e(i);
      } else {
        for (unsigned j = 0; j < m && !x; ++j)
          if (j != i && bit(j) == bit(j + m)) x = e(j) | e(j + m) | e(i);
        for (unsigned j = 0; j < 2 * m && !x; ++j)
          if (j != i && j != i + m && bit(partner(j))) x = e(i) | e(i + m) | e(j);
      }
    }
  }

  auto valid = [&](Word a) {
    Word b = a ^ w;
    return a != b && theta0_w(a) == eps && theta0_w(b) == eps;
  };
  if (!x || !valid(*x)) {
    // The case table needs m >= 2; small spaces fall through to a scan.
    x.reset();
    for (Word a = 0; a < order() && !x; ++a)
      if (valid(a)) x = a;
    if (!x) throw NotFound("decompose_sum2: no decomposition exists");
  }
  return {F2Vector::from_word(dim(), *x), F2Vector::from_word(dim(), *x ^ w)};
}

std::array<F2Vector, 3> SymplecticSpace::decompose_sum3(const F2Vector& v, bool eps_target) const {
  check(v);
  const Word w = v.to_word();
  auto valid = [&](Word x, Word y, Word z) {
    return x != y && y != z && x != z && (x ^ y ^ z) == w && theta0_w(x) == eps_target &&
           theta0_w(y) == eps_target && theta0_w(z) == eps_target;
  };
  auto pack = [&](Word x, Word y, Word z) {
    return std::array<F2Vector, 3>{F2Vector::from_word(dim(), x), F2Vector::from_word(dim(), y),
                                   F2Vector::from_word(dim(), z)};
  };
  if (w != 0 && theta0_w(w) != eps_target) {
    auto [x, y] = decompose_sum2(v, eps_target);
    auto [y1, y2] = decompose_sum2(y, eps_target);
    if (valid(x.to_word(), y1.to_word(), y2.to_word())) return {x, y1, y2};
  }
  const auto pts = v_epsilon_w(eps_target);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Word z = pts[i] ^ pts[j] ^ w;
      if (z > pts[j] && valid(pts[i], pts[j], z)) return pack(pts[i], pts[j], z);
    }
  throw NotFound("decompose_sum3: no triple of distinct elements sums to v");
}

F2Vector SymplecticSpace::solve_affine_theta(std::span<const PhiConstraint> constraints, bool eps) const {
  // phi(w, a) = w . (a f), and a f swaps the two halves of a.
  F2Matrix rows(0, dim());
  F2Vector rhs(constraints.size());
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    check(constraints[i].a);
    Word a = constraints[i].a.to_word();
    Word swapped = ((a & low_) << m_) | (a >> m_);
    rows.append_row(F2Vector::from_word(dim(), swapped));
    rhs.set(i, constraints[i].value);
  }
  auto sol = solve_rows(rows, rhs);
  if (!sol) throw NoSolution("solve_affine_theta: inconsistent phi constraints");

  const auto& kernel = sol->kernel;
  if (kernel.size() >= 40) throw ScaleError("solve_affine_theta: solution coset too large to scan");
  const Word base = sol->particular.to_word();
  std::vector<Word> ker;
  for (const auto& k : kernel) ker.push_back(k.to_word());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ker.size()); ++mask) {
    Word w = base;
    for (std::size_t i = 0; i < ker.size(); ++i)
      if ((mask >> i) & 1u) w ^= ker[i];
    if (theta0_w(w) == eps) return F2Vector::from_word(dim(), w);
  }
  throw NotFound("solve_affine_theta: theta_0 is constant on the solution coset");
}

bool SymplecticSpace::sp_membership(const F2Matrix& mat) const {
  if (mat.rows() != dim() || mat.cols() != dim()) throw DimensionError("sp_membership: expected a 2m x 2m matrix");
  if (!mat.is_invertible()) return false;
  return mat * f_ * mat.transpose() == f_;
}

std::uint64_t v_epsilon_count(unsigned m, bool eps) {
  const std::uint64_t half = std::uint64_t{1} << (m - 1);
  const std::uint64_t full = std::uint64_t{1} << m;
  return eps ? half * (full - 1) : half * (full + 1);
}

std::vector<F2Vector> inductive_v_epsilon(std::span<const F2Vector> level_eps,
                                          std::span<const F2Vector> level_other, unsigned k) {
  // v = (v1, v2) with halves of length k; v_xy = (x, v1, y, v2).
  auto lift = [k](const F2Vector& v, bool x, bool y) {
    if (v.size() != 2 * k) throw DimensionError("inductive_v_epsilon: level vector has wrong length");
    F2Vector out(2 * k + 2);
    out.set(0, x);
    out.set(k + 1, y);
    for (unsigned j = 0; j < k; ++j) {
      out.set(1 + j, v.get(j));
      out.set(k + 2 + j, v.get(k + j));
    }
    return out;
  };
  std::vector<F2Vector> out;
  out.reserve(3 * level_eps.size() + level_other.size());
  for (auto [x, y] : {std::pair{false, false}, std::pair{false, true}, std::pair{true, false}})
    for (const auto& v : level_eps) out.push_back(lift(v, x, y));
  for (const auto& v : level_other) out.push_back(lift(v, true, true));
  return out;
}

BigInt sp_order(unsigned m) {
  if (m == 0) throw InvalidInput("sp_order: m must be positive");
  BigInt r = BigInt{1} << (m * m);
  for (unsigned i = 1; i <= m; ++i) r *= (BigInt{1} << (2 * i)) - 1;
  return r;
}

bool quadratic_value(const F2Matrix& q, const F2Vector& x) { return x.dot(q.apply(x)); }

std::uint64_t quadratic_zero_count(const F2Matrix& q) {
  const std::size_t n = q.cols();
  if (q.rows() != n) throw DimensionError("quadratic_zero_count: matrix not square");
  if (n > 30) throw ScaleError("quadratic_zero_count: dimension too large to enumerate");
  std::uint64_t zeros = 0;
  for (Word x = 0; x < (Word{1} << n); ++x)
    if (!quadratic_value(q, F2Vector::from_word(n, x))) ++zeros;
  return zeros;
}

namespace {

// A quadratic form together with its polar bilinear form B = Q + Q^T.
struct Quadratic {
  F2Matrix q;
  F2Matrix polar;

  explicit Quadratic(const F2Matrix& mat) : q(mat), polar(mat + mat.transpose()) {}
  bool value(const F2Vector& x) const { return quadratic_value(q, x); }
  bool bilinear(const F2Vector& x, const F2Vector& y) const { return x.dot(polar.apply(y)); }
};

struct NormalBasis {
  // Rows u_1..u_m, v_1..v_m: B(u_i, v_j) = delta_ij, other pairings zero,
  // q(u_i) = q(v_i) = 0 except that a minus-type form carries an
  // anisotropic last pair with q(u_m) = q(v_m) = 1.
  F2Matrix basis;
  bool minus = false;
};

// Orthogonal complement of the hyperbolic plane <u, v> inside span(w).
std::vector<F2Vector> complement(const Quadratic& form, const std::vector<F2Vector>& w, const F2Vector& u,
                                 const F2Vector& v) {
  RowEchelon ech(u.size());
  for (const auto& z : w) {
    F2Vector p = z;
    if (form.bilinear(z, v)) p += u;
    if (form.bilinear(z, u)) p += v;
    ech.insert(std::move(p));
  }
  return ech.rows();
}

// Finds y in w with B(x, y) = 1.
std::optional<F2Vector> partner_of(const Quadratic& form, const std::vector<F2Vector>& w, const F2Vector& x) {
  for (const auto& y : w)
    if (form.bilinear(x, y)) return y;
  return std::nullopt;
}

// Singular pair (u, v) with B(u, v) = 1 inside the plane <x, y>, if any.
std::optional<std::pair<F2Vector, F2Vector>> split_plane(const Quadratic& form, const F2Vector& x,
                                                         const F2Vector& y) {
  std::optional<std::pair<F2Vector, F2Vector>> uv;
  if (!form.value(x))
    uv.emplace(x, y);
  else if (!form.value(y))
    uv.emplace(y, x);
  else if (!form.value(x + y))
    uv.emplace(x + y, x);
  if (uv && form.value(uv->second)) uv->second += uv->first;
  return uv;
}

NormalBasis normal_basis(const Quadratic& form) {
  const std::size_t n = form.q.cols();
  if (form.q.rows() != n || n % 2 != 0) throw DimensionError("form_congruence: expected an even square matrix");
  if (!form.polar.is_invertible()) throw InvalidInput("form_congruence: polarization is degenerate");

  std::vector<F2Vector> w = F2Matrix::identity(n).row_vectors();
  std::vector<F2Vector> us, vs;
  NormalBasis out;
  while (!w.empty()) {
    const F2Vector x = w.front();
    auto y = partner_of(form, w, x);
    if (!y) throw InvalidInput("form_congruence: polarization is degenerate");
    auto uv = split_plane(form, x, *y);
    if (!uv) {
      auto rest = complement(form, w, x, *y);
      if (rest.empty()) {
        out.minus = true;
        us.push_back(x);
        vs.push_back(*y);
        break;
      }
      // Both planes anisotropic: x + x2 is singular and pairs with y.
      const F2Vector x2 = rest.front();
      auto y2 = partner_of(form, rest, x2);
      if (!y2) throw InvalidInput("form_congruence: polarization is degenerate");
      uv = split_plane(form, x2, *y2);
      if (!uv) {
        F2Vector u = x + x2;
        F2Vector v = *y;
        if (form.value(v)) v += u;
        uv.emplace(u, v);
      }
    }
    us.push_back(uv->first);
    vs.push_back(uv->second);
    w = complement(form, w, uv->first, uv->second);
  }
  // The anisotropic plane, when present, was found last; keep it at index m-1.
  std::vector<F2Vector> rows = us;
  rows.insert(rows.end(), vs.begin(), vs.end());
  out.basis = F2Matrix(std::move(rows), n);
  return out;
}

}  // namespace

bool arf_invariant(const F2Matrix& q) { return normal_basis(Quadratic(q)).minus; }

F2Matrix form_congruence(const F2Matrix& q1, const F2Matrix& q2) {
  if (q1.rows() != q2.rows() || q1.cols() != q2.cols()) throw DimensionError("form_congruence: shape mismatch");
  const Quadratic f1(q1), f2(q2);
  const NormalBasis n1 = normal_basis(f1);
  const NormalBasis n2 = normal_basis(f2);
  if (n1.minus != n2.minus) throw InequivalentForms("form_congruence: forms have different Arf type");

  // q_i(z P_i) is the same normal form N(z); A = P2^{-1} P1 gives q1(xA) = q2(x).
  const auto p2_inv = n2.basis.inverse();
  if (!p2_inv) throw std::logic_error("form_congruence: normal basis not invertible");
  F2Matrix a = *p2_inv * n1.basis;

  const std::size_t n = q1.cols();
  auto agrees = [&](const F2Vector& x) { return f1.value(a.left_multiply(x)) == f2.value(x); };
  bool ok = true;
  if (n <= 8) {
    for (Word x = 0; x < (Word{1} << n) && ok; ++x) ok = agrees(F2Vector::from_word(n, x));
  } else {
    std::mt19937_64 rng(0x5eedULL);
    for (int t = 0; t < 100000 && ok; ++t) {
      F2Vector x(n);
      for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1u) x.set(i);
      ok = agrees(x);
    }
  }
  if (!ok || !a.is_invertible()) throw std::logic_error("form_congruence: reduction produced a wrong map");
  return a;
}

}  // namespace cg
