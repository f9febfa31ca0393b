#include "cg/codes.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "cg/errors.hpp"

namespace cg {

LinearCode LinearCode::from_generators(const F2Matrix& generators) {
  RowEchelon ech(generators.cols());
  for (const auto& r : generators.row_vectors()) ech.insert(r);
  LinearCode c;
  c.n_ = generators.cols();
  c.basis_ = F2Matrix(ech.rows(), generators.cols());
  return c;
}

LinearCode LinearCode::from_parity_check(const F2Matrix& h) {
  LinearCode c = from_generators(F2Matrix(h.kernel(), h.cols()));
  c.parity_check_ = h;
  return c;
}

LinearCode LinearCode::with_parity_check(F2Matrix h) const {
  if (h.cols() != n_) throw DimensionError("with_parity_check: length mismatch");
  for (const auto& g : basis_.row_vectors())
    if (!h.apply(g).is_zero()) throw InvalidInput("with_parity_check: basis row fails the check");
  if (h.rank() != n_ - dimension()) throw InvalidInput("with_parity_check: rank is not n - k");
  LinearCode c = *this;
  c.parity_check_ = std::move(h);
  return c;
}

F2Matrix LinearCode::parity_check() const {
  if (parity_check_) return *parity_check_;
  return F2Matrix(basis_.kernel(), n_);
}

bool LinearCode::contains(const F2Vector& v) const {
  if (v.size() != n_) throw DimensionError("LinearCode::contains: length mismatch");
  // The basis is reduced: clearing each pivot in turn leaves zero iff v is in the span.
  F2Vector r = v;
  for (const auto& row : basis_.row_vectors()) {
    std::size_t pivot = row.first_set();
    if (r.get(pivot)) r += row;
  }
  return r.is_zero();
}

LinearCode incidence_code(const Design& d) {
  RowEchelon ech(d.n());
  for (const auto& b : d.blocks()) {
    F2Vector row(d.n());
    for (auto p : b) row.set(p);
    ech.insert(std::move(row));
  }
  LinearCode c = LinearCode::from_generators(F2Matrix(ech.rows(), d.n()));
  return c;
}

F2Matrix characterization_parity_check(const SymplecticSpace& space, CodeFamily family) {
  std::vector<Word> labels;
  if (family.kind == CodeFamily::Kind::Sp) {
    labels = space.v_epsilon_w(family.eps);
  } else {
    labels.resize(space.order());
    for (Word v = 0; v < space.order(); ++v) labels[v] = v;
  }
  const std::size_t n = labels.size();
  const std::size_t rows = space.dim() + 1 + (family.kind == CodeFamily::Kind::Affine ? 1 : 0);
  F2Matrix h(rows, n);
  for (std::size_t p = 0; p < n; ++p) {
    for (unsigned i = 0; i < space.dim(); ++i)
      if ((labels[p] >> i) & 1u) h.set(i, p);
    h.set(space.dim(), p);
    if (family.kind == CodeFamily::Kind::Affine && space.theta0_w(labels[p])) h.set(space.dim() + 1, p);
  }
  return h;
}

bool span_equals(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length()) throw DimensionError("span_equals: length mismatch");
  if (a.dimension() != b.dimension()) return false;
  for (const auto& r : a.basis().row_vectors())
    if (!b.contains(r)) return false;
  return true;
}

namespace {

std::vector<std::uint32_t> column_syndromes(const F2Matrix& h) {
  if (h.rows() > 32) throw ScaleError("syndromes wider than 32 bits");
  std::vector<std::uint32_t> cols(h.cols(), 0);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h.get(i, j)) cols[j] |= std::uint32_t{1} << i;
  return cols;
}

// Calls visit(subset) for every k-subset of 0..n-1 in lexicographic order;
// stops early when visit returns true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<unsigned> min_distance(const LinearCode& c, unsigned bound) {
  if (c.dimension() == 0) return std::nullopt;
  const F2Matrix h = c.parity_check();
  const std::size_t n = c.length();
  if (h.rows() == 0) return 1;  // every word is a codeword
  auto cols = column_syndromes(h);
  // A weight-w codeword is w columns summing to zero: a (w-1)-subset whose
  // sum is the syndrome of a column outside the subset.
  std::unordered_multimap<std::uint32_t, std::size_t> where;
  for (std::size_t j = 0; j < n; ++j) where.emplace(cols[j], j);
  for (unsigned w = 1; w <= bound && w <= n; ++w) {
    bool found = for_each_subset(n, w - 1, [&](const std::vector<std::size_t>& s) {
      std::uint32_t sum = 0;
      for (auto j : s) sum ^= cols[j];
      auto [lo, hi] = where.equal_range(sum);
      for (auto it = lo; it != hi; ++it)
        if (std::find(s.begin(), s.end(), it->second) == s.end()) return true;
      return false;
    });
    if (found) return w;
  }
  return std::nullopt;
}

std::string IntersectionArray::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
  out << ';';
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  out << ')';
  return out.str();
}

CosetTable::CosetTable(const F2Matrix& h) : r_(h.rows()) {
  if (r_ > 24) throw ScaleError("coset analysis needs n - k <= 24");
  if (h.rank() != r_) throw InvalidInput("coset analysis needs a full-rank parity check");
  columns_ = column_syndromes(h);
  const std::uint64_t total = syndrome_count();
  constexpr std::uint8_t kUnseen = 0xff;
  weights_.assign(total, kUnseen);
  via_.assign(total, 0);
  weights_[0] = 0;
  std::vector<std::uint32_t> frontier{0}, next;
  mu_.push_back(1);
  while (!frontier.empty()) {
    next.clear();
    const auto w = static_cast<std::uint8_t>(mu_.size());
    for (auto s : frontier)
      for (std::uint32_t j = 0; j < columns_.size(); ++j) {
        auto t = s ^ columns_[j];
        if (weights_[t] != kUnseen) continue;
        weights_[t] = w;
        via_[t] = j;
        next.push_back(t);
      }
    if (next.empty()) break;
    mu_.push_back(next.size());
    std::swap(frontier, next);
  }

  const std::size_t rho = mu_.size() - 1;
  std::vector<std::optional<NeighbourProfile>> first(rho + 1);
  std::vector<bool> varies(rho + 1, false);
  for (std::uint32_t s = 0; s < total; ++s) {
    NeighbourProfile p;
    const unsigned w = weights_[s];
    for (auto col : columns_) {
      const unsigned u = weights_[s ^ col];
      if (u + 1 == w)
        ++p.down;
      else if (u == w)
        ++p.same;
      else
        ++p.up;
    }
    if (!first[w])
      first[w] = p;
    else if (!(*first[w] == p))
      varies[w] = true;
  }
  profiles_.resize(rho + 1);
  for (std::size_t w = 0; w <= rho; ++w)
    if (!varies[w]) profiles_[w] = first[w];
}

std::uint32_t CosetTable::syndrome_of(const F2Vector& x) const {
  if (x.size() != columns_.size()) throw DimensionError("syndrome_of: length mismatch");
  std::uint32_t s = 0;
  for (std::size_t j = 0; j < columns_.size(); ++j)
    if (x.get(j)) s ^= columns_[j];
  return s;
}

F2Vector CosetTable::leader(std::uint32_t syndrome) const {
  if (syndrome >= syndrome_count()) throw InvalidInput("leader: syndrome out of range");
  F2Vector x(columns_.size());
  while (syndrome != 0) {
    auto j = via_[syndrome];
    x.flip(j);
    syndrome ^= columns_[j];
  }
  return x;
}

bool CosetTable::completely_regular() const {
  return std::all_of(profiles_.begin(), profiles_.end(), [](const auto& p) { return p.has_value(); });
}

std::optional<IntersectionArray> CosetTable::intersection_array() const {
  if (!completely_regular()) return std::nullopt;
  IntersectionArray a;
  const std::size_t rho = covering_radius();
  for (std::size_t i = 0; i < rho; ++i) a.b.push_back(profiles_[i]->up);
  for (std::size_t i = 1; i <= rho; ++i) a.c.push_back(profiles_[i]->down);
  return a;
}

bool CosetTable::counting_identity_holds() const {
  auto a = intersection_array();
  if (!a) return false;
  for (std::size_t i = 0; i < a->b.size(); ++i)
    if (a->b[i] * mu_[i] != a->c[i] * mu_[i + 1]) return false;
  return true;
}

void CosetTable::write_csv(std::ostream& out) const {
  out << "syndrome_bits,weight,leader_bits\n";
  for (std::uint32_t s = 0; s < syndrome_count(); ++s) {
    for (std::size_t i = 0; i < r_; ++i) out << ((s >> i) & 1u ? '1' : '0');
    out << ',' << static_cast<unsigned>(weights_[s]) << ',' << leader(s).to_string() << '\n';
  }
}

CosetTable coset_analysis(const LinearCode& c) {
  F2Matrix h = c.parity_check();
  if (h.rank() != h.rows()) {
    RowEchelon ech(h.cols());
    for (const auto& r : h.row_vectors()) ech.insert(r);
    h = F2Matrix(ech.rows(), h.cols());
  }
  return CosetTable(h);
}

bool coset_classification_check(const SymplecticSpace& space, bool eps) {
  const F2Matrix h = characterization_parity_check(space, CodeFamily::sp(eps));
  const CosetTable table(h);
  const unsigned dim = space.dim();
  const Word label_mask = (Word{1} << dim) - 1;
  for (std::uint32_t s = 0; s < table.syndrome_count(); ++s) {
    const Word sum = s & label_mask;
    const bool odd = (s >> dim) & 1u;
    unsigned predicted;
    if (!odd)
      predicted = sum == 0 ? 0 : 2;
    else
      predicted = space.theta0_w(sum) == eps ? 1 : 3;
    if (table.weight(s) != predicted) return false;
  }
  return true;
}

F2Vector permute_coordinates(const F2Vector& x, const Permutation& p) {
  if (x.size() != p.degree()) throw DimensionError("permute_coordinates: degree mismatch");
  F2Vector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.get(i)) y.set(p[static_cast<Point>(i)]);
  return y;
}

bool code_automorphism_check(const LinearCode& c, const Permutation& p) {
  if (p.degree() != c.length()) throw DimensionError("code_automorphism_check: degree mismatch");
  for (const auto& r : c.basis().row_vectors())
    if (!c.contains(permute_coordinates(r, p))) return false;
  return true;
}

}  // namespace cg
