#include "cg/f2.hpp"

#include <algorithm>
#include <utility>

#include "cg/errors.hpp"

namespace cg {

namespace {

constexpr std::size_t kBits = F2Vector::kWordBits;

}  // namespace

F2Vector F2Vector::from_word(std::size_t length, Word bits) {
  if (length > kBits) throw DimensionError("from_word: length exceeds one word");
  if (length < kBits && (bits >> length) != 0) throw DimensionError("from_word: bits beyond length");
  F2Vector v(length);
  if (length > 0) v.words_[0] = bits;
  return v;
}

F2Vector F2Vector::from_string(std::string_view bits) {
  F2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw InvalidInput("bit string may only contain '0' and '1'");
  }
  return v;
}

F2Vector F2Vector::unit(std::size_t length, std::size_t i) {
  F2Vector v(length);
  v.set(i);
  return v;
}

F2Vector F2Vector::ones(std::size_t length) {
  F2Vector v(length);
  for (auto& w : v.words_) w = ~Word{0};
  if (length % kBits != 0) v.words_.back() &= (Word{1} << (length % kBits)) - 1;
  return v;
}

F2Vector::Word F2Vector::to_word() const {
  if (length_ > kBits) throw DimensionError("to_word: vector longer than one word");
  return words_.empty() ? 0 : words_[0];
}

std::string F2Vector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool F2Vector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t F2Vector::weight() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t F2Vector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * kBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return length_;
}

bool F2Vector::dot(const F2Vector& other) const {
  check_same_length(other);
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

F2Vector& F2Vector::operator+=(const F2Vector& other) {
  check_same_length(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool operator<(const F2Vector& a, const F2Vector& b) {
  if (a.length_ != b.length_) return a.length_ < b.length_;
  for (std::size_t w = a.words_.size(); w-- > 0;)
    if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
  return false;
}

void F2Vector::check_same_length(const F2Vector& other) const {
  if (length_ != other.length_)
    throw DimensionError("F2Vector length mismatch: " + std::to_string(length_) + " vs " +
                         std::to_string(other.length_));
}

// ---------------------------------------------------------------------------

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows, F2Vector(cols)), cols_(cols) {}

F2Matrix::F2Matrix(std::vector<F2Vector> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {
  for (const auto& r : rows_)
    if (r.size() != cols_) throw DimensionError("F2Matrix: ragged rows");
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

F2Matrix F2Matrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) return {};
  std::vector<F2Vector> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.push_back(F2Vector::from_string(r));
  std::size_t cols = v.front().size();
  return F2Matrix(std::move(v), cols);
}

void F2Matrix::append_row(F2Vector v) {
  if (rows_.empty() && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw DimensionError("append_row: length mismatch");
  rows_.push_back(std::move(v));
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (rows_[r].get(c)) t.set(c, r);
  return t;
}

F2Matrix F2Matrix::operator*(const F2Matrix& other) const {
  if (cols_ != other.rows()) throw DimensionError("matrix product: inner dimension mismatch");
  F2Matrix out(rows_.size(), other.cols());
  for (std::size_t r = 0; r < rows_.size(); ++r) out.rows_[r] = other.left_multiply(rows_[r]);
  return out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& other) const {
  if (rows() != other.rows() || cols_ != other.cols_) throw DimensionError("matrix sum: shape mismatch");
  F2Matrix out = *this;
  for (std::size_t r = 0; r < rows_.size(); ++r) out.rows_[r] += other.rows_[r];
  return out;
}

F2Vector F2Matrix::left_multiply(const F2Vector& v) const {
  if (v.size() != rows_.size()) throw DimensionError("vector-matrix product: length mismatch");
  F2Vector out(cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(i)) out += rows_[i];
  return out;
}

F2Vector F2Matrix::apply(const F2Vector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector product: length mismatch");
  F2Vector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].dot(v)) out.set(i);
  return out;
}

std::size_t F2Matrix::rank() const {
  RowEchelon ech(cols_);
  for (const auto& r : rows_) ech.insert(r);
  return ech.rank();
}

bool F2Matrix::is_invertible() const { return rows_.size() == cols_ && rank() == cols_; }

std::optional<F2Matrix> F2Matrix::inverse() const {
  if (rows_.size() != cols_) throw DimensionError("inverse: matrix not square");
  const std::size_t n = cols_;
  std::vector<F2Vector> a = rows_;
  std::vector<F2Vector> inv = identity(n).rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && !a[piv].get(col)) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && a[r].get(col)) {
        a[r] += a[col];
        inv[r] += inv[col];
      }
    }
  }
  return F2Matrix(std::move(inv), n);
}

std::vector<F2Vector> F2Matrix::kernel() const {
  RowEchelon ech(cols_);
  for (const auto& r : rows_) ech.insert(r);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : ech.pivots()) is_pivot[p] = true;
  std::vector<F2Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    F2Vector x(cols_);
    x.set(free);
    // Fully reduced rows: pivot coordinate equals the row's entry at `free`.
    for (std::size_t i = 0; i < ech.rank(); ++i)
      if (ech.rows()[i].get(free)) x.set(ech.pivots()[i]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<std::string> F2Matrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.to_string());
  return out;
}

// ---------------------------------------------------------------------------

F2Vector RowEchelon::reduce(F2Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v += rows_[i];
  return v;
}

bool RowEchelon::insert(F2Vector v) {
  if (v.size() != cols_) throw DimensionError("RowEchelon: length mismatch");
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  std::size_t p = v.first_set();
  for (auto& r : rows_)
    if (r.get(p)) r += v;
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

std::optional<LinearSolution> solve_rows(const F2Matrix& a, const F2Vector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve_rows: rhs length mismatch");
  // Augment each equation with its right-hand side as an extra column.
  const std::size_t n = a.cols();
  RowEchelon ech(n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    F2Vector aug(n + 1);
    for (std::size_t c = 0; c < n; ++c)
      if (a.get(i, c)) aug.set(c);
    if (b.get(i)) aug.set(n);
    ech.insert(std::move(aug));
  }
  for (auto p : ech.pivots())
    if (p == n) return std::nullopt;

  LinearSolution sol{F2Vector(n), {}};
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < ech.rank(); ++i) {
    is_pivot[ech.pivots()[i]] = true;
    if (ech.rows()[i].get(n)) sol.particular.set(ech.pivots()[i]);
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    F2Vector x(n);
    x.set(free);
    for (std::size_t i = 0; i < ech.rank(); ++i)
      if (ech.rows()[i].get(free)) x.set(ech.pivots()[i]);
    sol.kernel.push_back(std::move(x));
  }
  return sol;
}

}  // namespace cg
