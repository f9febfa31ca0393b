#pragma once

// Bit-packed vectors and matrices over the two-element field.
//
// Coordinate i of a vector lives in bit (i % 64) of word (i / 64). When a
// vector fits in one machine word its integer encoding (`to_word`) gives
// coordinate i the weight 2^i; orderings and JSON encodings use that.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cg {

class F2Vector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  F2Vector() = default;
  explicit F2Vector(std::size_t length)
      : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

  static F2Vector from_word(std::size_t length, Word bits);
  /// Parses "0110..."; character 0 is coordinate 0.
  static F2Vector from_string(std::string_view bits);
  static F2Vector unit(std::size_t length, std::size_t i);
  static F2Vector ones(std::size_t length);

  std::size_t size() const { return length_; }
  std::size_t word_count() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  Word word(std::size_t w) const { return words_[w]; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool value = true) {
    Word mask = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  bool operator[](std::size_t i) const { return get(i); }

  /// Integer encoding; requires size() <= 64.
  Word to_word() const;
  std::string to_string() const;

  bool is_zero() const;
  std::size_t weight() const;
  /// Index of the lowest set coordinate, or size() when zero.
  std::size_t first_set() const;
  /// Standard dot product x.y over F2.
  bool dot(const F2Vector& other) const;

  F2Vector& operator+=(const F2Vector& other);
  friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a += b; }

  friend bool operator==(const F2Vector& a, const F2Vector& b) = default;
  /// Orders by length, then by integer encoding (most significant word first).
  friend bool operator<(const F2Vector& a, const F2Vector& b);

 private:
  void check_same_length(const F2Vector& other) const;

  std::size_t length_ = 0;
  std::vector<Word> words_;
};

class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);
  /// All rows must have length `cols`.
  F2Matrix(std::vector<F2Vector> rows, std::size_t cols);

  static F2Matrix identity(std::size_t n);
  static F2Matrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const F2Vector& row(std::size_t i) const { return rows_[i]; }
  F2Vector& row(std::size_t i) { return rows_[i]; }
  const std::vector<F2Vector>& row_vectors() const { return rows_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  void append_row(F2Vector v);

  F2Matrix transpose() const;
  F2Matrix operator*(const F2Matrix& other) const;
  F2Matrix operator+(const F2Matrix& other) const;
  /// Row vector times matrix: v M.
  F2Vector left_multiply(const F2Vector& v) const;
  /// Matrix times column vector: M v^T, returned as a vector of length rows().
  F2Vector apply(const F2Vector& v) const;

  std::size_t rank() const;
  bool is_invertible() const;
  std::optional<F2Matrix> inverse() const;
  /// Basis of {x : M x^T = 0}, i.e. the right kernel.
  std::vector<F2Vector> kernel() const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const F2Matrix& a, const F2Matrix& b) = default;

 private:
  std::vector<F2Vector> rows_;
  std::size_t cols_ = 0;
};

/// Reduced row echelon form built incrementally. Rows are kept fully
/// reduced against each other so membership tests are a single sweep.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<F2Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the current rows.
  F2Vector reduce(F2Vector v) const;
  bool contains(const F2Vector& v) const { return reduce(v).is_zero(); }
  /// Adds v to the span; returns false if it was already there.
  bool insert(F2Vector v);

 private:
  std::size_t cols_;
  std::vector<F2Vector> rows_;
  std::vector<std::size_t> pivots_;
};

struct LinearSolution {
  F2Vector particular;
  std::vector<F2Vector> kernel;
};

/// Solves x A^T = b, i.e. <x, rows_i> = b_i for every row of `a`.
/// Returns nullopt when inconsistent.
std::optional<LinearSolution> solve_rows(const F2Matrix& a, const F2Vector& b);

}  // namespace cg

template <>
struct std::hash<cg::F2Vector> {
  std::size_t operator()(const cg::F2Vector& v) const noexcept {
    std::size_t h = v.size();
    for (auto w : v.words()) h = h * 0x9e3779b97f4a7c15ULL ^ (w + (h << 6) + (h >> 2));
    return h;
  }
};
