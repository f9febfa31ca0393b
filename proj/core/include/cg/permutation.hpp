#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cg {

using Point = std::uint32_t;

/// Permutation of {0, ..., n-1} in image form: images()[x] = x^g.
///
/// Products act left to right, x^{gh} = (x^g)^h, so `g * h` applies g first.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Throws InvalidInput unless `images` is a bijection on 0..n-1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  static Permutation transposition(std::size_t degree, Point a, Point b);
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& h) const;
  Permutation& operator*=(const Permutation& h) { return *this = *this * h; }
  Permutation inverse() const;
  /// g^k for k >= 0.
  Permutation pow(unsigned k) const;

  bool is_identity() const;
  bool is_involution() const;
  std::vector<Point> support() const;
  std::size_t support_size() const;
  /// True for odd permutations.
  bool is_odd() const;
  /// Disjoint-cycle notation, e.g. "(0 3)(1 2)"; "()" for the identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

}  // namespace cg

template <>
struct std::hash<cg::Permutation> {
  std::size_t operator()(const cg::Permutation& p) const noexcept {
    std::size_t h = p.degree();
    for (auto x : p.images()) h = h * 1000003u ^ x;
    return h;
  }
};
