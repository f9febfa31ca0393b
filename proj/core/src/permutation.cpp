#include "cg/permutation.hpp"

#include <numeric>
#include <sstream>

#include "cg/errors.hpp"

namespace cg {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw InvalidInput("Permutation: image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::transposition(std::size_t degree, Point a, Point b) {
  if (a >= degree || b >= degree) throw InvalidInput("transposition: point out of range");
  Permutation p(degree);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]]) throw InvalidInput("from_cycles: cycles are not disjoint");
      used[c[i]] = true;
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& h) const {
  if (degree() != h.degree()) throw DimensionError("permutation product: degree mismatch");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[x] = h.images_[images_[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[images_[x]] = static_cast<Point>(x);
  return r;
}

Permutation Permutation::pow(unsigned k) const {
  Permutation result(degree());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[images_[x]] != x) return false;
  return true;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> s;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) s.push_back(static_cast<Point>(x));
  return s;
}

std::size_t Permutation::support_size() const {
  std::size_t c = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) c += images_[x] != x;
  return c;
}

bool Permutation::is_odd() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 1;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out << '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) out << ' ';
      out << y;
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

}  // namespace cg
