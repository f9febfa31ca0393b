#include <gtest/gtest.h>

#include <random>

#include "cg/errors.hpp"
#include "cg/f2.hpp"
#include "oracles.hpp"

using namespace cg;

namespace {

F2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  F2Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (bit(rng)) m.set(i, j);
  return m;
}

std::vector<std::vector<std::uint8_t>> to_rows(const F2Matrix& m) {
  std::vector<std::vector<std::uint8_t>> out(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.get(i, j);
  return out;
}

}  // namespace

TEST(F2Vector, StringPutsCoordinateZeroFirst) {
  auto v = F2Vector::from_string("1101");
  EXPECT_EQ(v.size(), 4u);
  EXPECT_TRUE(v.get(0));
  EXPECT_FALSE(v.get(2));
  EXPECT_EQ(v.to_word(), 0b1011u);
  EXPECT_EQ(v.to_string(), "1101");
  EXPECT_EQ(F2Vector::from_word(4, 0b1011).to_string(), "1101");
  EXPECT_THROW(F2Vector::from_string("10x"), InvalidInput);
}

TEST(F2Vector, ArithmeticAcrossWordBoundary) {
  F2Vector a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  b.set(100);
  const F2Vector s = a + b;
  EXPECT_EQ(s.weight(), 3u);
  EXPECT_TRUE(s.get(100));
  EXPECT_FALSE(s.get(64));
  EXPECT_TRUE(a.dot(b));
  EXPECT_EQ(s.first_set(), 0u);
  EXPECT_EQ(F2Vector(70).first_set(), 70u);
  EXPECT_EQ(F2Vector::ones(70).weight(), 70u);
  EXPECT_THROW(a + F2Vector(3), DimensionError);
}

TEST(F2Matrix, RankMatchesNaiveElimination) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 40);
    const auto m = random_matrix(rng, dim(rng), dim(rng), t % 3 == 0 ? 0.1 : 0.5);
    ASSERT_EQ(m.rank(), oracle::rank(to_rows(m)));
  }
}

TEST(F2Matrix, KernelIsRightKernelOfFullDimension) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(rng, 1 + t % 13, 5 + t % 30);
    const auto ker = m.kernel();
    EXPECT_EQ(ker.size(), m.cols() - m.rank());
    for (const auto& v : ker) EXPECT_TRUE(m.apply(v).is_zero());
    EXPECT_EQ(F2Matrix(ker, m.cols()).rank(), ker.size());
  }
}

TEST(F2Matrix, InverseRoundTrips) {
  std::mt19937_64 rng(13);
  int invertible = 0;
  for (int t = 0; t < 200; ++t) {
    const auto m = random_matrix(rng, 8, 8);
    const auto inv = m.inverse();
    ASSERT_EQ(inv.has_value(), m.rank() == 8);
    ASSERT_EQ(m.is_invertible(), inv.has_value());
    if (!inv) continue;
    ++invertible;
    EXPECT_EQ(m * *inv, F2Matrix::identity(8));
    EXPECT_EQ(*inv * m, F2Matrix::identity(8));
  }
  EXPECT_GT(invertible, 20);
}

TEST(F2Matrix, ProductsAgreeWithVectorActions) {
  std::mt19937_64 rng(14);
  const auto a = random_matrix(rng, 5, 7), b = random_matrix(rng, 7, 3);
  const auto ab = a * b;
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(ab.row(i), b.left_multiply(a.row(i)));
  const F2Vector v = F2Vector::from_word(7, 0b1010011);
  EXPECT_EQ(a.apply(v), a.transpose().left_multiply(v));
  EXPECT_THROW(a * a, DimensionError);
  EXPECT_EQ(F2Matrix::from_strings(a.to_strings()), a);
}

TEST(RowEchelon, InsertReportsNewDirections) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_matrix(rng, 20, 16, 0.3);
    RowEchelon e(16);
    std::size_t added = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const bool fresh = !e.contains(m.row(i));
      EXPECT_EQ(e.insert(m.row(i)), fresh);
      added += fresh;
      EXPECT_TRUE(e.contains(m.row(i)));
    }
    EXPECT_EQ(added, m.rank());
    EXPECT_EQ(e.rank(), m.rank());
    for (std::size_t i = 0; i < e.rank(); ++i) EXPECT_EQ(e.rows()[i].first_set(), e.pivots()[i]);
  }
}
