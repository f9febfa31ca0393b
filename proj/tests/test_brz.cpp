#include <gtest/gtest.h>

#include "cg/brz.hpp"
#include "cg/errors.hpp"
#include "cg/symplectic.hpp"
#include "oracles.hpp"

using namespace cg;

TEST(Brz, BentFunctionIsTheSecondElementarySymmetricPolynomial) {
  for (std::size_t len : {4u, 6u, 8u})
    for (Word w = 0; w < (Word{1} << len); ++w) {
      const auto v = F2Vector::from_word(len, w);
      unsigned s = 0;
      for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) s += v.get(i) && v.get(j);
      ASSERT_EQ(brz_bent(v), s % 2 == 1);
    }
}

TEST(Brz, CodeParameters) {
  for (unsigned m = 2; m <= 4; ++m) {
    const auto c = brz_code(m);
    const std::size_t n = std::size_t{1} << (2 * m);
    EXPECT_EQ(c.length(), n);
    EXPECT_EQ(c.dimension(), n - 2 * m - 2);
  }
  EXPECT_THROW(brz_code(1), InvalidInput);
  EXPECT_THROW(brz_code(6), ScaleError);
}

TEST(Brz, EquivalenceWithTheAffineCode) {
  for (unsigned m = 2; m <= 3; ++m) {
    SCOPED_TRACE(m);
    const auto r = brz_equivalence(m);
    EXPECT_TRUE(r.form_identity);
    EXPECT_TRUE(r.same_code_for_q);
    EXPECT_TRUE(r.codes_equal);
    EXPECT_TRUE(r.a.is_invertible());
    EXPECT_FALSE(arf_invariant(r.q_form));
    // Independent check of theta_0(vA) = v Q v^T on every vector.
    for (Word w = 0; w < (Word{1} << (2 * m)); ++w) {
      const auto v = F2Vector::from_word(2 * m, w);
      ASSERT_EQ(oracle::theta0(r.a.left_multiply(v), m), quadratic_value(r.q_form, v));
    }
    // The upper triangle of Q is all ones.
    for (unsigned i = 0; i < 2 * m; ++i)
      for (unsigned j = i + 1; j < 2 * m; ++j) EXPECT_TRUE(r.q_form.get(i, j));
  }
}
