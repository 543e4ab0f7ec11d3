#include <gtest/gtest.h>

#include <vector>

#include "magnus/errors.hpp"
#include "magnus/linalg.hpp"
#include "magnus/poly.hpp"
#include "support/build.hpp"
#include "support/generators.hpp"

namespace magnus {
namespace {

using testing::qpoly;
using testing::Rng;
const Field Q = Field::rationals();

TEST(Word, DeglexExamples) {
  EXPECT_EQ(deglex_cmp(Word{1, 3}, Word{2, 2}), std::strong_ordering::less);
  EXPECT_EQ(deglex_cmp(Word{2}, Word{1, 1}), std::strong_ordering::less);
  EXPECT_EQ(deglex_cmp(Word{1, 2}, Word{1, 2}), std::strong_ordering::equal);
  EXPECT_EQ(deglex_cmp(Word{}, Word{1}), std::strong_ordering::less);
}

TEST(Word, Subwords) {
  const Word w{1, 2, 3, 4};
  EXPECT_EQ(w.subword(1, 2), (Word{2, 3}));
  EXPECT_EQ(w.subword(2), (Word{3, 4}));
  EXPECT_EQ(w.subword(4), Word{});
  EXPECT_EQ((Word{1} * Word{2, 3}), w.subword(0, 3));
  EXPECT_EQ(w.max_letter(), 4u);
  EXPECT_TRUE(w.contains_letter_at_most(1));
  EXPECT_FALSE((Word{3, 4}).contains_letter_at_most(2));
}

TEST(Word, CountsMatchEnumeration) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t total = 0;
    for (std::size_t d = 1; d <= 4; ++d) {
      const auto words = words_of_degree(n, d);
      total += words.size();
      EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
      EXPECT_EQ(word_count_up_to(n, d), total);
    }
  }
  EXPECT_EQ(word_count_up_to(3, 3), 39u);
}

// Naive recursive reference for deg-lex, independent of operator<=>.
bool reference_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

TEST(Word, MonomialOrderProperties) {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word a = testing::random_word(rng, 3, 0, 4);
    const Word b = testing::random_word(rng, 3, 0, 4);
    const Word c = testing::random_word(rng, 3, 0, 3);
    ASSERT_EQ(a < b, reference_less(a, b));
    ASSERT_EQ(a == b, !reference_less(a, b) && !reference_less(b, a));
    if (a < b) {
      ASSERT_LT(c * a, c * b);
      ASSERT_LT(a * c, b * c);
    }
  }
}

TEST(NcPoly, RingExamples) {
  const NcPoly x1 = qpoly(2, {{{1}, 1}});
  const NcPoly x2 = qpoly(2, {{{2}, 1}});
  EXPECT_EQ(poly_mul(x1 + x2, x1), qpoly(2, {{{1, 1}, 1}, {{2, 1}, 1}}));
  EXPECT_TRUE(poly_add(x1, poly_scale(Scalar(Q, -1), x1)).is_zero());
  EXPECT_EQ(poly_mul(x1 + x2, x1 + x2),
            qpoly(2, {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 1}}));
}

TEST(NcPoly, RejectsConstantsAndStrayLetters) {
  NcPoly p(Q, 2);
  EXPECT_THROW(p.add_term(Word{}, Scalar(Q, 1)), DomainError);
  EXPECT_THROW(p.add_term(Word{3}, Scalar(Q, 1)), DomainError);
  EXPECT_THROW(p.add_term(Word{1}, Scalar(Field::prime(7), 1)), FieldMismatch);
  EXPECT_THROW((void)(qpoly(2, {{{1}, 1}}) == qpoly(3, {{{1}, 1}})),
               FieldMismatch);
  // Zero coefficients are never stored.
  p.add_term(Word{1}, Scalar(Q, 0));
  EXPECT_TRUE(p.is_zero());
}

TEST(NcPoly, LinearPartExamples) {
  EXPECT_EQ(linear_part(qpoly(3, {{{1}, 1}, {{1, 2}, 1}, {{3}, 3}})),
            qpoly(3, {{{1}, 1}, {{3}, 3}}));
  EXPECT_TRUE(linear_part(qpoly(2, {{{1, 2}, 1}})).is_zero());
  EXPECT_EQ(linear_part(qpoly(2, {{{2}, 1}, {{1, 1}, -1}})), qpoly(2, {{{2}, 1}}));
}

TEST(NcPoly, MinMonomialExamples) {
  EXPECT_EQ(min_monomial(qpoly(2, {{{2}, 1}, {{1, 2}, 1}})), Word{2});
  EXPECT_EQ(min_monomial(qpoly(2, {{{2, 1}, 5}, {{1, 2}, -2}})), (Word{1, 2}));
  try {
    (void)min_monomial(NcPoly(Q, 2));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "m undefined for 0");
  }
}

TEST(NcPoly, MinHomogeneousPartExamples) {
  EXPECT_EQ(min_homogeneous_part(
                qpoly(3, {{{1, 2}, 1}, {{2, 1}, 1}, {{1, 1, 1}, 1}})),
            qpoly(3, {{{1, 2}, 1}, {{2, 1}, 1}}));
  EXPECT_EQ(min_homogeneous_part(qpoly(3, {{{1}, 1}})), qpoly(3, {{{1}, 1}}));
  EXPECT_EQ(min_homogeneous_part(qpoly(3, {{{3, 3, 2}, 1}})),
            qpoly(3, {{{3, 3, 2}, 1}}));
  EXPECT_THROW(min_homogeneous_part(NcPoly(Q, 3)), DomainError);
}

TEST(NcPoly, SubstituteExamples) {
  const NcPoly x1 = qpoly(2, {{{1}, 1}});
  const NcPoly x2 = qpoly(2, {{{2}, 1}});
  const NcPoly commutator = qpoly(2, {{{1, 2}, 1}, {{2, 1}, -1}});
  const std::vector<NcPoly> xs{x1, x2};
  EXPECT_EQ(substitute(commutator, xs), commutator);

  const NcPoly g = qpoly(2, {{{1}, 2}, {{1, 2}, 1}});
  EXPECT_EQ(substitute(qpoly(1, {{{1}, 1}}), std::vector<NcPoly>{g}), g);
  EXPECT_EQ(substitute(qpoly(1, {{{1, 1}, 1}}), std::vector<NcPoly>{x1 + x2}),
            qpoly(2, {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 1}}));
  EXPECT_THROW(substitute(commutator, std::vector<NcPoly>{x1}), DomainError);
}

TEST(NcPoly, TruncatedProductsAgreeWithTruncation) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const NcPoly a = testing::random_poly(rng, Q, 2, 4, 1, 3);
    const NcPoly b = testing::random_poly(rng, Q, 2, 4, 1, 3);
    for (std::size_t d = 1; d <= 5; ++d) {
      ASSERT_EQ(multiply_truncated(a, b, d), truncate(a * b, d));
    }
    const std::vector<NcPoly> args{a, b};
    const NcPoly phi = testing::random_poly(rng, Q, 2, 3, 1, 3);
    ASSERT_EQ(substitute_truncated(phi, args, 4),
              truncate(substitute(phi, args), 4));
  }
}

TEST(NcPoly, ApplyLinearMapExamples) {
  const NcPoly h = qpoly(2, {{{2}, 1}, {{1, 1}, -1}});
  EXPECT_EQ(apply_linear_map(LinearMap::identity(Q, 2), h), h);

  Matrix t(Q, 2, 2);  // x1 -> y1 - y2, x2 -> y2
  t(0, 0) = Scalar(Q, 1);
  t(0, 1) = Scalar(Q, -1);
  t(1, 0) = Scalar(Q, 0);
  t(1, 1) = Scalar(Q, 1);
  EXPECT_EQ(apply_linear_map(LinearMap(t), h),
            qpoly(2, {{{2}, 1},
                      {{1, 1}, -1},
                      {{1, 2}, 1},
                      {{2, 1}, 1},
                      {{2, 2}, -1}}));
  EXPECT_THROW(apply_linear_map(LinearMap::identity(Q, 3), h), DomainError);
}

class AlgebraProperties : public ::testing::TestWithParam<Field> {};

TEST_P(AlgebraProperties, MinMonomialIsMultiplicative) {
  const Field f = GetParam();
  Rng rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const NcPoly p = testing::random_nonzero_poly(rng, f, 3, 4, 1, 3);
    const NcPoly q = testing::random_nonzero_poly(rng, f, 3, 4, 1, 3);
    ASSERT_EQ(min_monomial(p * q), min_monomial(p) * min_monomial(q));
    for (const auto& [w, c] : p.terms()) ASSERT_GE(w, min_monomial(p));
  }
}

TEST_P(AlgebraProperties, SubstituteIsHomomorphism) {
  const Field f = GetParam();
  Rng rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<NcPoly> args{testing::random_poly(rng, f, 3, 3, 1, 2),
                                   testing::random_poly(rng, f, 3, 3, 1, 2)};
    const NcPoly phi = testing::random_poly(rng, f, 2, 3, 1, 2);
    const NcPoly psi = testing::random_poly(rng, f, 2, 3, 1, 2);
    ASSERT_EQ(substitute(phi + psi, args),
              substitute(phi, args) + substitute(psi, args));
    ASSERT_EQ(substitute(phi * psi, args),
              substitute(phi, args) * substitute(psi, args));
  }
}

TEST_P(AlgebraProperties, LinearPartCommutesWithLinearMaps) {
  const Field f = GetParam();
  Rng rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const LinearMap t(testing::random_invertible(rng, f, 3));
    const NcPoly p = testing::random_nonzero_poly(rng, f, 3, 5, 1, 3);
    ASSERT_EQ(linear_part(apply_linear_map(t, p)),
              apply_linear_map(t, linear_part(p)));
  }
}

// With min part of each argument equal to an independent linear form y_i,
// the minimal part of Phi(a) is M(y) for M the minimal part of Phi.
TEST_P(AlgebraProperties, MinimalPartLaw) {
  const Field f = GetParam();
  Rng rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.uniform(1, 3);
    const Matrix lead = testing::random_invertible(rng, f, n);
    std::vector<NcPoly> ys, args;
    for (std::size_t r = 0; r < n; ++r) {
      NcPoly y(f, n);
      for (std::size_t c = 0; c < n; ++c) {
        y.add_term(Word{static_cast<Letter>(c + 1)}, lead(r, c));
      }
      ys.push_back(y);
      args.push_back(y + testing::random_poly(rng, f, n, 3, 2, 3));
    }
    const NcPoly phi = testing::random_nonzero_poly(rng, f, n, 4, 1, 3);
    ASSERT_EQ(min_homogeneous_part(substitute(phi, args)),
              substitute(min_homogeneous_part(phi), ys));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, AlgebraProperties,
                         ::testing::Values(Field::rationals(),
                                           Field::prime(7)),
                         [](const auto& info) {
                           return info.param.is_rational() ? std::string("Q")
                                                           : std::string("GF7");
                         });

TEST(NcPoly, PermuteVariables) {
  const std::vector<Letter> to{2, 1};
  EXPECT_EQ(permute_variables(qpoly(2, {{{1, 2}, 1}, {{1}, 3}}), to, 2),
            qpoly(2, {{{2, 1}, 1}, {{2}, 3}}));
  EXPECT_EQ(permute_word(Word{1, 1, 2}, to), (Word{2, 2, 1}));
}

}  // namespace
}  // namespace magnus
