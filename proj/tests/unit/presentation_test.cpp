#include <gtest/gtest.h>

#include <cstdlib>

#include "magnus/errors.hpp"
#include "magnus/presentation.hpp"
#include "support/build.hpp"
#include "support/generators.hpp"

namespace magnus {
namespace {

using testing::qpoly;
using testing::Rng;
const Field Q = Field::rationals();

// f1 = x1 + x3*x3, f2 = x2 over x1, x2, x3.
std::shared_ptr<const RelationSystem> three_var_system() {
  return std::make_shared<const RelationSystem>(
      Q, 3,
      std::vector<NcPoly>{qpoly(3, {{{1}, 1}, {{3, 3}, 1}}),
                          qpoly(3, {{{2}, 1}})});
}

Presentation three_var_presentation() {
  Presentation p(three_var_system());
  p.add(Scalar(Q, 1), Word{}, 1, Word{2});
  p.add(Scalar(Q, -1), Word{1}, 2, Word{});
  return p;
}

// k = 1, f1 = x1 + x2*x2 over x1, x2.
std::shared_ptr<const RelationSystem> square_system() {
  return std::make_shared<const RelationSystem>(
      Q, 2, std::vector<NcPoly>{qpoly(2, {{{1}, 1}, {{2, 2}, 1}})});
}

TEST(RelationSystem, NormalizationFlag) {
  EXPECT_TRUE(three_var_system()->normalized());
  EXPECT_EQ(three_var_system()->tail(1), qpoly(3, {{{3, 3}, 1}}));
  const RelationSystem unnormalized(
      Q, 2, std::vector<NcPoly>{qpoly(2, {{{2}, 1}, {{1, 1}, -1}})});
  EXPECT_FALSE(unnormalized.normalized());
  const RelationSystem scaled(Q, 2,
                              std::vector<NcPoly>{qpoly(2, {{{1}, 2}})});
  EXPECT_FALSE(scaled.normalized());
  EXPECT_THROW(RelationSystem(Q, 2, std::vector<NcPoly>{NcPoly(Q, 2)}),
               DomainError);
}

TEST(Presentation, MergesAndPrunes) {
  Presentation p(square_system());
  p.add(Scalar(Q, 2), Word{2}, 1, Word{});
  p.add(Scalar(Q, -2), Word{2}, 1, Word{});
  EXPECT_TRUE(p.empty());
  p.add(Scalar(Q, 1), Word{}, 1, Word{});
  p.add(Scalar(Q, 1), Word{}, 1, Word{});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.terms()[0].coefficient, Scalar(Q, 2));
  EXPECT_THROW(p.add(Scalar(Q, 1), Word{}, 2, Word{}), DomainError);
  EXPECT_THROW(p.add(Scalar(Q, 1), Word{3}, 1, Word{}), DomainError);
  EXPECT_THROW(p.add(Scalar(Field::prime(7), 1), Word{}, 1, Word{}),
               FieldMismatch);
}

TEST(Presentation, EvaluateExamples) {
  EXPECT_EQ(evaluate(three_var_presentation()), qpoly(3, {{{3, 3, 2}, 1}}));
  EXPECT_TRUE(evaluate(Presentation(three_var_system())).is_zero());
  Presentation bare(square_system());
  bare.add(Scalar(Q, 1), Word{}, 1, Word{});
  EXPECT_EQ(evaluate(bare), qpoly(2, {{{1}, 1}, {{2, 2}, 1}}));
}

TEST(Presentation, ParameterAndAchievers) {
  const Presentation p = three_var_presentation();
  EXPECT_EQ(parameter_tau(p), (Word{1, 2}));
  const auto achievers = tau_achievers(p);
  ASSERT_EQ(achievers.size(), 2u);
  const auto terms = p.terms();
  EXPECT_EQ(terms[achievers[0].term_index].relation, 1u);
  EXPECT_EQ(achievers[0].position, 1u);
  EXPECT_EQ(terms[achievers[1].term_index].relation, 2u);
  EXPECT_EQ(achievers[1].position, 2u);

  Presentation bare(square_system());
  bare.add(Scalar(Q, 1), Word{}, 1, Word{});
  EXPECT_EQ(parameter_tau(bare), Word{1});
  EXPECT_EQ(tau_achievers(bare).size(), 1u);
  EXPECT_THROW(parameter_tau(Presentation(square_system())), DomainError);
}

TEST(Presentation, ParameterOverUnnormalizedSystemUsesAllWords) {
  // f1 = x2 - x1*x1: m(f1) = x2, but the least candidate word is x1*x2*...
  auto sys = std::make_shared<const RelationSystem>(
      Q, 2, std::vector<NcPoly>{qpoly(2, {{{2}, 1}, {{1, 1}, -1}})});
  Presentation p(sys);
  p.add(Scalar(Q, 1), Word{2}, 1, Word{});
  EXPECT_EQ(parameter_tau(p), (Word{2, 2}));
  EXPECT_THROW(tau_achievers(p), DomainError);
}

TEST(Presentation, ImproveOnceWorkedExample) {
  const Presentation improved = improve_once(three_var_presentation());
  ASSERT_EQ(improved.size(), 1u);
  const PresentationTerm expected{Scalar(Q, 1), Word{3, 3}, 2, Word{}};
  EXPECT_EQ(improved.terms()[0], expected);
  EXPECT_EQ(parameter_tau(improved), (Word{3, 3, 2}));
  EXPECT_EQ(evaluate(improved), qpoly(3, {{{3, 3, 2}, 1}}));
}

TEST(Presentation, ImproveOncePreconditions) {
  Presentation bare(square_system());
  bare.add(Scalar(Q, 1), Word{}, 1, Word{});
  EXPECT_THROW(improve_once(bare), DomainError);
  EXPECT_THROW(improve_once(Presentation(square_system())), DomainError);
  Presentation zero(square_system());
  zero.add(Scalar(Q, 1), Word{2}, 1, Word{2});
  zero.add(Scalar(Q, -1), Word{2}, 1, Word{2});
  EXPECT_THROW(improve_once(zero), DomainError);
}

TEST(Presentation, CertifyWorkedExample) {
  const auto proof = certify_min_monomial(three_var_presentation());
  EXPECT_EQ(proof.min_monomial, (Word{3, 3, 2}));
  EXPECT_EQ(proof.steps, 1u);
  EXPECT_EQ(proof.step_bound, 39u);
  EXPECT_EQ(proof.tau_trace, (std::vector<Word>{{1, 2}, {3, 3, 2}}));
}

TEST(Presentation, CertifyAlreadyMinimal) {
  Presentation p(square_system());
  p.add(Scalar(Q, 1), Word{2}, 1, Word{});
  p.add(Scalar(Q, -1), Word{}, 1, Word{2});
  // s = x2*x1 - x1*x2; the cubic words cancel.
  EXPECT_EQ(evaluate(p), qpoly(2, {{{2, 1}, 1}, {{1, 2}, -1}}));
  const auto proof = certify_min_monomial(p);
  EXPECT_EQ(proof.min_monomial, (Word{1, 2}));
  EXPECT_EQ(proof.steps, 0u);
  EXPECT_EQ(proof.presentation.terms(), p.terms());
  EXPECT_TRUE(proof.min_monomial.contains_letter_at_most(1));
}

TEST(Presentation, CertifyBareTerm) {
  Presentation p(square_system());
  p.add(Scalar(Q, 3), Word{}, 1, Word{});
  EXPECT_EQ(certify_min_monomial(p).min_monomial, Word{1});
}

TEST(Presentation, TermCapIsAnError) {
  RewriteLimits limits;
  limits.max_terms = 0;
  EXPECT_THROW(certify_min_monomial(three_var_presentation(), limits),
               ResourceLimit);
  limits = RewriteLimits{};
  limits.max_steps = 0;
  EXPECT_THROW(certify_min_monomial(three_var_presentation(), limits),
               ResourceLimit);
}

TEST(Presentation, TermCapFromEnvironment) {
  ::setenv("MAGNUS_TERM_CAP", "17", 1);
  EXPECT_EQ(RewriteLimits::from_environment().max_terms, 17u);
  ::unsetenv("MAGNUS_TERM_CAP");
  EXPECT_EQ(RewriteLimits::from_environment().max_terms, 100000u);
}

Scalar achiever_sum(const Presentation& p) {
  const auto terms = p.terms();
  Scalar sum = Scalar::zero(p.system().field());
  for (const auto& a : tau_achievers(p)) sum += terms[a.term_index].coefficient;
  return sum;
}

class EngineProperties : public ::testing::TestWithParam<Field> {};

TEST_P(EngineProperties, RewriteInvariants) {
  const Field f = GetParam();
  Rng rng(200 + f.modulus());
  int exercised = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t nvars = rng.uniform(2, 4);
    const std::size_t k = rng.uniform(1, nvars - 1);
    const auto sys = testing::random_normalized_system(rng, f, nvars, k);
    const Presentation start = trial % 2 ? testing::random_presentation(rng, sys)
                                         : testing::cancelling_presentation(rng, sys);
    const NcPoly s = evaluate(start);
    if (s.is_zero()) continue;
    const Word m = min_monomial(s);
    ASSERT_LE(parameter_tau(start), m);

    Presentation current = start;
    std::size_t steps = 0;
    while (parameter_tau(current) < m) {
      ASSERT_TRUE(achiever_sum(current).is_zero());
      const Presentation next = improve_once(current);
      ASSERT_EQ(evaluate(next), s);
      ASSERT_GT(parameter_tau(next), parameter_tau(current));
      current = next;
      ++steps;
      ++exercised;
    }
    ASSERT_LE(steps, word_count_up_to(nvars, m.degree()));
    ASSERT_TRUE(m.contains_letter_at_most(static_cast<Letter>(k)));

    const auto proof = certify_min_monomial(start);
    ASSERT_EQ(proof.min_monomial, m);
    ASSERT_EQ(proof.steps, steps);
    ASSERT_EQ(proof.presentation.terms(), current.terms());
  }
  EXPECT_GT(exercised, 50);
}

INSTANTIATE_TEST_SUITE_P(Fields, EngineProperties,
                         ::testing::Values(Field::rationals(),
                                           Field::prime(7)),
                         [](const auto& info) {
                           return info.param.is_rational() ? std::string("Q")
                                                           : std::string("GF7");
                         });

}  // namespace
}  // namespace magnus
