#include <gtest/gtest.h>

#include "magnus/certifier.hpp"
#include "magnus/errors.hpp"
#include "support/build.hpp"
#include "support/generators.hpp"

namespace magnus {
namespace {

using testing::qpoly;
using testing::Rng;
const Field Q = Field::rationals();

// A = k<x1, x2> / id(x2 - x1*x1).
AlgebraPresentation worked_algebra() {
  return {Q, 2, {qpoly(2, {{{2}, 1}, {{1, 1}, -1}})}};
}

CandidateSystem single(NcPoly g) { return {{std::move(g)}}; }

GenerationWitness worked_witness(const AlgebraPresentation& a,
                                 const NcPoly& phi2) {
  const auto sys = a.relation_system();
  Presentation d2(sys);
  d2.add(Scalar(Q, 1), Word{}, 1, Word{});
  GenerationWitness w;
  w.entries.push_back(WitnessEntry{qpoly(1, {{{1}, 1}}), Presentation(sys)});
  w.entries.push_back(WitnessEntry{phi2, d2});
  return w;
}

TEST(Certifier, LinearPartsExamples) {
  const auto a = worked_algebra();
  EXPECT_EQ(linear_parts_matrix(a, single(qpoly(2, {{{1}, 1}}))).beta,
            Matrix::identity(Q, 2));
  const auto mixed =
      linear_parts_matrix(a, single(qpoly(2, {{{1}, 1}, {{2}, 1}})));
  EXPECT_EQ(mixed.beta(0, 0), Scalar(Q, 1));
  EXPECT_EQ(mixed.beta(0, 1), Scalar(Q, 1));
  EXPECT_EQ(mixed.beta(1, 0), Scalar(Q, 0));
  EXPECT_EQ(mixed.beta(1, 1), Scalar(Q, 1));
  EXPECT_EQ(mixed.linear_parts[1], qpoly(2, {{{2}, 1}}));

  const AlgebraPresentation comm{Q, 2, {qpoly(2, {{{1, 2}, 1}, {{2, 1}, -1}})}};
  const auto zero_row = linear_parts_matrix(comm, single(qpoly(2, {{{1}, 1}})));
  EXPECT_TRUE(zero_row.beta(1, 0).is_zero());
  EXPECT_TRUE(zero_row.beta(1, 1).is_zero());
}

TEST(Certifier, RankAndInvertExamples) {
  EXPECT_EQ(rank_and_invert(Matrix::identity(Q, 2)).alpha->matrix(),
            Matrix::identity(Q, 2));
  Matrix beta = Matrix::identity(Q, 2);
  beta(0, 1) = Scalar(Q, 1);
  const auto check = rank_and_invert(beta);
  ASSERT_TRUE(check.passed());
  EXPECT_EQ(check.alpha->matrix()(0, 1), Scalar(Q, -1));
  beta(1, 1) = Scalar(Q, 0);
  beta(1, 0) = Scalar(Q, 0);
  const auto rejected = rank_and_invert(beta);
  EXPECT_FALSE(rejected.passed());
  EXPECT_EQ(rejected.rank, 1u);
  EXPECT_EQ(rejected.reason(), "rank 1 < 2");
}

TEST(Certifier, BuildPhiMixedExample) {
  const auto a = worked_algebra();
  const auto g = single(qpoly(2, {{{1}, 1}, {{2}, 1}}));
  const auto check = rank_and_invert(linear_parts_matrix(a, g).beta);
  const auto t = build_phi(*check.alpha, a, g);
  EXPECT_EQ(t.candidates[0], qpoly(2, {{{1}, 1}}));
  EXPECT_EQ(t.relations[0], qpoly(2, {{{2}, 1},
                                      {{1, 1}, -1},
                                      {{1, 2}, 1},
                                      {{2, 1}, 1},
                                      {{2, 2}, -1}}));
  EXPECT_TRUE(verify_eq3(t));

  const auto identity = build_phi(LinearMap::identity(Q, 2), a,
                                  single(qpoly(2, {{{1}, 1}})));
  EXPECT_EQ(identity.relations[0], a.relations[0]);
  EXPECT_TRUE(verify_eq3(identity));

  Matrix corrupted = check.alpha->matrix();
  corrupted(0, 1) = Scalar(Q, 1);
  EXPECT_FALSE(verify_eq3(build_phi(LinearMap(corrupted), a, g)));
}

TEST(Certifier, WitnessExamples) {
  const auto a = worked_algebra();
  const auto g = single(qpoly(2, {{{1}, 1}}));
  EXPECT_TRUE(verify_generation_witness(
      worked_witness(a, qpoly(1, {{{1, 1}, 1}})), a, g));
  EXPECT_FALSE(verify_generation_witness(
      worked_witness(a, qpoly(1, {{{1}, 1}})), a, g));

  // Missing entries stand for x_i = g_j only when g_j is literally x_i.
  GenerationWitness empty;
  empty.entries.resize(2);
  EXPECT_FALSE(verify_generation_witness(empty, a, g));
  const AlgebraPresentation two{Q, 3, {qpoly(3, {{{3}, 1}, {{1, 2}, -1}})}};
  const CandidateSystem xs{{qpoly(3, {{{1}, 1}}), qpoly(3, {{{2}, 1}})}};
  GenerationWitness partial;
  partial.entries.resize(3);
  Presentation d3(two.relation_system());
  d3.add(Scalar(Q, 1), Word{}, 1, Word{});
  partial.entries[2] = WitnessEntry{qpoly(2, {{{1, 2}, 1}}), d3};
  EXPECT_TRUE(verify_generation_witness(partial, two, xs));
}

TEST(Certifier, Verdicts) {
  const auto a = worked_algebra();
  const auto x1 = single(qpoly(2, {{{1}, 1}}));
  const auto w = worked_witness(a, qpoly(1, {{{1, 1}, 1}}));

  const auto full = certify_freeness(a, x1, &w);
  EXPECT_EQ(full.verdict, Verdict::FullFreenessCertified);
  EXPECT_EQ(full.witness, WitnessStatus::Verified);
  EXPECT_EQ(full.rank, 2u);

  const auto subalgebra = certify_freeness(a, single(qpoly(2, {{{1}, 1}, {{2}, 1}})));
  EXPECT_EQ(subalgebra.verdict, Verdict::FreeSubalgebraCertified);
  EXPECT_EQ(subalgebra.eq3, true);

  const auto assumed = certify_freeness(a, x1, nullptr, true);
  EXPECT_EQ(assumed.verdict, Verdict::FullFreenessCertified);
  EXPECT_EQ(assumed.witness, WitnessStatus::Assumed);

  const auto bad = worked_witness(a, qpoly(1, {{{1}, 1}}));
  EXPECT_EQ(certify_freeness(a, x1, &bad).verdict, Verdict::Inconclusive);

  const AlgebraPresentation comm{Q, 2, {qpoly(2, {{{1, 2}, 1}, {{2, 1}, -1}})}};
  const auto rejected = certify_freeness(comm, x1);
  EXPECT_EQ(rejected.verdict, Verdict::Rejected);
  EXPECT_EQ(rejected.rank, 1u);
  EXPECT_FALSE(rejected.reason.empty());
  EXPECT_EQ(to_string(Verdict::Rejected), "REJECTED");
}

TEST(Certifier, InputValidation) {
  const auto a = worked_algebra();
  EXPECT_THROW(certify_freeness(a, CandidateSystem{}), DomainError);
  EXPECT_THROW(certify_freeness(a, single(NcPoly(Q, 2))), DomainError);
  EXPECT_THROW(certify_freeness(AlgebraPresentation{Q, 2, {}},
                                CandidateSystem{{qpoly(2, {{{1}, 1}}),
                                                 qpoly(2, {{{2}, 1}})}}),
               DomainError);
}

TEST(Certifier, NormalizingPermutation) {
  EXPECT_EQ(normalizing_permutation(2, 1), (std::vector<Letter>{2, 3, 1}));
  const auto a = worked_algebra();
  const auto g = single(qpoly(2, {{{1}, 1}, {{2}, 1}}));
  const auto t =
      build_phi(*rank_and_invert(linear_parts_matrix(a, g).beta).alpha, a, g);
  const auto sys = normalized_system(t, 1);
  EXPECT_TRUE(sys->normalized());
  EXPECT_EQ(linear_part(sys->relation(1)), qpoly(2, {{{1}, 1}}));
}

TEST(Certifier, TransportPreservesEvaluation) {
  Rng rng(300);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.uniform(1, 2), k = rng.uniform(1, 2);
    const auto inst = testing::random_independent_instance(rng, Q, n, k);
    const auto check = rank_and_invert(inst.beta);
    ASSERT_TRUE(check.passed());
    const auto t = build_phi(*check.alpha, inst.algebra, inst.candidates);
    const auto sys = normalized_system(t, n);
    const auto src = inst.algebra.relation_system();
    Presentation p(src);
    for (int j = 0; j < 3; ++j) {
      p.add(testing::random_nonzero(rng, Q),
            testing::random_word(rng, n + k, 0, 2), rng.uniform(1, k),
            testing::random_word(rng, n + k, 0, 2));
    }
    const Presentation moved = transport_presentation(p, t, n, sys);
    const auto to = normalizing_permutation(n, k);
    ASSERT_EQ(evaluate(moved),
              permute_variables(apply_linear_map(*check.alpha, evaluate(p)), to,
                                n + k));
  }
}

TEST(Certifier, RandomInstancesSatisfyLinearIdentity) {
  for (const Field f : {Q, Field::prime(7)}) {
    Rng rng(301 + f.modulus());
    for (int trial = 0; trial < 100; ++trial) {
      const auto inst = testing::random_independent_instance(
          rng, f, rng.uniform(1, 3), rng.uniform(1, 2));
      const auto cert = certify_freeness(inst.algebra, inst.candidates);
      ASSERT_EQ(cert.verdict, Verdict::FreeSubalgebraCertified);
      ASSERT_EQ(cert.eq3, true);
      ASSERT_EQ(inst.beta * *cert.alpha, Matrix::identity(f, inst.beta.rows()));
    }
  }
}

}  // namespace
}  // namespace magnus
