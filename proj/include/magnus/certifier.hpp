#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magnus/linalg.hpp"
#include "magnus/poly.hpp"
#include "magnus/presentation.hpp"

namespace magnus {

/// k<x_1..x_N> / id(h_1..h_k), non-unital.
struct AlgebraPresentation {
  Field field;
  std::size_t num_vars = 0;
  std::vector<NcPoly> relations;

  std::size_t num_relations() const noexcept { return relations.size(); }
  /// Throws DomainError unless 1 <= k < N and every relation is a nonzero
  /// polynomial over (field, num_vars).
  void validate() const;
  std::shared_ptr<const RelationSystem> relation_system() const;
};

/// Candidate generators g_1..g_n.
struct CandidateSystem {
  std::vector<NcPoly> generators;

  std::size_t size() const noexcept { return generators.size(); }
};

/// x_i = Phi_i(g_1..g_n) + d_i with d_i given by a presentation over h.
struct WitnessEntry {
  NcPoly phi;  // over n slot variables
  Presentation remainder;
};

struct GenerationWitness {
  /// Index i-1 holds the entry for x_i. A missing entry stands for
  /// Phi_i = z_j with d_i = 0 when g_j is literally x_i, and fails
  /// verification otherwise.
  std::vector<std::optional<WitnessEntry>> entries;
};

enum class Verdict {
  FreeSubalgebraCertified,
  FullFreenessCertified,
  Rejected,
  Inconclusive,
};

std::string_view to_string(Verdict v);

struct LinearParts {
  Matrix beta;                    // row j: coordinates of y_j in the x-basis
  std::vector<NcPoly> linear_parts;  // y_1..y_N
};

/// y_j = L g_j for j <= n, y_{n+j} = L h_j.
LinearParts linear_parts_matrix(const AlgebraPresentation& algebra,
                                const CandidateSystem& candidates);

struct RankCheck {
  std::size_t rank = 0;
  std::size_t dimension = 0;
  std::optional<LinearMap> alpha;  // beta^{-1}, present iff full rank

  bool passed() const noexcept { return alpha.has_value(); }
  std::string reason() const;
};

RankCheck rank_and_invert(const Matrix& beta);

/// The instance after the change of variables phi(x_i) = sum_r alpha_ir y_r,
/// read over the y-alphabet.
struct TransformedInstance {
  LinearMap alpha;
  std::vector<NcPoly> candidates;  // phi g_1..phi g_n
  std::vector<NcPoly> relations;   // phi h_1..phi h_k
};

TransformedInstance build_phi(const LinearMap& alpha,
                              const AlgebraPresentation& algebra,
                              const CandidateSystem& candidates);

/// L(phi g_j) = y_j for j = 1..n+k.
bool verify_eq3(const TransformedInstance& transformed);

/// Checks substitute(Phi_i, g) + evaluate(d_i) = x_i exactly for every i.
bool verify_generation_witness(const GenerationWitness& witness,
                               const AlgebraPresentation& algebra,
                               const CandidateSystem& candidates);

enum class WitnessStatus { None, Verified, Failed, Assumed };

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  std::size_t rank = 0;
  std::size_t dimension = 0;
  Matrix beta;
  std::optional<Matrix> alpha;
  std::vector<NcPoly> phi_candidates;
  std::vector<NcPoly> phi_relations;
  std::optional<bool> eq3;
  WitnessStatus witness = WitnessStatus::None;
  std::vector<std::string> assumptions;
  std::string reason;
};

/// linear_parts_matrix -> rank_and_invert -> build_phi -> verify_eq3.
/// A passing rank check certifies that g_1..g_n are algebraically
/// independent in A; a verified witness or assume_generation upgrades this
/// to freeness of A itself. A witness that fails verification yields
/// Inconclusive. Throws InternalError if L(phi g_j) = y_j fails after a rank pass.
Certificate certify_freeness(const AlgebraPresentation& algebra,
                             const CandidateSystem& candidates,
                             const GenerationWitness* witness = nullptr,
                             bool assume_generation = false);

/// Letter permutation sending y_{n+j} to position j and y_i (i <= n) to
/// position k+i, so the transformed relations become a normalized system.
std::vector<Letter> normalizing_permutation(std::size_t n, std::size_t k);

/// Relabeled phi h_1..phi h_k as a normalized relation system.
std::shared_ptr<const RelationSystem> normalized_system(
    const TransformedInstance& transformed, std::size_t n);

/// Pushes a presentation over h through phi and the relabeling:
/// c p h_j q -> c phi(p) f_j phi(q), expanded into words.
Presentation transport_presentation(
    const Presentation& presentation, const TransformedInstance& transformed,
    std::size_t n, std::shared_ptr<const RelationSystem> normalized);

}  // namespace magnus
